#pragma once

// Exact ground truth for spanning-tree counts, 2-tree forest counts,
// Kemeny's constant and vertex moments of arbitrary connected graphs.
//
// Two independent routes are provided:
//   * kemeny():      grounded Laplacian (vertex n deleted), sparse LDL^T with
//                    minimum-degree ordering, selected inversion for the
//                    resistance diagonal; kappa = d^T F d / (4 m tau).
//   * kemeny_mfpt(): mean first passage times from the fundamental matrix
//                    (I - P + 1 pi^T)^{-1}, inverted by fraction-free
//                    Gauss-Jordan; kappa = sum_j m_ij pi_j for every i.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "kemeny/cut_vertex.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/numeric.hpp"

namespace kemeny {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// ---- fraction-free elimination --------------------------------------------

/// Determinant by Bareiss elimination with row pivoting.
inline BigInt bareiss_determinant(Matrix<BigInt> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sgn > 0 ? a[n - 1][n - 1] : BigInt(-a[n - 1][n - 1]);
}

/// Fraction-free Gauss-Jordan on [A | I]. Returns (p, X) with A X = p I,
/// where p = +-det(A) and every division is exact.
inline std::pair<BigInt, Matrix<BigInt>> bareiss_inverse(const Matrix<BigInt>& a) {
  const std::size_t n = a.size();
  Matrix<BigInt> m(n, std::vector<BigInt>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) throw SingularSystemError("singular matrix in fraction-free inversion");
      std::swap(m[k], m[r]);
    }
    const BigInt pivot = m[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const BigInt factor = m[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        m[i][j] = (pivot * m[i][j] - factor * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = pivot;
  }
  Matrix<BigInt> x(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) x[i][j] = std::move(m[i][n + j]);
  }
  return {prev, std::move(x)};
}

inline Matrix<BigInt> laplacian(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  Matrix<BigInt> lap(n, std::vector<BigInt>(n));
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u - 1);
    const auto v = static_cast<std::size_t>(e.v - 1);
    lap[u][v] -= 1;
    lap[v][u] -= 1;
    lap[u][u] += 1;
    lap[v][v] += 1;
  }
  return lap;
}

/// Number of spanning trees: determinant of the Laplacian with vertex n's
/// row and column deleted.
inline BigInt tree_count(const Graph& g) {
  Matrix<BigInt> lap = laplacian(g);
  lap.pop_back();
  for (auto& row : lap) row.pop_back();
  return bareiss_determinant(std::move(lap));
}

// ---- sparse LDL^T of the grounded Laplacian ---------------------------------

/// LDL^T factorization of the Laplacian with vertex n grounded, eliminated in
/// minimum-degree order (ties broken by smallest label). Trees and unicyclic
/// graphs factor without fill.
class GroundedLaplacianFactor {
 public:
  explicit GroundedLaplacianFactor(const Graph& g) : n_(g.order()), size_(static_cast<std::size_t>(g.order() - 1)) {
    symbolic(g);
    numeric(g);
  }

  /// det of the grounded Laplacian = product of pivots.
  BigInt tree_count() const {
    Rational prod = 1;
    for (const Rational& d : pivot_) prod *= d;
    if (!is_integer(prod)) throw InvariantError("pivot product is not an integer");
    return numerator(prod);
  }

  /// Solves L_grounded x = b for b indexed by vertex 1..n-1 (index v-1).
  std::vector<Rational> solve(const std::vector<Rational>& rhs) const {
    std::vector<Rational> y(size_);
    for (std::size_t p = 0; p < size_; ++p) y[p] = rhs[static_cast<std::size_t>(vertex_at_[p] - 1)];
    for (std::size_t p = 0; p < size_; ++p) {
      if (y[p] == 0) continue;
      for (std::size_t t = 0; t < struct_[p].size(); ++t) y[struct_[p][t]] -= lower_[p][t] * y[p];
    }
    for (std::size_t p = 0; p < size_; ++p) y[p] /= pivot_[p];
    for (std::size_t p = size_; p-- > 0;) {
      for (std::size_t t = 0; t < struct_[p].size(); ++t) y[p] -= lower_[p][t] * y[struct_[p][t]];
    }
    std::vector<Rational> x(size_);
    for (std::size_t p = 0; p < size_; ++p) x[static_cast<std::size_t>(vertex_at_[p] - 1)] = std::move(y[p]);
    return x;
  }

  /// Diagonal of the inverse grounded Laplacian, indexed by vertex-1
  /// (i.e. effective resistance from each vertex to vertex n).
  std::vector<Rational> inverse_diagonal() const {
    std::vector<Rational> zdiag(size_);
    std::vector<std::vector<Rational>> zoff(size_);
    auto z = [&](std::size_t a, std::size_t b) -> const Rational& {
      if (a == b) return zdiag[a];
      if (a > b) std::swap(a, b);
      return zoff[a][index_in_struct(a, b)];
    };
    for (std::size_t k = size_; k-- > 0;) {
      const auto& s = struct_[k];
      zoff[k].assign(s.size(), Rational(0));
      for (std::size_t jj = 0; jj < s.size(); ++jj) {
        Rational acc = 0;
        for (std::size_t ii = 0; ii < s.size(); ++ii) acc -= z(s[jj], s[ii]) * lower_[k][ii];
        zoff[k][jj] = std::move(acc);
      }
      Rational diag = Rational(1) / pivot_[k];
      for (std::size_t ii = 0; ii < s.size(); ++ii) diag -= lower_[k][ii] * zoff[k][ii];
      zdiag[k] = std::move(diag);
    }
    std::vector<Rational> out(size_);
    for (std::size_t p = 0; p < size_; ++p) out[static_cast<std::size_t>(vertex_at_[p] - 1)] = std::move(zdiag[p]);
    return out;
  }

 private:
  std::size_t index_in_struct(std::size_t col, std::size_t row) const {
    const auto& s = struct_[col];
    const auto it = std::lower_bound(s.begin(), s.end(), row);
    return static_cast<std::size_t>(it - s.begin());
  }

  void symbolic(const Graph& g) {
    // elimination graph on vertices 1..n-1
    std::vector<std::vector<char>> adj(size_, std::vector<char>(size_, 0));
    for (const Edge& e : g.edges()) {
      if (e.v == n_) continue;
      adj[static_cast<std::size_t>(e.u - 1)][static_cast<std::size_t>(e.v - 1)] = 1;
      adj[static_cast<std::size_t>(e.v - 1)][static_cast<std::size_t>(e.u - 1)] = 1;
    }
    std::vector<int> degree(size_, 0);
    for (std::size_t a = 0; a < size_; ++a) degree[a] = std::accumulate(adj[a].begin(), adj[a].end(), 0);
    std::vector<char> done(size_, 0);
    std::vector<std::vector<std::size_t>> later_neighbors(size_);
    vertex_at_.resize(size_);
    position_.assign(size_, 0);
    for (std::size_t step = 0; step < size_; ++step) {
      std::size_t best = size_;
      for (std::size_t a = 0; a < size_; ++a) {
        if (!done[a] && (best == size_ || degree[a] < degree[best])) best = a;
      }
      done[best] = 1;
      vertex_at_[step] = static_cast<Vertex>(best + 1);
      position_[best] = step;
      std::vector<std::size_t> nb;
      for (std::size_t a = 0; a < size_; ++a) {
        if (!done[a] && adj[best][a]) nb.push_back(a);
      }
      for (std::size_t a : nb) {
        --degree[a];
        for (std::size_t b : nb) {
          if (a != b && !adj[a][b]) {
            adj[a][b] = 1;
            ++degree[a];
          }
        }
      }
      later_neighbors[best] = std::move(nb);
    }
    struct_.assign(size_, {});
    for (std::size_t a = 0; a < size_; ++a) {
      auto& s = struct_[position_[a]];
      for (std::size_t b : later_neighbors[a]) s.push_back(position_[b]);
      std::sort(s.begin(), s.end());
    }
  }

  void numeric(const Graph& g) {
    // work_[p] holds the strictly-lower column entries aligned with struct_[p]
    pivot_.assign(size_, Rational(0));
    lower_.assign(size_, {});
    for (std::size_t p = 0; p < size_; ++p) lower_[p].assign(struct_[p].size(), Rational(0));
    for (Vertex v = 1; v < n_; ++v) pivot_[position_[static_cast<std::size_t>(v - 1)]] = g.degree(v);
    for (const Edge& e : g.edges()) {
      if (e.v == n_) continue;
      std::size_t a = position_[static_cast<std::size_t>(e.u - 1)];
      std::size_t b = position_[static_cast<std::size_t>(e.v - 1)];
      if (a > b) std::swap(a, b);
      lower_[a][index_in_struct(a, b)] = -1;
    }
    for (std::size_t k = 0; k < size_; ++k) {
      const Rational& dk = pivot_[k];
      if (dk == 0) throw SingularSystemError("zero pivot in grounded Laplacian");
      const auto& s = struct_[k];
      // lower_[k] currently holds A(s_i, k); A(s_i,s_j) -= A(s_i,k) A(s_j,k) / D_k
      for (std::size_t ii = 0; ii < s.size(); ++ii) {
        const Rational scaled = lower_[k][ii] / dk;
        pivot_[s[ii]] -= scaled * lower_[k][ii];
        for (std::size_t jj = ii + 1; jj < s.size(); ++jj) {
          lower_[s[ii]][index_in_struct(s[ii], s[jj])] -= scaled * lower_[k][jj];
        }
      }
      for (auto& entry : lower_[k]) entry /= dk;
    }
  }

  int n_;
  std::size_t size_;
  std::vector<Vertex> vertex_at_;             // elimination position -> vertex
  std::vector<std::size_t> position_;         // vertex-1 -> elimination position
  std::vector<std::vector<std::size_t>> struct_;  // later positions coupled to each pivot
  std::vector<std::vector<Rational>> lower_;  // unit-lower factor entries aligned with struct_
  std::vector<Rational> pivot_;
};

// ---- forest matrix -------------------------------------------------------

struct ForestMatrix {
  Matrix<BigInt> entries;  // entries[i-1][j-1] = f_{i,j}
  BigInt tree_count;

  const BigInt& at(Vertex i, Vertex j) const {
    return entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
};

/// F_G via f_{i,j} = tau * r_{i,j} from exact grounded-Laplacian solves.
inline ForestMatrix forest_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  ForestMatrix out{Matrix<BigInt>(n, std::vector<BigInt>(n)), BigInt(1)};
  if (n == 1) return out;
  const GroundedLaplacianFactor factor(g);
  out.tree_count = factor.tree_count();
  // inverse grounded Laplacian, padded with a zero row/column for vertex n
  Matrix<Rational> inv(n, std::vector<Rational>(n));
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::vector<Rational> rhs(n - 1);
    rhs[c] = 1;
    auto col = factor.solve(rhs);
    for (std::size_t r = 0; r + 1 < n; ++r) inv[r][c] = std::move(col[r]);
  }
  const Rational tau(out.tree_count);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational f = tau * (inv[i][i] + inv[j][j] - 2 * inv[i][j]);
      if (!is_integer(f)) throw InvariantError("non-integer 2-forest count; solver bug");
      out.entries[i][j] = numerator(f);
      out.entries[j][i] = out.entries[i][j];
    }
  }
  return out;
}

/// Literal enumeration of spanning trees and 2-tree spanning forests.
/// Exponential; limited to n <= 8.
inline ForestMatrix forest_matrix_enumerated(const Graph& g) {
  const int n = g.order();
  detail::require(n <= 8, "forest enumeration is limited to n <= 8");
  const auto& edges = g.edges();
  const int m = g.size();
  ForestMatrix out{Matrix<BigInt>(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n))),
                   BigInt(0)};
  auto find = [](std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  if (n == 1) {
    out.tree_count = 1;
    return out;
  }
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int bits = std::popcount(mask);
    if (bits != n - 1 && bits != n - 2) continue;
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    for (int e = 0; e < m && acyclic; ++e) {
      if (!(mask & (1u << e))) continue;
      const int a = find(parent, edges[static_cast<std::size_t>(e)].u);
      const int b = find(parent, edges[static_cast<std::size_t>(e)].v);
      if (a == b) acyclic = false;
      parent[static_cast<std::size_t>(a)] = b;
    }
    if (!acyclic) continue;
    if (bits == n - 1) {
      out.tree_count += 1;
      continue;
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (find(parent, i) != find(parent, j)) {
          out.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] += 1;
          out.entries[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] += 1;
        }
      }
    }
  }
  return out;
}

// ---- Kemeny's constant -----------------------------------------------------

struct KemenyReport {
  int order = 0;
  Rational kemeny;
  BigInt tree_count;
  int edge_count = 0;
  BigInt dfd;                     // d^T F d
  std::vector<Rational> moments;  // moments[v-1] = mu(G, v)

  const Rational& moment(Vertex v) const { return moments.at(static_cast<std::size_t>(v - 1)); }
};

inline KemenyReport kemeny(const Graph& g) {
  detail::require(g.size() >= 1, "Kemeny's constant needs at least one edge");
  const auto n = static_cast<std::size_t>(g.order());
  const GroundedLaplacianFactor factor(g);
  const BigInt tau = factor.tree_count();
  const auto deg = g.degrees();
  const long two_m = 2L * g.size();

  std::vector<Rational> res_diag = factor.inverse_diagonal();
  res_diag.emplace_back(0);  // grounded vertex
  std::vector<Rational> rhs(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) rhs[i] = deg[i];
  std::vector<Rational> gd = factor.solve(rhs);
  gd.emplace_back(0);

  Rational weighted_diag = 0;  // sum_i d_i G_ii
  Rational quad = 0;           // d^T G d
  for (std::size_t i = 0; i < n; ++i) {
    weighted_diag += deg[i] * res_diag[i];
    quad += deg[i] * gd[i];
  }
  const Rational resistance_sum = 2 * two_m * weighted_diag - 2 * quad;  // sum_ij d_i d_j r_ij

  KemenyReport report;
  report.order = g.order();
  report.tree_count = tau;
  report.edge_count = g.size();
  const Rational dfd = Rational(tau) * resistance_sum;
  if (!is_integer(dfd)) throw InvariantError("d^T F d is not an integer; solver bug");
  report.dfd = numerator(dfd);
  report.kemeny = resistance_sum / (2 * two_m);
  report.moments.resize(n);
  for (std::size_t v = 0; v < n; ++v) report.moments[v] = weighted_diag + two_m * res_diag[v] - 2 * gd[v];
  return report;
}

// ---- mean first passage times ------------------------------------------------

struct MfptTable {
  Matrix<Rational> m;        // m[i-1][j-1], zero diagonal
  std::vector<Rational> pi;  // stationary distribution

  const Rational& at(Vertex i, Vertex j) const {
    return m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
};

struct MfptResult {
  MfptTable table;
  Rational kemeny;
};

/// Mean first passage times of the simple random walk.
///
/// With M = 2m L + d d^T = 2m D (I - P + 1 pi^T), the fundamental matrix is
/// Z = M^{-1} 2m D and m_ij = (z_jj - z_ij) / pi_j = 4 m^2 (Minv_jj - Minv_ij).
/// Throws InvariantError if sum_j m_ij pi_j differs between start states.
inline MfptResult kemeny_mfpt(const Graph& g) {
  detail::require(g.size() >= 1, "mean first passage times need at least one edge");
  const auto n = static_cast<std::size_t>(g.order());
  const auto deg = g.degrees();
  const long two_m = 2L * g.size();
  Matrix<BigInt> mat = laplacian(g);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mat[i][j] = two_m * mat[i][j] + deg[i] * deg[j];
  }
  const auto [scale, adj] = bareiss_inverse(mat);
  const BigInt four_m_sq = BigInt(two_m) * two_m;

  MfptResult out;
  out.table.m.assign(n, std::vector<Rational>(n));
  out.table.pi.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.table.pi[j] = Rational(deg[j], two_m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) out.table.m[i][j] = Rational(four_m_sq * (adj[j][j] - adj[i][j]), scale);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Rational k = 0;
    for (std::size_t j = 0; j < n; ++j) k += out.table.m[i][j] * out.table.pi[j];
    if (i == 0) {
      out.kemeny = k;
    } else if (k != out.kemeny) {
      throw InvariantError("sum_j m_ij pi_j depends on the start state");
    }
  }
  return out;
}

// ---- cut-vertex composition -----------------------------------------------

inline CutSummary cut_summary(const Graph& g, Vertex v) {
  g.check_vertex(v);
  if (g.size() == 0) return {};
  const KemenyReport rep = kemeny(g);
  const Rational num = Rational(rep.tree_count) * rep.moment(v);
  if (!is_integer(num)) throw InvariantError("tau * mu is not an integer");
  return {rep.tree_count, rep.edge_count, rep.dfd, numerator(num)};
}

/// kappa(G~) - kappa(G) for G = g1 (+)_{v1,v2} g2 and G~ its copy with g1
/// replaced by g1_tilde (g1 plus one edge), from branch quantities only.
inline Rational kemeny_diff_cut(const Graph& g1, const Graph& g1_tilde, Vertex v1, const Graph& g2, Vertex v2) {
  detail::require(g1_tilde.order() == g1.order() && g1_tilde.size() == g1.size() + 1,
                  "g1_tilde must be g1 plus one edge");
  g2.check_vertex(v2);
  auto values = [](const KemenyReport& r, Vertex v) {
    return BranchValues{r.kemeny, r.moment(v), BigInt(r.edge_count)};
  };
  const BranchValues second = g2.size() == 0 ? BranchValues{0, 0, 0} : values(kemeny(g2), v2);
  return cut_vertex_delta(values(kemeny(g1), v1), values(kemeny(g1_tilde), v1), second);
}

}  // namespace kemeny
