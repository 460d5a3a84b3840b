#pragma once

// Independent reference computations used only by the tests.

#include <random>
#include <vector>

#include "kemeny/graph.hpp"
#include "kemeny/numeric.hpp"

namespace kemeny::testing {

using RMatrix = std::vector<std::vector<Rational>>;

/// Dense rational inverse by Gauss-Jordan with partial pivoting on nonzero.
inline RMatrix dense_inverse(RMatrix a) {
  const std::size_t n = a.size();
  RMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (a[r][k] == 0) ++r;
    std::swap(a[k], a[r]);
    std::swap(inv[k], inv[r]);
    const Rational p = a[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k][j] /= p;
      inv[k][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Rational f = a[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

/// Effective resistances from the Moore-Penrose pseudoinverse (L + J/n)^{-1} - J/n.
inline RMatrix resistance_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  RMatrix a(n, std::vector<Rational>(n, Rational(1, static_cast<long>(n))));
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u - 1);
    const auto v = static_cast<std::size_t>(e.v - 1);
    a[u][u] += 1;
    a[v][v] += 1;
    a[u][v] -= 1;
    a[v][u] -= 1;
  }
  const RMatrix x = dense_inverse(std::move(a));
  RMatrix r(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r[i][j] = x[i][i] + x[j][j] - 2 * x[i][j];
  }
  return r;
}

/// Kemeny's constant as sum_ij d_i d_j r_ij / (4m).
inline Rational kemeny_by_resistance(const Graph& g) {
  const RMatrix r = resistance_matrix(g);
  const auto d = g.degrees();
  Rational s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) s += d[i] * d[j] * r[i][j];
  }
  return s / (4 * g.size());
}

/// mu(G,v) = sum_i d_i r_iv.
inline Rational moment_by_resistance(const Graph& g, Vertex v) {
  const RMatrix r = resistance_matrix(g);
  const auto d = g.degrees();
  Rational s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += d[i] * r[i][static_cast<std::size_t>(v - 1)];
  return s;
}

/// Tree on 1..n decoded from a Pruefer sequence of length n-2.
inline Graph tree_from_pruefer(int n, const std::vector<int>& seq) {
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int x : seq) ++degree[static_cast<std::size_t>(x)];
  std::vector<Edge> edges;
  for (int x : seq) {
    for (int leaf = 1; leaf <= n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        edges.emplace_back(leaf, x);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(x)];
        break;
      }
    }
  }
  int a = 0;
  for (int v = 1; v <= n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (a == 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
      }
    }
  }
  return Graph(n, std::move(edges));
}

/// Random connected graph: random spanning tree plus each other pair with probability p.
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::vector<int> seq(static_cast<std::size_t>(n > 2 ? n - 2 : 0));
  std::uniform_int_distribution<int> pick(1, n);
  for (int& x : seq) x = pick(rng);
  const Graph tree = n == 1 ? Graph::single_vertex() : tree_from_pruefer(n, seq);
  std::vector<Edge> edges = tree.edges();
  std::bernoulli_distribution coin(p);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (!tree.has_edge(u, v) && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace kemeny::testing
