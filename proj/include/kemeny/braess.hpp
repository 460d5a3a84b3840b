#pragma once

// Braess edges: exact single-edge tests, brute-force censuses for arbitrary
// graphs, and the counting formulas for paths, spiders and brooms.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kemeny/closed_forms.hpp"
#include "kemeny/exact_oracle.hpp"
#include "kemeny/family.hpp"
#include "kemeny/graph.hpp"

namespace kemeny {

enum class Category { None, B1, B2, B3 };

inline std::string to_string(Category c) {
  switch (c) {
    case Category::B1: return "B1";
    case Category::B2: return "B2";
    case Category::B3: return "B3";
    default: return "none";
  }
}

using Classifier = std::function<Category(const Edge&)>;

struct BraessEntry {
  Edge edge;
  Rational delta;
  bool braess = false;
  Category category = Category::None;

  friend bool operator==(const BraessEntry&, const BraessEntry&) = default;
};

struct BraessCensus {
  std::optional<FamilySpec> spec;
  int order = 0;
  std::vector<BraessEntry> entries;  // lexicographic by edge
  std::map<Category, long> totals;   // Braess edges per category

  long braess_count() const {
    long c = 0;
    for (const auto& [cat, n] : totals) c += n;
    return c;
  }
  long count(Category c) const {
    auto it = totals.find(c);
    return it == totals.end() ? 0 : it->second;
  }
  std::vector<Edge> braess_edges() const {
    std::vector<Edge> out;
    for (const auto& e : entries)
      if (e.braess) out.push_back(e.edge);
    return out;
  }
};

namespace detail {

inline void tally(BraessCensus& c) {
  c.totals.clear();
  for (const auto& e : c.entries)
    if (e.braess) ++c.totals[e.category];
}

}  // namespace detail

/// Exact delta for adding {u,v}; throws unless {u,v} is a non-edge.
inline BraessEntry is_braess(const Graph& g, Vertex u, Vertex v, const Rational& base) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw DomainError("is_braess needs two distinct vertices");
  if (g.has_edge(u, v)) throw DuplicateEdgeError("{" + std::to_string(u) + "," + std::to_string(v) + "} is already an edge");
  BraessEntry out;
  out.edge = Edge(u, v);
  out.delta = kemeny(add_edge(g, u, v)).kemeny - base;
  out.braess = out.delta.sign() > 0;
  return out;
}

inline BraessEntry is_braess(const Graph& g, Vertex u, Vertex v) {
  return is_braess(g, u, v, kemeny(g).kemeny);
}

/// Brute force over every non-edge, split across `parallelism` threads.
inline BraessCensus census(const Graph& g, unsigned parallelism = 1, const Classifier& classify = {}) {
  const std::vector<Edge> todo = non_edges(g);
  const Rational base = kemeny(g).kemeny;
  BraessCensus out;
  out.order = g.order();
  out.entries.resize(todo.size());
  const std::size_t workers = std::clamp<std::size_t>(parallelism, 1, std::max<std::size_t>(todo.size(), 1));
  auto run = [&](std::size_t w) {
    for (std::size_t i = w; i < todo.size(); i += workers) {
      out.entries[i] = is_braess(g, todo[i].u, todo[i].v, base);
      if (classify) out.entries[i].category = classify(todo[i]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  detail::tally(out);
  return out;
}

inline BraessCensus census(const FamilySpec& spec, unsigned parallelism = 1, const Classifier& classify = {}) {
  BraessCensus out = census(build(spec), parallelism, classify);
  out.spec = spec;
  return out;
}

// ---- paths ---------------------------------------------------------------

struct PathCensusTerm {
  long l = 0;
  QuadraticSurd A;
  BigInt count;  // floor(A)+1 chords on one side
};

struct PathCensusFormula {
  long k = 0;
  std::vector<PathCensusTerm> per_l;  // includes the boundary term when it is a cycle length
  BigInt total;
};

/// A(l) for P_k as an exact surd (k-l)/2 - sqrt(R).
inline QuadraticSurd path_A(long l, long k) {
  const BigInt K = k;
  const BigInt L = l;
  const BigInt num = (3 * L * L - 7 * L + 3) * K * K - 2 * (L * L * L - 3 * L * L + L) * K - 3 * L * L * (L - 1);
  const Rational radicand(num, 12 * (L * L - L + 1));
  if (radicand.sign() < 0) throw InvariantError("negative radicand in A(l)");
  return QuadraticSurd(Rational(k - l, 2), -1, radicand);
}

/// Number of Braess edges of P_k from A(l). The boundary term at
/// l = floor(sqrt k)+1 only enters when that is a cycle length (l >= 3).
inline PathCensusFormula path_census_formula(long k) {
  detail::require(k >= 3, "path_census_formula needs k >= 3");
  PathCensusFormula out;
  out.k = k;
  const long r = static_cast<long>(isqrt(BigInt(k)));
  for (long l = 3; l <= r + 1; ++l) {
    QuadraticSurd A = path_A(l, k);
    BigInt c = A.floor() + 1;
    if (l == r + 1 && c < 0) c = 0;
    out.total += 2 * c;
    out.per_l.push_back({l, std::move(A), std::move(c)});
  }
  return out;
}

/// Every chord i <= ceil(k/2) < j of P_k lowers kappa.
inline bool path_center_nonbraess_check(long k) {
  detail::require(k >= 3, "path_center_nonbraess_check needs k >= 3");
  const Graph g = detail::path_graph(static_cast<int>(k));
  const Rational base = kemeny(g).kemeny;
  const long mid = (k + 1) / 2;
  for (long i = 1; i <= mid; ++i)
    for (long j = std::max(mid + 1, i + 2); j <= k; ++j)
      if (is_braess(g, static_cast<Vertex>(i), static_cast<Vertex>(j), base).delta.sign() >= 0) return false;
  return true;
}

/// Smallest k for which P_k has a Braess chord closing an l-cycle.
inline long path_cycle_threshold(long l) {
  detail::require(l >= 3, "path_cycle_threshold needs l >= 3");
  return static_cast<long>(floor_of(Rational(l * l) - Rational(3 * l, 4) + Rational(7, 16))) + 1;
}

// ---- spiders -------------------------------------------------------------

/// Vertex of S_{a,b} playing position t of P_{2a+1} (legs 1 and 2 through the centre).
inline Vertex spider_lift(long a, long b, long t) {
  detail::require(a >= 1 && b >= 2 && t >= 1 && t <= 2 * a + 1, "spider_lift needs 1 <= t <= 2a+1");
  if (t <= a) return static_cast<Vertex>(t);
  if (t == a + 1) return static_cast<Vertex>(a * b + 1);
  return static_cast<Vertex>(3 * a + 2 - t);
}

struct SpiderBounds {
  Rational lower;  // (b/2) B(P_{2a+1})
  BigInt upper;    // b Gamma(a)
  BigInt gamma;
};

inline Rational spider_X(long a, long l) {
  return Rational(6 * a * l - 2 * l * l * l + 2 * l, 6 * (l * l - l + 1));
}

inline BigInt spider_gamma(long a) {
  detail::require(a >= 1, "spider_gamma needs a >= 1");
  const long top = static_cast<long>(ceil_sqrt(BigInt(3 * a + 1))) - 1;
  BigInt g = 0;
  for (long l = 3; l <= top; ++l) g += ceil_of(spider_X(a, l));
  return g;
}

inline SpiderBounds spider_census_bounds(long a, long b) {
  detail::require(a >= 2 && b >= 2, "spider_census_bounds needs a >= 2, b >= 2");
  SpiderBounds out;
  out.gamma = spider_gamma(a);
  out.upper = b * out.gamma;
  out.lower = Rational(b, 2) * Rational(path_census_formula(2 * a + 1).total);
  return out;
}

namespace detail {

// Leg index of a non-centre spider vertex, 0 for the centre.
inline long spider_leg(long a, long b, Vertex v) { return v == a * b + 1 ? 0 : (v - 1) / a + 1; }

}  // namespace detail

/// Every chord whose cycle passes through the centre lowers kappa.
inline bool spider_center_nonbraess_check(long a, long b) {
  detail::require(a >= 2 && b >= 2, "spider_center_nonbraess_check needs a >= 2, b >= 2");
  const Graph g = detail::spider_graph(static_cast<int>(a), static_cast<int>(b));
  const Rational base = kemeny(g).kemeny;
  for (const Edge& e : non_edges(g)) {
    const long lu = detail::spider_leg(a, b, e.u);
    const long lv = detail::spider_leg(a, b, e.v);
    if (lu != 0 && lv != 0 && lu == lv) continue;
    if (is_braess(g, e.u, e.v, base).delta.sign() >= 0) return false;
  }
  return true;
}

// ---- brooms --------------------------------------------------------------

/// Category of a non-edge of build(Broom(k,p)): path 1..k, pendants k+1..k+p.
inline Classifier broom_classifier(long k, long p) {
  detail::require(k >= 1 && p >= 2, "broom needs k >= 1, p >= 2");
  return [k](const Edge& e) {
    if (k == 1) return Category::B1;
    const bool pu = e.u > k;
    const bool pv = e.v > k;
    if (pu && pv) return Category::B1;
    if (pu || pv) return Category::B2;
    return Category::B3;
  };
}

/// Census of B_{k,p} from the closed forms, same order as the brute force.
inline BraessCensus broom_census_fast(long k, long p) {
  detail::require(k >= 4 && p >= 2, "broom_census_fast needs k >= 4, p >= 2");
  BraessCensus out;
  out.spec = FamilySpec{family::Broom{static_cast<int>(k), static_cast<int>(p)}};
  out.order = static_cast<int>(k + p);
  const Rational twin = broom_pendant_pair_delta(k, p);
  std::vector<Rational> pendant(static_cast<std::size_t>(k));  // by path vertex w
  for (long w = 1; w < k; ++w) pendant[static_cast<std::size_t>(w)] = broom_pendant_chord_delta(k, p, k + 2 - w);
  const long n = k + p;
  for (long u = 1; u <= n; ++u) {
    for (long v = u + 1; v <= n; ++v) {
      BraessEntry e;
      e.edge = Edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (u > k) {
        e.category = Category::B1;
        e.delta = twin;
      } else if (v > k) {
        if (u == k) continue;
        e.category = Category::B2;
        e.delta = pendant[static_cast<std::size_t>(u)];
      } else {
        if (v == u + 1) continue;
        e.category = Category::B3;
        e.delta = broom_path_chord_delta(k, p, u - 1, v - u + 1);
      }
      e.braess = e.delta.sign() > 0;
      out.entries.push_back(std::move(e));
    }
  }
  detail::tally(out);
  return out;
}

/// Integer bracket around L_k: N(lo) > 0 >= N(hi), hi = lo+1, inside (sqrt k, sqrt 3k).
inline std::pair<long, long> broom_L_k(long k, long p) {
  detail::require(k >= 4 && p >= 2, "broom_L_k needs k >= 4, p >= 2");
  const long lo_bound = static_cast<long>(isqrt(BigInt(k)));        // floor sqrt k
  const long hi_bound = static_cast<long>(ceil_sqrt(BigInt(3 * k)));  // ceil sqrt 3k
  for (long l = lo_bound; l < hi_bound; ++l) {
    if (broom_N(l, k, p) > 0 && broom_N(l + 1, k, p) <= 0) return {l, l + 1};
  }
  throw BracketError("no sign change of N(l," + std::to_string(k) + "," + std::to_string(p) + ") between sqrt(k) and sqrt(3k)");
}

struct BroomCounts {
  long k = 0;
  long p = 0;
  BigInt b1;
  BigInt b2;
  BigInt b3;
  std::pair<long, long> L_k;
  BigInt total() const { return b1 + b2 + b3; }
};

/// B1, B2, B3 without listing edges: twins by formula, B2 by an l-scan
/// stopped at the first non-Braess cycle length once k >= 6, B3 from the root counts
/// over 3 <= l <= lo(L_k).
inline BroomCounts broom_braess_counts(long k, long p) {
  detail::require(k >= 4 && p >= 2, "broom_braess_counts needs k >= 4, p >= 2");
  BroomCounts out;
  out.k = k;
  out.p = p;
  out.b1 = BigInt(p) * (p - 1) / 2;
  for (long l = 3; l <= k + 1; ++l) {
    if (broom_pendant_chord_numerator(k, p, l).sign() > 0) {
      out.b2 += p;
    } else if (k >= 6) {
      break;
    }
  }
  out.L_k = broom_L_k(k, p);
  for (long l = 3; l <= std::min(k, out.L_k.first); ++l) out.b3 += broom_path_braess_count(k, p, l);
  return out;
}

}  // namespace kemeny
