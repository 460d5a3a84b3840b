// Acceptance suite: one PASS/FAIL line per criterion. Tolerances come from
// the settings file given as argv[1].

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "kemeny/asymptotics.hpp"
#include "kemeny/braess.hpp"
#include "kemeny/closed_forms.hpp"
#include "kemeny/config.hpp"
#include "kemeny/exact_oracle.hpp"
#include "kemeny/family.hpp"
#include "oracles.hpp"

namespace kemeny {
namespace {

// Records the first few failures of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  void note(const std::string& s) { info_.push_back(s); }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  long checks() const { return checks_; }
  long failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::vector<std::string>& info() const { return info_; }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> notes_;
  std::vector<std::string> info_;
};

std::string str(long x) { return std::to_string(x); }

std::string fmt(double x, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

double dbl(const Real& x) { return x.convert_to<double>(); }

Rational oracle_delta(const Graph& g, Vertex u, Vertex v) {
  return kemeny(add_edge(g, u, v)).kemeny - kemeny(g).kemeny;
}

Graph path(long k) { return build(family::Path{static_cast<int>(k)}); }
Graph spider(long a, long b) { return build(family::Spider{static_cast<int>(a), static_cast<int>(b)}); }
Graph broom(long k, long p) { return build(family::Broom{static_cast<int>(k), static_cast<int>(p)}); }

// 1
void oracle_consistency(Check& c) {
  long trees = 0;
  for (int n = 2; n <= 8; ++n) {
    const int len = n - 2;
    std::vector<int> seq(static_cast<std::size_t>(len), 1);
    while (true) {
      const Graph t = testing::tree_from_pruefer(n, seq);
      const auto mfpt = kemeny_mfpt(t);
      c.expect(kemeny(t).kemeny == mfpt.kemeny, "tree n=" + str(n) + " #" + str(trees));
      ++trees;
      int pos = len - 1;
      while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n) seq[static_cast<std::size_t>(pos--)] = 1;
      if (pos < 0) break;
      ++seq[static_cast<std::size_t>(pos)];
    }
  }
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> order(2, 7);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int rep = 0; rep < 500; ++rep) {
    const Graph g = testing::random_connected(order(rng), density(rng), rng);
    c.expect(kemeny(g).kemeny == kemeny_mfpt(g).kemeny, "random graph #" + str(rep));
  }
  c.note(str(trees) + " labelled trees, 500 random graphs");
}

// 2
void closed_forms_equal_oracle(Check& c) {
  for (long k = 2; k <= 50; ++k) {
    const auto r = kemeny(path(k));
    c.expect(r.kemeny == path_kemeny(k), "path kappa k=" + str(k));
    for (long v = 1; v <= k; ++v) c.expect(r.moment(static_cast<Vertex>(v)) == path_moment(k, v), "path mu k=" + str(k));
  }
  for (long n = 3; n <= 20; ++n) {
    const auto r = kemeny(build(family::Star{static_cast<int>(n)}));
    c.expect(r.kemeny == star_kemeny(n), "star n=" + str(n));
    for (long v = 1; v <= n; ++v) c.expect(r.moment(static_cast<Vertex>(v)) == star_moment(n, v), "star mu n=" + str(n));
  }
  for (long a = 1; a <= 6; ++a) {
    for (long b = 2; b <= 6; ++b) {
      const auto r = kemeny(spider(a, b));
      c.expect(r.kemeny == spider_kemeny(a, b), "spider " + str(a) + "," + str(b));
      c.expect(r.moment(static_cast<Vertex>(a * b + 1)) == spider_center_moment(a, b), "spider mu");
    }
  }
  for (long n = 3; n <= 12; ++n) {
    for (long l = 3; l <= n; ++l) {
      const auto r = kemeny(build(family::Lollipop{static_cast<int>(l), static_cast<int>(n)}));
      c.expect(r.kemeny == lollipop_kemeny(l, n), "lollipop " + str(l) + "," + str(n));
      c.expect(r.moment(static_cast<Vertex>(n - 1)) == lollipop_moment_k(l, n), "lollipop mu " + str(l) + "," + str(n));
    }
  }
  for (long k = 3; k <= 12; ++k) {
    const Rational base = path_kemeny(k);
    for (long i = 1; i <= k; ++i) {
      for (long j = i + 2; j <= k; ++j) {
        const Graph g = add_edge(path(k), static_cast<Vertex>(i), static_cast<Vertex>(j));
        const PathChordParams chord(k, i, j);
        c.expect(kemeny(g).kemeny == path_chord_kemeny(chord), "chord kappa");
        c.expect(kemeny(g).kemeny - base == path_braess_delta(chord.s(), chord.l(), k), "chord delta");
        const ForestMatrix f = forest_matrix(g);
        for (long p = 1; p <= k; ++p)
          for (long q = 1; q <= k; ++q)
            c.expect(f.at(static_cast<Vertex>(p), static_cast<Vertex>(q)) == unicyclic_forest_entry(k, i, j, p, q),
                     "forest entry k=" + str(k) + " {" + str(i) + "," + str(j) + "} (" + str(p) + "," + str(q) + ")");
      }
    }
  }
  for (long k = 3; k <= 10; ++k) {
    for (long p = 2; p <= 4; ++p) {
      const Graph g = broom(k, p);
      for (long l = 3; l <= k + 1; ++l) {
        const Rational d = oracle_delta(g, static_cast<Vertex>(k + 1), static_cast<Vertex>(k + 2 - l));
        c.expect(d == broom_pendant_chord_delta(k, p, l), "pendant chord structured " + str(k) + "," + str(p) + "," + str(l));
        c.expect(d == broom_pendant_chord_delta_expanded(k, p, l), "pendant chord expanded");
      }
      if (k < 4) continue;
      for (long i = 1; i <= k; ++i) {
        for (long j = i + 2; j <= k; ++j) {
          const Rational d = oracle_delta(g, static_cast<Vertex>(i), static_cast<Vertex>(j));
          c.expect(d == broom_path_chord_delta(k, p, i - 1, j - i + 1), "broom path chord D");
          c.expect(d == broom_path_chord_delta_structured(k, p, i - 1, j - i + 1), "broom path chord structured");
        }
      }
    }
  }
}

// 3
void path_census(Check& c) {
  c.expect(path_census_formula(7).total == 0, "B(P7) = 0");
  c.expect(path_census_formula(8).total == 2, "B(P8) = 2");
  for (long k = 3; k <= 60; ++k) {
    const long brute = census(path(k)).braess_count();
    c.expect(path_census_formula(k).total == brute, "k=" + str(k) + " brute=" + str(brute));
  }
}

// 4
void path_center(Check& c) {
  for (long k = 3; k <= 40; ++k) c.expect(path_center_nonbraess_check(k), "k=" + str(k));
}

// 5
void path_thresholds(Check& c) {
  const long expected[] = {8, 14, 22};
  for (long l = 3; l <= 5; ++l) {
    const long t = path_cycle_threshold(l);
    c.expect(t == expected[l - 3], "threshold l=" + str(l) + " got " + str(t));
    auto cycles_of_length = [l](long k) {
      long n = 0;
      for (const Edge& e : census(path(k)).braess_edges())
        if (e.v - e.u + 1 == l) ++n;
      return n;
    };
    c.expect(cycles_of_length(t - 1) == 0, "l=" + str(l) + " Braess at k=" + str(t - 1));
    c.expect(cycles_of_length(t) >= 1, "l=" + str(l) + " none at k=" + str(t));
  }
}

// 6
void spider_no_braess(Check& c) {
  for (long b = 2; b <= 8; ++b) c.expect(census(spider(2, b)).braess_count() == 0, "S(2," + str(b) + ")");
  for (long a = 2; a <= 6; ++a)
    for (long b = 2; b <= 4; ++b) c.expect(spider_center_nonbraess_check(a, b), "centre a=" + str(a) + " b=" + str(b));
}

// 7
void spider_bounds(Check& c) {
  for (long a = 2; a <= 8; ++a) {
    const auto path_braess = census(path(2 * a + 1)).braess_edges();
    for (long b = 2; b <= 5; ++b) {
      const auto bounds = spider_census_bounds(a, b);
      const auto s = census(spider(a, b));
      const long count = s.braess_count();
      const std::string tag = "a=" + str(a) + " b=" + str(b) + " B=" + str(count);
      c.expect(bounds.lower <= count && BigInt(count) <= bounds.upper, tag);
      if (a == 4) c.expect(count == b && bounds.lower == b && bounds.upper == b, "a=4 equality " + tag);
      const auto spider_braess = s.braess_edges();
      for (const Edge& e : path_braess) {
        const Edge lifted(spider_lift(a, b, e.u), spider_lift(a, b, e.v));
        c.expect(std::binary_search(spider_braess.begin(), spider_braess.end(), lifted), "lift " + tag);
      }
    }
  }
}

// 8
void spider_one_sum(Check& c) {
  for (int b1 = 2; b1 <= 5; ++b1) {
    for (int b2 = 2; b2 <= 5; ++b2) {
      const auto s = census(one_sum_spec(family::Spider{1, b1}, b1 + 1, family::Spider{2, b2}, 2 * b2 + 1));
      c.expect(s.braess_count() == b1 * (b1 - 1) / 2, "b1=" + str(b1) + " b2=" + str(b2));
      for (const Edge& e : s.braess_edges()) c.expect(e.v <= b1, "outside pendant set");
    }
  }
}

// 9
void broom_suite(Check& c) {
  for (long k = 4; k <= 15; ++k)
    for (long p = 2; p <= 6; ++p)
      c.expect(census(broom(k, p), 1, broom_classifier(k, p)).count(Category::B1) == p * (p - 1) / 2,
               "B1 k=" + str(k) + " p=" + str(p));
  for (long k = 3; k <= 10; ++k)
    for (long p = k; p <= 10; ++p)
      c.expect(census(broom(k, p), 1, broom_classifier(k, p)).count(Category::B2) == 0,
               "B2 k=" + str(k) + " p=" + str(p));

  // Pendant-to-path deltas indexed by cycle length, from the formula or the oracle.
  auto check_pendant_lemmas = [&c](long k, long p, const std::function<Rational(long)>& delta, const std::string& src) {
    const std::string tag = src + " k=" + str(k) + " p=" + str(p);
    if (k >= 5) {
      for (long l = 3; l + 1 <= (k + 1) / 2; ++l) c.expect(delta(l + 1) < delta(l), "decreasing in l " + tag);
      for (long l = 3; l <= k + 1; ++l) {
        c.expect(lollipop_moment_k(l, k + 1) - (k * k - 2 * k + 2) < 0, "second term " + tag);
        if (path_braess_delta(k + 1 - l, l, k + 1).sign() <= 0) c.expect(delta(l).sign() <= 0, "path to broom " + tag);
      }
    }
    if (k >= 6) {
      for (long l = 3; l <= k + 1; ++l) {
        if ((l - 1) * (l - 1) >= k) c.expect(delta(l).sign() < 0, "l >= sqrt(k)+1 " + tag);
        if (delta(l).sign() < 0)
          for (long s = l; s <= k + 1; ++s) c.expect(delta(s).sign() < 0, "l implies s " + tag);
      }
    }
    for (long l = 3; l <= k + 1; ++l)
      if (broom_b2_sufficient(k, p, l)) c.expect(delta(l).sign() > 0, "sufficient k " + tag + " l=" + str(l));
  };
  for (long k = 3; k <= 30; ++k)
    for (long p = 2; p <= 6; ++p)
      check_pendant_lemmas(k, p, [k, p](long l) { return broom_pendant_chord_delta_expanded(k, p, l); }, "formula");
  for (long k = 3; k <= 12; ++k) {
    for (long p = 2; p <= 5; ++p) {
      const Graph g = broom(k, p);
      const Rational base = kemeny(g).kemeny;
      std::vector<Rational> d(static_cast<std::size_t>(k + 2));
      for (long l = 3; l <= k + 1; ++l)
        d[static_cast<std::size_t>(l)] = is_braess(g, static_cast<Vertex>(k + 1), static_cast<Vertex>(k + 2 - l), base).delta;
      check_pendant_lemmas(k, p, [&d](long l) { return d[static_cast<std::size_t>(l)]; }, "oracle");
    }
  }
  for (long k = 4; k <= 12; ++k) {
    for (long p = 2; p <= 5; ++p) {
      const auto fast = broom_census_fast(k, p);
      const auto slow = census(broom(k, p), 1, broom_classifier(k, p));
      c.expect(fast.entries == slow.entries && fast.totals == slow.totals, "fast census k=" + str(k) + " p=" + str(p));
    }
  }
  // Trend rows are informational only.
  std::vector<std::pair<long, long>> schedule;
  for (long j = 10; j <= 14; ++j) schedule.emplace_back(1L << j, 2);
  for (long j = 10; j <= 12; ++j) schedule.emplace_back(1L << j, (1L << j) / 2);
  for (const auto& r : broom_b3_trend(schedule)) {
    c.note("trend (not asserted) k=" + str(r.k) + " p=" + str(r.p) + " B2=" + r.b2.str() + " B3=" + r.b3.str() +
           " B3/(k ln k)=" + fmt(r.ratio, 4));
  }
}

// 10
void constants(Check& c, const Settings& tol) {
  const double series_tol = tol.number("series_tol");
  const auto lc = limit_constants(series_tol);
  const auto t1 = t1_infinity(series_tol);
  const double s1 = dbl(lc.s1.value);
  const double lim = dbl(lc.path_limit);
  const double t1v = dbl(t1.value);
  const double t1g = dbl(t1.value + lc.gamma.value) - 2;
  c.expect(std::abs(s1 - tol.number("s1_target")) <= tol.number("s1_tol"), "S1 = " + fmt(s1, 10));
  c.expect(std::abs(lim - tol.number("path_limit_target")) <= tol.number("path_limit_tol"), "limit = " + fmt(lim, 10));
  c.expect(std::abs(t1v - tol.number("t1_target")) <= tol.number("t1_tol"), "T1 = " + fmt(t1v, 10));
  c.expect(std::abs(t1g - tol.number("t1_gamma_target")) <= tol.number("t1_gamma_tol"), "T1+gamma-2 = " + fmt(t1g, 10));
  c.expect(dbl(lc.s1.tail_bound) <= series_tol * 1.0001 && dbl(t1.tail_bound) <= series_tol * 1.0001, "tail bounds");
  {
    PrecisionScope scope(kDefaultPrecisionBits + 32);
    const Real ref = boost::math::constants::euler<Real>();
    c.expect(abs(lc.gamma.value - ref) <= lc.gamma.tail_bound, "gamma outside its bound");
  }
  const auto s1b = s1_infinity(series_tol / 2);
  const auto t1b = t1_infinity(series_tol / 2);
  c.expect(abs(s1b.value - lc.s1.value) <= lc.s1.tail_bound, "S1 refinement moved beyond bound");
  c.expect(abs(t1b.value - t1.value) <= t1.tail_bound, "T1 refinement moved beyond bound");
  c.note("S1=" + fmt(s1, 10) + " limit=" + fmt(lim, 10) + " T1=" + fmt(t1v, 10) + " T1+gamma-2=" + fmt(t1g, 10) +
         " (tail " + fmt(series_tol, 2) + ")");
}

// 11
void path_asymptotics(Check& c, const Settings& tol) {
  const auto lc = limit_constants(tol.number("series_tol"));
  const long kk = static_cast<long>(tol.number("path_gap_k"));
  const auto r = path_asymptotic_gap(kk, lc);
  const double lhs = dbl(r.lhs);
  const double gap = std::abs(lhs - tol.number("path_limit_target"));
  c.expect(gap <= tol.number("path_gap"), "gap " + fmt(gap));
  c.note("A*(" + str(kk) + ")=" + r.a_star.str() + " lhs=" + fmt(lhs, 8) + " gap=" + fmt(gap, 4));
  double previous = 1e300;
  for (long k : {1000L, 10000L, 100000L}) {
    const auto cmp = compare_path_count(k, lc);
    const double rel = dbl(cmp.relative_error);
    c.expect(rel < previous, "relative error not decreasing at k=" + str(k));
    previous = rel;
    c.note("k=" + str(k) + " exact=" + cmp.exact.str() + " predicted=" + fmt(dbl(cmp.predicted), 9) +
           " rel=" + fmt(rel, 4));
  }
  const long kc = static_cast<long>(tol.number("path_count_k"));
  c.expect(dbl(compare_path_count(kc, lc).relative_error) <= tol.number("path_count_relative"), "relative error at k=" + str(kc));
}

struct Criterion {
  int id;
  std::string name;
  std::function<void(Check&)> run;
};

}  // namespace
}  // namespace kemeny

int main(int argc, char** argv) {
  using namespace kemeny;
  if (argc < 2) {
    std::cerr << "usage: acceptance <tolerances.conf>\n";
    return 2;
  }
  Settings tol;
  try {
    tol = Settings::load(argv[1]);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  const std::vector<Criterion> criteria = {
      {1, "oracle self-consistency (kemeny == kemeny_mfpt)", oracle_consistency},
      {2, "closed forms equal the oracle", closed_forms_equal_oracle},
      {3, "path Braess count formula, k in [3,60]", path_census},
      {4, "no centre-crossing Braess chord on P_k, k in [3,40]", path_center},
      {5, "path cycle-length thresholds 8, 14, 22", path_thresholds},
      {6, "no Braess edges in S(2,b); centre cycles lower kappa", spider_no_braess},
      {7, "spider bounds and path-to-spider lift", spider_bounds},
      {8, "S(1,b1) + S(2,b2) has C(b1,2) Braess edges", spider_one_sum},
      {9, "broom suite", broom_suite},
      {10, "limit constants", [&](Check& c) { constants(c, tol); }},
      {11, "path asymptotics at finite k", [&](Check& c) { path_asymptotics(c, tol); }},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!c.ok()) ++failed;
    std::printf("%s  %2d  %s  [%ld checks, %.1fs]\n", c.ok() ? "PASS" : "FAIL", cr.id, cr.name.c_str(), c.checks(), secs);
    for (const auto& s : c.info()) std::printf("          %s\n", s.c_str());
    for (const auto& s : c.notes()) std::printf("          failed: %s\n", s.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
