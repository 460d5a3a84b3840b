#pragma once

// Limit constants with explicit tail bounds, and exact counts set against
// the asymptotic laws for paths and brooms.

#include <cmath>
#include <utility>
#include <vector>

#include "kemeny/braess.hpp"
#include "kemeny/numeric.hpp"

namespace kemeny {

struct SeriesValue {
  Real value;
  Real tail_bound;  // |value - limit| <= tail_bound
  long terms_used = 0;
};

// ---- h, g, f ---------------------------------------------------------------

inline Rational h_of(long l) { return Rational(3 * l * l - 7 * l + 3, 3 * (l * l - l + 1)); }
inline Rational g_of(long l) { return Rational(2 * l * (l * l - 3 * l + 1), 3 * (l * l - l + 1)); }
inline Rational f_of(long l) { return Rational(l * l * (l - 1), l * l - l + 1); }

namespace detail {

// B_0, B_2, ..., B_{2m} (Akiyama-Tanigawa).
inline std::vector<Rational> even_bernoulli(int m) {
  const int n = 2 * m;
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  std::vector<Rational> b;
  for (int i = 0; i <= n; ++i) {
    a[static_cast<std::size_t>(i)] = Rational(1, i + 1);
    for (int j = i; j >= 1; --j) {
      auto& aj = a[static_cast<std::size_t>(j - 1)];
      aj = j * (aj - a[static_cast<std::size_t>(j)]);
    }
    if (i % 2 == 0) b.push_back(a[0]);
  }
  return b;
}

inline Real ulp_bound(unsigned bits, long operations) {
  return make_real(Rational(BigInt(operations + 1), BigInt(1) << (bits - 4)), bits);
}

}  // namespace detail

/// gamma = H_N - ln N - 1/(2N) + sum_j B_2j/(2j N^2j) with the first omitted
/// term as the truncation bound, plus a rounding allowance.
inline SeriesValue euler_gamma(unsigned bits = kDefaultPrecisionBits, long n = 0) {
  detail::require(bits >= 32, "euler_gamma needs at least 32 bits");
  PrecisionScope scope(bits + 16);
  if (n <= 0) n = std::max<long>(16, bits / 2);
  const int max_m = static_cast<int>(std::min(bits, 96u));
  const auto bern = detail::even_bernoulli(max_m + 1);
  const Rational target(BigInt(1), BigInt(1) << (bits + 2));

  Rational harmonic = 0;
  for (long l = 1; l <= n; ++l) harmonic += Rational(1, l);
  Rational corr = -Rational(1, 2 * n);
  Rational npow = Rational(n) * n;
  Rational omitted;
  Rational previous;
  int j = 1;
  for (;; ++j) {
    const Rational term = bern[static_cast<std::size_t>(j)] / (2 * j * npow);
    const Rational mag = abs(term);
    if ((j > 1 && mag >= previous) || mag <= target || j == max_m) {
      omitted = mag;
      break;
    }
    corr += term;
    previous = mag;
    npow *= Rational(n) * n;
  }
  SeriesValue out;
  out.value = make_real(harmonic + corr, bits + 16) - log(make_real(BigInt(n), bits + 16));
  out.tail_bound = make_real(omitted, bits) + detail::ulp_bound(bits, 4);
  out.terms_used = n + j;
  out.value.precision(bits_to_digits10(bits));
  return out;
}

inline Real s1_term(long l, unsigned bits) {
  return 1 - sqrt(make_real(h_of(l), bits)) - make_real(Rational(2, 3 * l), bits);
}

inline Rational s1_tail_bound(long last) { return Rational(16, 9 * (last - 1)) + Rational(2, 3 * last); }

/// S1 = sum_{l>=3} (1 - sqrt h(l) - 2/(3l)).
inline SeriesValue s1_infinity(double target_tol = 1e-6, unsigned bits = kDefaultPrecisionBits) {
  detail::require(target_tol > 0, "s1_infinity needs a positive tolerance");
  PrecisionScope scope(bits);
  // 16/(9(L-1)) + 2/(3L) <= 22/(9(L-1))
  const long last = std::max<long>(3, static_cast<long>(std::ceil(22.0 / (9.0 * target_tol))) + 1);
  SeriesValue out;
  out.value = Real(0);
  for (long l = 3; l <= last; ++l) out.value += s1_term(l, bits);
  out.terms_used = last - 2;
  out.tail_bound = make_real(s1_tail_bound(last), bits) + detail::ulp_bound(bits, 4 * last);
  return out;
}

/// T1 = sum_{l>=3} (l/(l^2-l+1) - 1/l), tail <= 1/L.
inline SeriesValue t1_infinity(double target_tol = 1e-6, unsigned bits = kDefaultPrecisionBits) {
  detail::require(target_tol > 0, "t1_infinity needs a positive tolerance");
  PrecisionScope scope(bits);
  const long last = std::max<long>(3, static_cast<long>(std::ceil(1.0 / target_tol)));
  SeriesValue out;
  out.value = Real(0);
  for (long l = 3; l <= last; ++l) {
    out.value += Real(l - 1) / (Real(l) * Real(l * l - l + 1));
  }
  out.terms_used = last - 2;
  out.tail_bound = make_real(Rational(1, last), bits) + detail::ulp_bound(bits, 4 * last);
  return out;
}

// ---- paths ----------------------------------------------------------------

/// A*(k) = sum_{l=3}^{floor sqrt k} floor A(l), exact.
inline BigInt a_star(long k) {
  detail::require(k >= 3, "a_star needs k >= 3");
  const long r = static_cast<long>(isqrt(BigInt(k)));
  BigInt sum = 0;
  for (long l = 3; l <= r; ++l) sum += path_A(l, k).floor();
  return sum;
}

struct AsymptoticReport {
  long k = 0;
  BigInt a_star;
  Real lhs;              // A*(k)/k - ln(k)/6
  Real predicted_limit;  // S1/2 + gamma/3 - 2/3
  Real limit_uncertainty;
  Real gap;
};

struct LimitConstants {
  SeriesValue gamma;
  SeriesValue s1;
  Real path_limit;  // S1/2 + gamma/3 - 2/3
  Real path_slope;  // S1 + 2 gamma/3 - 4/3
};

inline LimitConstants limit_constants(double tol = 1e-6, unsigned bits = kDefaultPrecisionBits) {
  PrecisionScope scope(bits);
  LimitConstants c{euler_gamma(bits), s1_infinity(tol, bits), Real(0), Real(0)};
  c.path_limit = c.s1.value / 2 + c.gamma.value / 3 - Real(2) / 3;
  c.path_slope = c.s1.value + 2 * c.gamma.value / 3 - Real(4) / 3;
  return c;
}

inline AsymptoticReport path_asymptotic_gap(long k, const LimitConstants& c, unsigned bits = kDefaultPrecisionBits) {
  detail::require(k >= 9, "path_asymptotic_gap needs k >= 9");
  PrecisionScope scope(bits);
  AsymptoticReport r;
  r.k = k;
  r.a_star = a_star(k);
  r.lhs = make_real(r.a_star, bits) / k - log(Real(k)) / 6;
  r.predicted_limit = c.path_limit;
  r.limit_uncertainty = c.s1.tail_bound / 2 + c.gamma.tail_bound / 3;
  r.gap = abs(r.lhs - r.predicted_limit);
  return r;
}

inline Real predicted_path_count(long k, const LimitConstants& c, unsigned bits = kDefaultPrecisionBits) {
  detail::require(k >= 3, "predicted_path_count needs k >= 3");
  PrecisionScope scope(bits);
  const Real K(k);
  return K / 3 * log(K) + c.path_slope * K;
}

struct PathCountComparison {
  long k = 0;
  BigInt exact;
  Real predicted;
  Real relative_error;  // |exact - predicted| / exact
  Real scaled_gap;      // |exact - predicted| / k
};

inline PathCountComparison compare_path_count(long k, const LimitConstants& c,
                                              unsigned bits = kDefaultPrecisionBits) {
  PrecisionScope scope(bits);
  PathCountComparison out;
  out.k = k;
  out.exact = path_census_formula(k).total;
  out.predicted = predicted_path_count(k, c, bits);
  const Real diff = abs(Real(out.exact) - out.predicted);
  out.relative_error = out.exact == 0 ? Real(diff) : Real(diff / Real(out.exact));
  out.scaled_gap = diff / k;
  return out;
}

// ---- brooms ---------------------------------------------------------------

struct BroomTrendRow {
  long k = 0;
  long p = 0;
  BigInt b1;
  BigInt b2;
  BigInt b3;
  double k_ln_k = 0;
  double ratio = 0;  // B3 / (k ln k)
};

inline std::vector<BroomTrendRow> broom_b3_trend(const std::vector<std::pair<long, long>>& schedule) {
  std::vector<BroomTrendRow> rows;
  for (const auto& [k, p] : schedule) {
    const BroomCounts c = broom_braess_counts(k, p);
    BroomTrendRow row{k, p, c.b1, c.b2, c.b3, 0, 0};
    row.k_ln_k = static_cast<double>(k) * std::log(static_cast<double>(k));
    row.ratio = c.b3.convert_to<double>() / row.k_ln_k;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace kemeny
