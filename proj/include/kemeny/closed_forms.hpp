#pragma once

// Closed forms for Kemeny's constant, moments and Braess deltas on paths,
// stars, spiders, lollipops and brooms. Everything is exact; the only
// irrational quantities (the broom chord roots) are returned as certified
// quadratic surds plus MPFR approximations.

#include <optional>

#include "kemeny/cut_vertex.hpp"
#include "kemeny/numeric.hpp"

namespace kemeny {

// ---- paths, stars, spiders ------------------------------------------------

inline Rational path_kemeny(long n) {
  detail::require(n >= 2, "path_kemeny needs n >= 2");
  return Rational((n - 1) * (n - 1), 3) + Rational(1, 6);
}

inline Rational path_moment(long n, long v) {
  detail::require(n >= 2 && v >= 1 && v <= n, "path_moment needs n >= 2 and 1 <= v <= n");
  return (v - 1) * (v - 1) + (n - v) * (n - v);
}

/// d^T F d of P_k; F is the distance matrix of a tree.
inline BigInt path_dfd(long k) {
  detail::require(k >= 1, "path_dfd needs k >= 1");
  const BigInt x = k - 1;
  return (4 * x * x * x + 2 * x) / 3;
}

/// Star on n vertices with centre n.
inline Rational star_kemeny(long n) {
  detail::require(n >= 3, "star_kemeny needs n >= 3");
  return Rational(2 * n - 3, 2);
}

inline Rational star_moment(long n, long v) {
  detail::require(n >= 3 && v >= 1 && v <= n, "star_moment needs n >= 3 and 1 <= v <= n");
  return v == n ? Rational(n - 1) : Rational(3 * n - 5);
}

inline Rational spider_kemeny(long a, long b) {
  detail::require(a >= 1 && b >= 2, "spider_kemeny needs a >= 1, b >= 2");
  return (Rational(b) - Rational(2, 3)) * a * a + Rational(1, 6);
}

inline Rational spider_center_moment(long a, long b) {
  detail::require(a >= 1 && b >= 2, "spider_center_moment needs a >= 1, b >= 2");
  return Rational(b * a * a);
}

/// mu - kappa at the spider centre; independent of b.
inline Rational spider_moment_gap(long a) {
  detail::require(a >= 1, "spider_moment_gap needs a >= 1");
  return Rational(2 * a * a, 3) - Rational(1, 6);
}

// ---- paths with one chord ----------------------------------------------------

/// Chord {i,j} on P_k. s = i-1 vertices precede the cycle, which has length l = j-i+1.
struct PathChordParams {
  long k = 0;
  long i = 0;
  long j = 0;

  PathChordParams(long k_, long i_, long j_) : k(k_), i(i_), j(j_) {
    detail::require(k >= 3 && i >= 1 && i < j && j <= k && j - i >= 2,
                    "path chord needs 1 <= i < j <= k and j - i >= 2");
  }
  static PathChordParams from_sl(long s, long l, long k) {
    detail::require(s >= 0 && l >= 3 && s + l <= k, "path chord needs s >= 0, l >= 3, s + l <= k");
    return {k, s + 1, s + l};
  }

  long s() const { return i - 1; }
  long l() const { return j - i + 1; }
};

inline Rational path_chord_kemeny(const PathChordParams& p) {
  const BigInt s = p.s();
  const BigInt l = p.l();
  const BigInt k = p.k;
  const BigInt num = 12 * (l * l - l + 1) * s * s + 12 * (l * l * l - l * l * k - l * l + l * k + l - k) * s +
                     l * (3 * l * l * l - 4 * l * l * k + 2 * k * k * k - k);
  return Rational(num, 6 * k * l);
}

/// Numerator f(s,l,k) of kappa(P_k + chord) - kappa(P_k) = f / (6lk).
inline BigInt path_braess_numerator(long s, long l, long k) {
  detail::require(s >= 0 && l >= 3 && s + l <= k, "path_braess_numerator needs s >= 0, l >= 3, s + l <= k");
  const BigInt S = s;
  const BigInt L = l;
  const BigInt K = k;
  return 4 * L * K * K - 4 * (L + 3 * S - 3 * L * S + 3 * L * L * S + L * L * L) * K +
         S * (12 * L * L * L - 12 * L * L + 12 * L) + S * S * (12 * L * L - 12 * L + 12) + 3 * L * L * L * L;
}

inline Rational path_braess_delta(long s, long l, long k) {
  return Rational(path_braess_numerator(s, l, k), BigInt(6 * l * k));
}

/// Entry f_{p,q} of the 2-forest matrix of P_k + {i,j}.
inline BigInt unicyclic_forest_entry(long k, long i, long j, long p, long q) {
  const PathChordParams chord(k, i, j);
  detail::require(p >= 1 && p <= k && q >= 1 && q <= k, "forest entry index out of range");
  if (p > q) std::swap(p, q);
  const long l = chord.l();
  const bool p_on = p >= i && p <= j;
  const bool q_on = q >= i && q <= j;
  if ((p < i && q < i) || (p > j && q > j)) return BigInt(l) * (q - p);
  if (p < i && q_on) return BigInt(l) * (i - p) + BigInt(q - i) * (l - q + i);
  if (p < i && q > j) return BigInt(l) * (i - p) + BigInt(l) * (q - j) + (l - 1);
  if (p_on && q_on) return BigInt(q - p) * (l - (q - p));
  return BigInt(l) * (q - j) + BigInt(j - p) * (l - j + p);  // p on the cycle, q > j
}

/// mu(P_{2a+1} + {s+1, s+l}, a+1). Chords entirely right of the centre are
/// reflected first.
inline Rational chord_moment_center(long a, long s, long l) {
  detail::require(a >= 1 && s >= 0 && l >= 3 && s + l <= 2 * a + 1,
                  "chord_moment_center needs a >= 1, s >= 0, l >= 3, s + l <= 2a + 1");
  if (s + 1 > a + 1) s = 2 * a + 1 - s - l;
  const Rational A(a);
  const Rational L(l);
  const Rational S(s);
  if (s + 1 <= a + 1 && a + 1 <= s + l) {
    const Rational c = 2 * A - 2 * L + 3;
    return -2 * c / L * S * S + 2 * c * (2 * A - L + 1) / L * S + Rational(4, 3) * L * L - 2 * (3 * A + 2) * L +
           10 * A * A + 14 * A + Rational(14, 3) - 2 * (2 * A * A * A + 5 * A * A + 4 * A + 1) / L;
  }
  return -2 * (L * L - L + 1) / L * S + 2 * A * A + 2 * A - Rational(2, 3) * L * L + Rational(2, 3);
}

/// mu(P_k + {i,j}, k): moment at the far end of the path.
inline Rational path_chord_end_moment(const PathChordParams& p) {
  const Rational l(p.l());
  const Rational k(p.k);
  return k * k - 2 * (l - 1 + 1 / l) * p.s() - (2 * l * l + 1) / 3;
}

// ---- lollipops --------------------------------------------------------------

/// Lollipop on n vertices: P_n plus {n-l+1, n}.
inline Rational lollipop_kemeny(long l, long n) {
  detail::require(l >= 3 && l <= n, "lollipop needs 3 <= l <= n");
  const BigInt N = n;
  const BigInt L = l;
  return Rational(2 * N * N * N - 4 * N * L * L + 3 * L * L * L - N, 6 * N);
}

/// Moment at vertex n-1 of the lollipop on n vertices.
inline Rational lollipop_moment_k(long l, long n) {
  detail::require(l >= 3 && l <= n, "lollipop needs 3 <= l <= n");
  const long k = n - 1;
  return Rational((l + 1) * (l - 1), 3) + Rational((k - l + 1) * (k - l + 1)) + Rational(4 * (k - l + 1) * (l - 2), l);
}

// ---- brooms -------------------------------------------------------------------

/// Branch summary of P_k at its end vertex.
inline CutSummary path_end_summary(long k) {
  detail::require(k >= 1, "path needs k >= 1");
  return {1, k - 1, path_dfd(k), BigInt(k - 1) * (k - 1)};
}

/// Branch summary of p pendant edges at their common centre (p = 0 is a single vertex).
inline CutSummary pendant_summary(long p) {
  detail::require(p >= 0, "pendant count must be non-negative");
  return {1, p, BigInt(4 * p * p - 2 * p), p};
}

/// Broom B_{k,p} summarized at its hub k.
inline CutSummary broom_summary(long k, long p) { return compose(path_end_summary(k), pendant_summary(p)); }

inline Rational broom_kemeny(long k, long p) {
  detail::require(k >= 1 && p >= 2, "broom needs k >= 1, p >= 2");
  return broom_summary(k, p).kemeny();
}

/// Adding an edge between two pendants of B_{k,p}: P_3 becomes C_3 inside the 1-sum.
inline Rational broom_pendant_pair_delta(long k, long p) {
  detail::require(k >= 1 && p >= 2, "broom needs k >= 1, p >= 2");
  const CutSummary rest = broom_summary(k, p - 2);
  const BranchValues rest_values = rest.edge_count == 0 ? BranchValues{0, 0, 0}
                                                         : BranchValues{rest.kemeny(), rest.moment(), rest.edge_count};
  return cut_vertex_delta({Rational(3, 2), Rational(2), 2}, {Rational(4, 3), Rational(8, 3), 3}, rest_values);
}

/// kappa(B^l_{k,p}) - kappa(B_{k,p}) for a pendant joined to path vertex k+2-l,
/// as the sum of the three bracketed terms.
inline Rational broom_pendant_chord_delta(long k, long p, long l) {
  detail::require(k >= 3 && p >= 2 && l >= 3 && l <= k + 1, "pendant chord needs k >= 3, p >= 2, 3 <= l <= k+1");
  const Rational K(k);
  const Rational P(p);
  const Rational first = (K + 1) / (K + P) * lollipop_kemeny(l, k + 1) - K / (K + P - 1) * path_kemeny(k + 1);
  const Rational second = (P - 1) / (K + P) * lollipop_moment_k(l, k + 1) - (P - 1) / (K + P - 1) * (K * K - 2 * K + 2);
  const Rational third = (P - 1) / (2 * (K + P) * (K + P - 1));
  return first + second + third;
}

/// Numerator of the expanded single-fraction form; denominator 6l(k+p-1)(k+p).
inline BigInt broom_pendant_chord_numerator(long k, long p, long l) {
  detail::require(k >= 3 && p >= 2 && l >= 3 && l <= k + 1, "pendant chord needs k >= 3, p >= 2, 3 <= l <= k+1");
  const BigInt K = k;
  const BigInt P = p;
  const BigInt L = l;
  const BigInt L2 = L * L;
  const BigInt L3 = L2 * L;
  return 4 * K * K * K * L - 4 * K * K * (L3 + 3 * L2 * (P - 1) - L * (12 * P - 11) + 12 * (P - 1)) +
         K * (3 * L2 * L2 + 4 * L3 * (P - 2) - 12 * L2 * (P * P + P - 2) + 16 * L * (3 * P * P - P - 2) -
              48 * (P - 1) * P) +
         (L - 2) * (P - 1) * (3 * L3 + 24 * (P - 1) + 2 * L2 * (4 * P - 3) - 4 * L * (5 * P - 6));
}

inline Rational broom_pendant_chord_delta_expanded(long k, long p, long l) {
  return Rational(broom_pendant_chord_numerator(k, p, l), BigInt(6 * l) * (k + p - 1) * (k + p));
}

/// Sufficient size of k for a pendant chord of cycle length l to be Braess.
inline bool broom_b2_sufficient(long k, long p, long l) {
  detail::require(l >= 3 && p >= 2, "broom_b2_sufficient needs l >= 3, p >= 2");
  const Rational bound = (Rational(7 * p, 1000) + 1) * l * l + 3 * (p - 1) * l - 7 * (p - 1);
  return Rational(k) >= bound;
}

namespace detail {

inline BigInt broom_path_poly(const BigInt& K, const BigInt& P, const BigInt& S, const BigInt& L) {
  const BigInt c = 12 * (K + P - 1) * (L * L - L + 1);
  return c * S * S - c * (K + P - L) * S + 4 * L * (-L * L + 3 * K - 2) * P * P +
         L * (12 * K * K - 8 * K * L * L - 16 * K + 3 * L * L * L + 4 * L * L + 8) * P +
         L * (K - 1) * (4 * K * K - 4 * K * L * L - 4 * K + 3 * L * L * L);
}

}  // namespace detail

/// D(s,l,k,p): numerator of the delta for a path chord inside B_{k,p};
/// denominator 6l(k+p-1)(k+p).
inline BigInt broom_path_numerator(long k, long p, long s, long l) {
  detail::require(k >= 4 && p >= 2 && s >= 0 && l >= 3 && s + l <= k,
                  "broom path chord needs k >= 4, p >= 2, s >= 0, l >= 3, s + l <= k");
  return detail::broom_path_poly(k, p, s, l);
}

inline Rational broom_path_chord_delta(long k, long p, long s, long l) {
  return Rational(broom_path_numerator(k, p, s, l), BigInt(6 * l) * (k + p - 1) * (k + p));
}

/// Same delta assembled from the path-chord values across the hub cut vertex.
inline Rational broom_path_chord_delta_structured(long k, long p, long s, long l) {
  detail::require(k >= 4 && p >= 2, "broom path chord needs k >= 4, p >= 2");
  const auto chord = PathChordParams::from_sl(s, l, k);
  const Rational kp = path_chord_kemeny(chord);
  const Rational K(k);
  const Rational P(p);
  return kp - path_kemeny(k) + P / (K + P) * (path_chord_end_moment(chord) - kp - Rational(1, 2)) -
         P / (K + P - 1) * (Rational(2, 3) * (K - 1) * (K - 1) - Rational(2, 3));
}

/// C(l,k,p) as printed: squared half-gap between the two roots of D in s.
inline Rational broom_path_C(long k, long p, long l) {
  detail::require(k >= 4 && p >= 2 && l >= 3, "broom_path_C needs k >= 4, p >= 2, l >= 3");
  const Rational K(k);
  const Rational P(p);
  const Rational L(l);
  const Rational w = L * L - L + 1;
  const Rational n = K + P;
  return n * n / 4 - L * K * P / w - L / 2 * n + (L * L * L - L) / (3 * w) * n + L * P / w -
         (L * L * L - L * L) / (4 * w) - K / (n - 1) * (K * K - 3 * K + 2) * L / (3 * w);
}

/// N(l,k,p); s_1 > 0 iff N > 0.
inline BigInt broom_N(long l, long k, long p) {
  const BigInt L = l;
  const BigInt K = k;
  const BigInt P = p;
  return 3 * (K + P - 1) * L * L * L - 4 * (K + P - 1) * (K + P) * L * L + 4 * (3 * K - 2) * P * P +
         (12 * K * K - 16 * K + 8) * P + 4 * K * (K - 1) * (K - 1);
}

struct BroomPathRoots {
  Rational C;
  Rational midpoint;                   // (k+p-l)/2 = (s1+s2)/2
  std::optional<QuadraticSurd> s1;     // absent when C < 0: D > 0 for every s
  std::optional<QuadraticSurd> s2;
  Real s1_value;
  Real s2_value;
};

/// Roots s1 <= s2 of D(., l, k, p). C is cross-checked against the
/// discriminant of D before use.
inline BroomPathRoots broom_path_roots(long k, long p, long l, unsigned bits = kDefaultPrecisionBits) {
  detail::require(k >= 4 && p >= 2 && l >= 3, "broom_path_roots needs k >= 4, p >= 2, l >= 3");
  BroomPathRoots out;
  out.C = broom_path_C(k, p, l);
  out.midpoint = Rational(k + p - l, 2);
  // D(s) = c s^2 - c (k+p-l) s + D(0)
  const Rational c = 12 * Rational(k + p - 1) * (l * l - l + 1);
  const BigInt d0 = detail::broom_path_poly(k, p, 0, l);
  const Rational from_discriminant = out.midpoint * out.midpoint - Rational(d0) / c;
  if (from_discriminant != out.C) throw InvariantError("C(l,k,p) disagrees with the discriminant of D");
  if (out.C.sign() >= 0) {
    out.s1.emplace(out.midpoint, -1, out.C);
    out.s2.emplace(out.midpoint, 1, out.C);
    out.s1_value = out.s1->approx(bits);
    out.s2_value = out.s2->approx(bits);
  }
  return out;
}

/// Number of s in [0, k-l] with D(s,l,k,p) > 0, from certified root floors.
inline BigInt broom_path_braess_count(long k, long p, long l) {
  detail::require(l <= k, "broom path chord needs l <= k");
  const BroomPathRoots roots = broom_path_roots(k, p, l, 64);
  const BigInt top = k - l;  // largest admissible s
  if (!roots.s1) return top + 1;
  BigInt low = roots.s1->ceil();  // s = 0 .. ceil(s1)-1
  if (low < 0) low = 0;
  if (low > top + 1) low = top + 1;
  BigInt high = top - roots.s2->floor();  // s = floor(s2)+1 .. top
  if (high < 0) high = 0;
  return low + high;
}

}  // namespace kemeny
