#pragma once

// Exact integer/rational types and a few certified rounding helpers.
//
// Everything that decides a Braess verdict is computed in BigInt/Rational.
// Real (MPFR) is only used for reporting and for locating candidates that
// are then confirmed by exact comparison.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "kemeny/errors.hpp"

namespace kemeny {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 128;

inline unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

/// Sets the default MPFR precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
    Real::default_precision(bits_to_digits10(bits));
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Real make_real(const Rational& q, unsigned bits) {
  Real r(0, bits_to_digits10(bits));
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

inline Real make_real(const BigInt& z, unsigned bits) {
  Real r(0, bits_to_digits10(bits));
  mpfr_set_z(r.backend().data(), z.backend().data(), MPFR_RNDN);
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const BigInt& z) { return z.sign(); }

inline BigInt floor_of(const Rational& q) {
  BigInt num = numerator(q);
  const BigInt den = denominator(q);
  BigInt out;
  mpz_fdiv_q(out.backend().data(), num.backend().data(), den.backend().data());
  return out;
}

inline BigInt ceil_of(const Rational& q) {
  BigInt num = numerator(q);
  const BigInt den = denominator(q);
  BigInt out;
  mpz_cdiv_q(out.backend().data(), num.backend().data(), den.backend().data());
  return out;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// floor(sqrt(n)) for n >= 0.
inline BigInt isqrt(const BigInt& n) {
  detail::require(n.sign() >= 0, "isqrt of a negative integer");
  return boost::multiprecision::sqrt(n);
}

/// ceil(sqrt(n)) for n >= 0.
inline BigInt ceil_sqrt(const BigInt& n) {
  BigInt r = isqrt(n);
  return r * r == n ? r : r + 1;
}

inline std::string to_string(const BigInt& z) { return z.str(); }

/// "num/den", always with an explicit denominator.
inline std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Fixed-point rendering rounded half away from zero, exact.
inline std::string to_decimal(const Rational& q, unsigned digits) {
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const bool negative = q.sign() < 0;
  const Rational mag = negative ? Rational(-q) : q;
  const BigInt scaled = floor_of(mag * scale + Rational(1, 2));
  std::string s = scaled.str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative && scaled != 0) s.insert(0, "-");
  return s;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// x = base + sign * sqrt(radicand) with rational base and radicand >= 0.
/// Comparisons against integers are exact, so floor/ceil are certified even
/// when x sits arbitrarily close to an integer.
class QuadraticSurd {
 public:
  QuadraticSurd(Rational base, int root_sign, Rational radicand)
      : base_(std::move(base)), root_sign_(root_sign < 0 ? -1 : 1), radicand_(std::move(radicand)) {
    detail::require(radicand_.sign() >= 0, "negative radicand in quadratic surd");
  }

  const Rational& base() const { return base_; }
  const Rational& radicand() const { return radicand_; }
  int root_sign() const { return root_sign_; }

  /// sign(x - m), exact.
  int compare(const BigInt& m) const {
    const Rational t = base_ - Rational(m);
    const Rational t2 = t * t;
    if (root_sign_ > 0) {
      // t + sqrt(R)
      if (t.sign() >= 0) return (t.sign() == 0 && radicand_.sign() == 0) ? 0 : 1;
      return radicand_ > t2 ? 1 : (radicand_ == t2 ? 0 : -1);
    }
    // t - sqrt(R)
    if (t.sign() <= 0) return (t.sign() == 0 && radicand_.sign() == 0) ? 0 : -1;
    return t2 > radicand_ ? 1 : (t2 == radicand_ ? 0 : -1);
  }

  Real approx(unsigned bits = kDefaultPrecisionBits) const {
    Real r = boost::multiprecision::sqrt(make_real(radicand_, bits));
    return make_real(base_, bits) + (root_sign_ > 0 ? r : Real(-r));
  }

  BigInt floor() const {
    BigInt m(boost::multiprecision::floor(approx(64)));
    while (compare(m) < 0) --m;
    while (compare(m + 1) >= 0) ++m;
    return m;
  }

  BigInt ceil() const {
    BigInt m(boost::multiprecision::ceil(approx(64)));
    while (compare(m) > 0) ++m;
    while (compare(m - 1) <= 0) --m;
    return m;
  }

  bool is_integer() const {
    const BigInt f = floor();
    return compare(f) == 0;
  }

 private:
  Rational base_;
  int root_sign_;
  Rational radicand_;
};

}  // namespace kemeny
