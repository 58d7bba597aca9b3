#pragma once

// Truncated arithmetic in the m-adic integers Z_m and in Z_m[[x]].
//
// An MAdicInt holds K base-m digits, least significant first, so it is a
// residue modulo m^K.  A PowerSeries holds D+1 such coefficients.  The pair
// (K, D) together with m forms the Truncation context; operations between
// values of different contexts throw Errc::ContextMismatch.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "selfsim/error.hpp"

namespace selfsim::adic {

using BigInt = boost::multiprecision::cpp_int;

struct PrimePower {
  int prime = 0;
  int exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class Modulus {
 public:
  explicit Modulus(int m);

  int value() const { return m_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  bool is_prime_power() const { return factors_.size() == 1; }

 private:
  int m_;
  std::vector<PrimePower> factors_;
};

struct Truncation {
  int m = 2;
  int K = 8;  // m-adic digits
  int D = 8;  // maximal x-degree

  friend bool operator==(const Truncation&, const Truncation&) = default;
};

void require_same(const Truncation& a, const Truncation& b);

/// m^e as a big integer.
BigInt ipow(int m, int e);
/// Floor-mod into [0, n).
BigInt floor_mod(const BigInt& a, const BigInt& n);
/// Inverse of a modulo n; throws NonUnit when gcd(a, n) != 1.
BigInt inverse_mod(const BigInt& a, const BigInt& n);

class MAdicInt {
 public:
  MAdicInt() : MAdicInt(2, 1) {}
  MAdicInt(int m, int K);

  /// Negative values become their m-adic complements.
  static MAdicInt from_integer(int m, int K, const BigInt& v);
  static MAdicInt from_digits(int m, std::vector<std::uint32_t> digits);

  int modulus() const { return m_; }
  int precision() const { return static_cast<int>(digits_.size()); }
  const std::vector<std::uint32_t>& digits() const { return digits_; }
  std::uint32_t digit(int i) const { return digits_[static_cast<std::size_t>(i)]; }

  /// Representative in [0, m^K).
  BigInt value() const;
  /// Representative in (-m^K/2, m^K/2]; integer literals round-trip.
  BigInt balanced() const;

  bool is_zero() const;
  bool is_unit() const;

  MAdicInt operator-() const;
  MAdicInt& operator+=(const MAdicInt& o);
  MAdicInt& operator-=(const MAdicInt& o) { return *this += -o; }
  MAdicInt& operator*=(const MAdicInt& o);

  friend MAdicInt operator+(MAdicInt a, const MAdicInt& b) { return a += b; }
  friend MAdicInt operator-(MAdicInt a, const MAdicInt& b) { return a -= b; }
  friend MAdicInt operator*(MAdicInt a, const MAdicInt& b) { return a *= b; }
  friend bool operator==(const MAdicInt&, const MAdicInt&) = default;

 private:
  void check_compatible(const MAdicInt& o) const;

  int m_;
  std::vector<std::uint32_t> digits_;
};

/// Multiplicative inverse by digit-wise Hensel lifting.
MAdicInt invert(const MAdicInt& a);

/// Orthogonal idempotents of Z_m at precision K, one per prime-power factor,
/// in the order of Modulus::factors().
std::vector<MAdicInt> idempotents(const Modulus& mod, int K);

class PowerSeries {
 public:
  PowerSeries() : PowerSeries(Truncation{}) {}
  explicit PowerSeries(const Truncation& t);

  static PowerSeries from_integers(const Truncation& t, std::span<const BigInt> coeffs);
  static PowerSeries from_integers(const Truncation& t, std::initializer_list<long long> coeffs);
  static PowerSeries constant(const Truncation& t, const MAdicInt& c);
  /// c * x^degree; zero when degree > D.
  static PowerSeries monomial(const Truncation& t, long long c, int degree);

  const Truncation& truncation() const { return t_; }
  int degree_bound() const { return t_.D; }
  const MAdicInt& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  void set(int i, const MAdicInt& c);
  const std::vector<MAdicInt>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// Index of the first nonzero coefficient, or D+1 for zero.
  int valuation() const;
  /// Balanced integer lifts of all coefficients.
  std::vector<BigInt> balanced() const;

  /// Multiplication by x^s, truncated at D.
  PowerSeries shifted(int s) const;

  PowerSeries operator-() const;
  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o) { return *this += -o; }
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }
  friend PowerSeries operator*(const MAdicInt& c, const PowerSeries& s);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  Truncation t_;
  std::vector<MAdicInt> coeffs_;
};

/// Inverse in Z_m[[x]]; requires a unit constant term.
PowerSeries invert(const PowerSeries& a);

}  // namespace selfsim::adic
