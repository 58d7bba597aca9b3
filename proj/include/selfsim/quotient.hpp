#pragma once

// The quotient rings S = Z_m[[x]]/(r) with r = m - q(x) x^j, j >= 1.
//
// Elements are kept in the normal form sum d_t x^t with every d_t in [0, m),
// obtained by rewriting m -> q x^j from the lowest degree upwards.  Because
// r(0) = m, two series are congruent modulo (r, x^{D+1}) exactly when their
// normal forms agree through degree D.

#include <span>
#include <vector>

#include "selfsim/adic.hpp"

namespace selfsim::adic {

struct QuotientElement {
  int m = 2;
  std::vector<int> digits;  // degrees 0..D, each in [0, m)

  bool is_zero() const;
  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;
};

class QuotientRing {
 public:
  /// r = m - q x^j with q given by exact integer coefficients.
  QuotientRing(int m, int j, std::vector<BigInt> q, int D);

  /// Reads j and q off a relator series; r(0) must be m and r must have
  /// some term of positive degree unless it is the constant m.
  static QuotientRing from_relator(const PowerSeries& r);

  int modulus() const { return m_; }
  int shift() const { return j_; }
  int degree_bound() const { return D_; }
  const std::vector<BigInt>& q() const { return q_; }

  PowerSeries relator(int K) const;

  QuotientElement reduce(std::vector<BigInt> coeffs) const;
  /// Uses balanced lifts of the coefficients.
  QuotientElement reduce(const PowerSeries& s) const;

  QuotientElement add(const QuotientElement& a, const QuotientElement& b) const;
  QuotientElement mul(const QuotientElement& a, const QuotientElement& b) const;
  QuotientElement monomial(int degree) const;

  /// Precision (in base-m digits) used by internal exact computations; any
  /// multiple of m^{working_digits()} reduces to zero through degree D.
  int working_digits() const { return D_ + 2; }

 private:
  int m_;
  int j_;
  std::vector<BigInt> q_;
  int D_;
};

struct UnitDecomposition {
  int l = 0;               // x-valuation of the unit part s = x^l u
  std::vector<BigInt> u;   // invertible: u[0] prime to p
  std::vector<BigInt> t;   // q = x^l u + p t
};

/// Splits q = s + p t where the nonzero coefficients of s are prime to p,
/// then writes s = x^l u.  Throws AllDivisible when s = 0.
UnitDecomposition unit_decompose(std::span<const BigInt> q, int p);
UnitDecomposition unit_decompose(const PowerSeries& q, int p);

struct CongruenceExponent {
  int l_total = 0;             // j + l
  std::vector<BigInt> witness; // x^{l_total} == p * witness  (mod r)
};

/// Constructive form of x^{j+l} S <= p S over a prime-power modulus p^k.
CongruenceExponent congruence_exponent(const QuotientRing& ring, int p, int k);

struct ProMGenerators {
  int l = 0;                              // x^l == m v (mod r)
  std::vector<BigInt> v;
  std::vector<QuotientElement> generators; // classes of 1, x, ..., x^{l-1}
};

/// Topological generators of S as a Z_m-module.  Composite moduli are split
/// into prime-power components through the idempotents and recombined.
ProMGenerators pro_m_generators(const QuotientRing& ring);

}  // namespace selfsim::adic
