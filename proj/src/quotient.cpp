#include "selfsim/quotient.hpp"

#include <algorithm>

namespace selfsim::adic {
namespace {

using Coeffs = std::vector<BigInt>;

Coeffs resized(Coeffs c, int D) {
  c.resize(static_cast<std::size_t>(D + 1), 0);
  return c;
}

Coeffs mul_mod(const Coeffs& a, const Coeffs& b, int D, const BigInt& M) {
  Coeffs r(static_cast<std::size_t>(D + 1), 0);
  for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(D); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(D); ++j) {
      r[i + j] += a[i] * b[j];
    }
  }
  for (auto& c : r) c = floor_mod(c, M);
  return r;
}

Coeffs invert_mod(const Coeffs& a, int D, const BigInt& M) {
  Coeffs b(static_cast<std::size_t>(D + 1), 0);
  const BigInt b0 = inverse_mod(a.at(0), M);
  b[0] = b0;
  for (int n = 1; n <= D; ++n) {
    BigInt acc = 0;
    for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k) acc += a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
    b[static_cast<std::size_t>(n)] = floor_mod(-b0 * acc, M);
  }
  return b;
}

Coeffs power_mod(const Coeffs& a, int e, int D, const BigInt& M) {
  Coeffs r(static_cast<std::size_t>(D + 1), 0);
  r[0] = 1;
  for (int i = 0; i < e; ++i) r = mul_mod(r, a, D, M);
  return r;
}

struct LV {
  int l;
  Coeffs v;
};

// x^l == m v (mod r) over a prime-power modulus.
LV prime_power_exponent(const QuotientRing& ring, int p, int k) {
  const int D = ring.degree_bound();
  const BigInt M = ipow(ring.modulus(), ring.working_digits());
  const auto& q = ring.q();
  if (!q.empty() && floor_mod(q[0], ring.modulus()) != 0 &&
      boost::multiprecision::gcd(floor_mod(q[0], ring.modulus()), BigInt(ring.modulus())) == 1) {
    return {ring.shift(), invert_mod(resized(q, D), D, M)};
  }
  CongruenceExponent ce = congruence_exponent(ring, p, k);
  return {k * ce.l_total, power_mod(ce.witness, k, D, M)};
}

void verify_exponent(const QuotientRing& ring, int l, const Coeffs& v) {
  const int D = ring.degree_bound();
  Coeffs check(static_cast<std::size_t>(D + 1), 0);
  if (l <= D) check[static_cast<std::size_t>(l)] = 1;
  for (int i = 0; i <= D && i < static_cast<int>(v.size()); ++i) {
    check[static_cast<std::size_t>(i)] -= ring.modulus() * v[static_cast<std::size_t>(i)];
  }
  if (!ring.reduce(check).is_zero()) {
    throw Error(Errc::Overflow, "internal: exponent witness failed to reduce to zero");
  }
}

}  // namespace

bool QuotientElement::is_zero() const {
  return std::all_of(digits.begin(), digits.end(), [](int d) { return d == 0; });
}

QuotientRing::QuotientRing(int m, int j, std::vector<BigInt> q, int D)
    : m_(m), j_(j), q_(std::move(q)), D_(D) {
  if (m < 2) throw Error(Errc::InvalidContext, "quotient modulus must be >= 2");
  if (j < 1) throw Error(Errc::InvalidContext, "relator shift j must be >= 1");
  if (D < 0) throw Error(Errc::InvalidContext, "degree bound must be >= 0");
  if (q_.empty()) q_.push_back(0);
}

QuotientRing QuotientRing::from_relator(const PowerSeries& r) {
  const auto& t = r.truncation();
  std::vector<BigInt> c = r.balanced();
  if (c[0] != t.m) {
    throw Error(Errc::InvalidContext, "relator constant term must equal m=" + std::to_string(t.m));
  }
  int j = 1;
  while (j <= t.D && c[static_cast<std::size_t>(j)] == 0) ++j;
  if (j > t.D) return QuotientRing(t.m, 1, {0}, t.D);
  std::vector<BigInt> q;
  for (int i = j; i <= t.D; ++i) q.push_back(-c[static_cast<std::size_t>(i)]);
  return QuotientRing(t.m, j, std::move(q), t.D);
}

PowerSeries QuotientRing::relator(int K) const {
  Truncation t{m_, K, D_};
  std::vector<BigInt> c(static_cast<std::size_t>(D_ + 1), 0);
  c[0] = m_;
  for (std::size_t i = 0; i < q_.size(); ++i) {
    std::size_t deg = i + static_cast<std::size_t>(j_);
    if (deg <= static_cast<std::size_t>(D_)) c[deg] -= q_[i];
  }
  return PowerSeries::from_integers(t, c);
}

QuotientElement QuotientRing::reduce(std::vector<BigInt> c) const {
  c.resize(static_cast<std::size_t>(D_ + 1), 0);
  QuotientElement out{m_, std::vector<int>(static_cast<std::size_t>(D_ + 1), 0)};
  for (int t = 0; t <= D_; ++t) {
    BigInt& ct = c[static_cast<std::size_t>(t)];
    BigInt d = floor_mod(ct, m_);
    BigInt carry = (ct - d) / m_;
    out.digits[static_cast<std::size_t>(t)] = static_cast<int>(d);
    if (carry == 0) continue;
    for (std::size_t i = 0; i < q_.size(); ++i) {
      std::size_t deg = static_cast<std::size_t>(t + j_) + i;
      if (deg > static_cast<std::size_t>(D_)) break;
      c[deg] += carry * q_[i];
    }
  }
  return out;
}

QuotientElement QuotientRing::reduce(const PowerSeries& s) const {
  if (s.truncation().m != m_) throw Error(Errc::ContextMismatch, "series modulus differs from quotient modulus");
  return reduce(s.balanced());
}

QuotientElement QuotientRing::add(const QuotientElement& a, const QuotientElement& b) const {
  std::vector<BigInt> c(static_cast<std::size_t>(D_ + 1), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.digits.at(i) + b.digits.at(i);
  return reduce(std::move(c));
}

QuotientElement QuotientRing::mul(const QuotientElement& a, const QuotientElement& b) const {
  std::vector<BigInt> c(static_cast<std::size_t>(D_ + 1), 0);
  for (int i = 0; i <= D_; ++i) {
    for (int j = 0; i + j <= D_; ++j) {
      c[static_cast<std::size_t>(i + j)] += BigInt(a.digits.at(static_cast<std::size_t>(i))) * b.digits.at(static_cast<std::size_t>(j));
    }
  }
  return reduce(std::move(c));
}

QuotientElement QuotientRing::monomial(int degree) const {
  std::vector<BigInt> c(static_cast<std::size_t>(D_ + 1), 0);
  if (degree <= D_) c[static_cast<std::size_t>(degree)] = 1;
  return reduce(std::move(c));
}

UnitDecomposition unit_decompose(std::span<const BigInt> q, int p) {
  UnitDecomposition out;
  std::vector<BigInt> s(q.size(), 0);
  out.t.assign(q.size(), 0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (floor_mod(q[i], p) != 0) {
      s[i] = q[i];
    } else {
      out.t[i] = q[i] / p;
    }
  }
  auto first = std::find_if(s.begin(), s.end(), [](const BigInt& c) { return c != 0; });
  if (first == s.end()) {
    throw Error(Errc::AllDivisible, "every coefficient of q is divisible by " + std::to_string(p));
  }
  out.l = static_cast<int>(first - s.begin());
  out.u.assign(first, s.end());
  out.u.resize(q.size(), 0);
  return out;
}

UnitDecomposition unit_decompose(const PowerSeries& q, int p) {
  const auto& t = q.truncation();
  Modulus mod(t.m);
  if (!mod.is_prime_power() || mod.factors()[0].prime != p) {
    throw Error(Errc::InvalidContext, "unit_decompose requires a modulus that is a power of " + std::to_string(p));
  }
  std::vector<BigInt> c = q.balanced();
  return unit_decompose(c, p);
}

CongruenceExponent congruence_exponent(const QuotientRing& ring, int p, int k) {
  if (ipow(p, k) != ring.modulus()) {
    throw Error(Errc::InvalidContext, "congruence_exponent needs modulus p^k = " + ipow(p, k).str());
  }
  const int D = ring.degree_bound();
  const int j = ring.shift();
  const BigInt M = ipow(ring.modulus(), ring.working_digits());
  Coeffs q = resized(ring.q(), D);
  UnitDecomposition dec = unit_decompose(q, p);

  // r = p (p^{k-1} - t x^j) - x^{j+l} u, so p (p^{k-1} - t x^j) u^{-1} == x^{j+l}.
  Coeffs base(static_cast<std::size_t>(D + 1), 0);
  base[0] = ipow(p, k - 1);
  for (int i = 0; i + j <= D; ++i) base[static_cast<std::size_t>(i + j)] -= dec.t[static_cast<std::size_t>(i)];
  Coeffs uinv = invert_mod(resized(dec.u, D), D, M);

  CongruenceExponent out;
  out.l_total = j + dec.l;
  out.witness = mul_mod(base, uinv, D, M);

  Coeffs check(static_cast<std::size_t>(D + 1), 0);
  if (out.l_total <= D) check[static_cast<std::size_t>(out.l_total)] = 1;
  for (int i = 0; i <= D; ++i) check[static_cast<std::size_t>(i)] -= p * out.witness[static_cast<std::size_t>(i)];
  if (!ring.reduce(check).is_zero()) {
    throw Error(Errc::Overflow, "internal: congruence witness failed to reduce to zero");
  }
  return out;
}

ProMGenerators pro_m_generators(const QuotientRing& ring) {
  const int m = ring.modulus();
  const int D = ring.degree_bound();
  const int W = ring.working_digits();
  const Modulus mod(m);
  ProMGenerators out;

  if (mod.is_prime_power()) {
    LV lv = prime_power_exponent(ring, mod.factors()[0].prime, mod.factors()[0].exponent);
    out.l = lv.l;
    out.v = lv.v;
  } else {
    // Component i lives in Z_P[[x]], P = p^k, where r = c P - q x^j with c
    // a unit; its relator is P - c^{-1} q x^j.
    const BigInt M = ipow(m, W);
    struct Component {
      BigInt modulus;  // P^W
      BigInt c_inv;
      LV lv;
    };
    std::vector<Component> comps;
    for (const auto& f : mod.factors()) {
      const int P = static_cast<int>(ipow(f.prime, f.exponent));
      const BigInt PW = ipow(P, W);
      const BigInt c_inv = inverse_mod(m / P, PW);
      Coeffs qi = resized(ring.q(), D);
      for (auto& x : qi) x = floor_mod(x * c_inv, PW);
      QuotientRing sub(P, ring.shift(), qi, D);
      comps.push_back({PW, c_inv, prime_power_exponent(sub, f.prime, f.exponent)});
    }
    for (const auto& c : comps) out.l = std::max(out.l, c.lv.l);
    out.v.assign(static_cast<std::size_t>(D + 1), 0);
    for (const auto& c : comps) {
      // v_i' = c^{-1} x^{l - l_i} v_i, then CRT into Z/M.
      const BigInt other = M / c.modulus;
      const BigInt e = other * inverse_mod(other, c.modulus);
      const int s = out.l - c.lv.l;
      for (int d = 0; d + s <= D; ++d) {
        BigInt comp = floor_mod(c.c_inv * c.lv.v[static_cast<std::size_t>(d)], c.modulus);
        out.v[static_cast<std::size_t>(d + s)] += e * comp;
      }
    }
    for (auto& x : out.v) x = floor_mod(x, M);
  }
  verify_exponent(ring, out.l, out.v);
  for (int i = 0; i < out.l; ++i) out.generators.push_back(ring.monomial(i));
  return out;
}

}  // namespace selfsim::adic
