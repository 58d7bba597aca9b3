#include "selfsim/adic.hpp"

#include <algorithm>
#include <numeric>

namespace selfsim::adic {

Modulus::Modulus(int m) : m_(m) {
  if (m < 2 || m > 65535) {
    throw Error(Errc::InvalidContext, "modulus must lie in [2, 65535], got " + std::to_string(m));
  }
  int rest = m;
  for (int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    factors_.push_back({p, k});
  }
  if (rest > 1) factors_.push_back({rest, 1});
}

void require_same(const Truncation& a, const Truncation& b) {
  if (!(a == b)) {
    throw Error(Errc::ContextMismatch,
                "truncation mismatch: (m=" + std::to_string(a.m) + ",K=" + std::to_string(a.K) +
                    ",D=" + std::to_string(a.D) + ") vs (m=" + std::to_string(b.m) +
                    ",K=" + std::to_string(b.K) + ",D=" + std::to_string(b.D) + ")");
  }
}

BigInt ipow(int m, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= m;
  return r;
}

BigInt floor_mod(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

BigInt inverse_mod(const BigInt& a, const BigInt& n) {
  BigInt old_r = floor_mod(a, n), r = n;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw Error(Errc::NonUnit, "element is not invertible modulo " + n.str());
  return floor_mod(old_s, n);
}

// ---------------------------------------------------------------------------

MAdicInt::MAdicInt(int m, int K) : m_(m), digits_(static_cast<std::size_t>(K), 0) {
  if (m < 2) throw Error(Errc::InvalidContext, "m-adic modulus must be >= 2");
  if (K < 1) throw Error(Errc::InvalidContext, "m-adic precision must be >= 1");
}

MAdicInt MAdicInt::from_integer(int m, int K, const BigInt& v) {
  MAdicInt r(m, K);
  BigInt u = floor_mod(v, ipow(m, K));
  for (auto& d : r.digits_) {
    d = static_cast<std::uint32_t>(u % m);
    u /= m;
  }
  return r;
}

MAdicInt MAdicInt::from_digits(int m, std::vector<std::uint32_t> digits) {
  MAdicInt r(m, static_cast<int>(digits.size()));
  for (auto d : digits) {
    if (d >= static_cast<std::uint32_t>(m)) {
      throw Error(Errc::InvalidContext, "digit out of range for base " + std::to_string(m));
    }
  }
  r.digits_ = std::move(digits);
  return r;
}

BigInt MAdicInt::value() const {
  BigInt v = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) v = v * m_ + *it;
  return v;
}

BigInt MAdicInt::balanced() const {
  BigInt v = value();
  BigInt M = ipow(m_, precision());
  if (2 * v > M) v -= M;
  return v;
}

bool MAdicInt::is_zero() const {
  return std::all_of(digits_.begin(), digits_.end(), [](auto d) { return d == 0; });
}

bool MAdicInt::is_unit() const { return std::gcd(static_cast<int>(digits_[0]), m_) == 1; }

void MAdicInt::check_compatible(const MAdicInt& o) const {
  if (m_ != o.m_ || digits_.size() != o.digits_.size()) {
    throw Error(Errc::ContextMismatch, "m-adic operands differ in modulus or precision");
  }
}

MAdicInt MAdicInt::operator-() const {
  MAdicInt r(m_, precision());
  if (is_zero()) return r;
  std::uint32_t carry = 1;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    std::uint32_t d = static_cast<std::uint32_t>(m_ - 1) - digits_[i] + carry;
    carry = d >= static_cast<std::uint32_t>(m_) ? 1 : 0;
    r.digits_[i] = carry ? d - m_ : d;
  }
  return r;
}

MAdicInt& MAdicInt::operator+=(const MAdicInt& o) {
  check_compatible(o);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    std::uint32_t s = digits_[i] + o.digits_[i] + carry;
    carry = s >= static_cast<std::uint32_t>(m_) ? 1 : 0;
    digits_[i] = carry ? s - m_ : s;
  }
  return *this;
}

MAdicInt& MAdicInt::operator*=(const MAdicInt& o) {
  check_compatible(o);
  const std::size_t K = digits_.size();
  std::vector<std::uint32_t> out(K, 0);
  std::uint64_t carry = 0;
  for (std::size_t t = 0; t < K; ++t) {
    std::uint64_t acc = carry;
    for (std::size_t i = 0; i <= t; ++i) {
      acc += static_cast<std::uint64_t>(digits_[i]) * o.digits_[t - i];
    }
    out[t] = static_cast<std::uint32_t>(acc % static_cast<std::uint64_t>(m_));
    carry = acc / static_cast<std::uint64_t>(m_);
  }
  digits_ = std::move(out);
  return *this;
}

MAdicInt invert(const MAdicInt& a) {
  const int m = a.modulus();
  if (!a.is_unit()) {
    throw Error(Errc::NonUnit, "m-adic integer with leading digit " + std::to_string(a.digit(0)) +
                                   " is not a unit for m=" + std::to_string(m));
  }
  const auto d0inv = static_cast<std::uint64_t>(inverse_mod(a.digit(0), m));
  const int K = a.precision();
  std::vector<std::uint32_t> u(static_cast<std::size_t>(K), 0);
  const MAdicInt one = MAdicInt::from_integer(m, K, 1);
  for (int t = 0; t < K; ++t) {
    MAdicInt err = one - a * MAdicInt::from_digits(m, u);
    // err is divisible by m^t; lift one digit.
    u[static_cast<std::size_t>(t)] =
        static_cast<std::uint32_t>((err.digit(t) * d0inv) % static_cast<std::uint64_t>(m));
  }
  return MAdicInt::from_digits(m, std::move(u));
}

std::vector<MAdicInt> idempotents(const Modulus& mod, int K) {
  const BigInt M = ipow(mod.value(), K);
  std::vector<MAdicInt> out;
  if (mod.is_prime_power()) {
    out.push_back(MAdicInt::from_integer(mod.value(), K, 1));
    return out;
  }
  for (const auto& f : mod.factors()) {
    BigInt P = ipow(f.prime, f.exponent * K);
    BigInt C = M / P;
    out.push_back(MAdicInt::from_integer(mod.value(), K, C * inverse_mod(C, P)));
  }
  return out;
}

// ---------------------------------------------------------------------------

PowerSeries::PowerSeries(const Truncation& t)
    : t_(t), coeffs_(static_cast<std::size_t>(t.D + 1), MAdicInt(t.m, t.K)) {
  if (t.D < 0) throw Error(Errc::InvalidContext, "degree bound must be >= 0");
}

PowerSeries PowerSeries::from_integers(const Truncation& t, std::span<const BigInt> coeffs) {
  PowerSeries s(t);
  for (std::size_t i = 0; i < coeffs.size() && i <= static_cast<std::size_t>(t.D); ++i) {
    s.coeffs_[i] = MAdicInt::from_integer(t.m, t.K, coeffs[i]);
  }
  return s;
}

PowerSeries PowerSeries::from_integers(const Truncation& t, std::initializer_list<long long> coeffs) {
  std::vector<BigInt> v(coeffs.begin(), coeffs.end());
  return from_integers(t, v);
}

PowerSeries PowerSeries::constant(const Truncation& t, const MAdicInt& c) {
  PowerSeries s(t);
  s.set(0, c);
  return s;
}

PowerSeries PowerSeries::monomial(const Truncation& t, long long c, int degree) {
  PowerSeries s(t);
  if (degree >= 0 && degree <= t.D) s.coeffs_[static_cast<std::size_t>(degree)] = MAdicInt::from_integer(t.m, t.K, c);
  return s;
}

void PowerSeries::set(int i, const MAdicInt& c) {
  if (c.modulus() != t_.m || c.precision() != t_.K) {
    throw Error(Errc::ContextMismatch, "coefficient does not match series truncation");
  }
  coeffs_.at(static_cast<std::size_t>(i)) = c;
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MAdicInt& c) { return c.is_zero(); });
}

int PowerSeries::valuation() const {
  for (int i = 0; i <= t_.D; ++i) {
    if (!(*this)[i].is_zero()) return i;
  }
  return t_.D + 1;
}

std::vector<BigInt> PowerSeries::balanced() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.balanced());
  return out;
}

PowerSeries PowerSeries::shifted(int s) const {
  PowerSeries r(t_);
  for (int i = 0; i + s <= t_.D; ++i) {
    if (i + s >= 0) r.coeffs_[static_cast<std::size_t>(i + s)] = coeffs_[static_cast<std::size_t>(i)];
  }
  return r;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r(t_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  require_same(t_, o.t_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  require_same(a.t_, b.t_);
  PowerSeries r(a.t_);
  const int D = a.t_.D;
  for (int i = 0; i <= D; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= D; ++j) {
      if (b[j].is_zero()) continue;
      r.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
  }
  return r;
}

PowerSeries operator*(const MAdicInt& c, const PowerSeries& s) {
  PowerSeries r(s.t_);
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) r.coeffs_[i] = c * s.coeffs_[i];
  return r;
}

PowerSeries invert(const PowerSeries& a) {
  const auto& t = a.truncation();
  PowerSeries b(t);
  const MAdicInt b0 = invert(a[0]);
  b.set(0, b0);
  for (int n = 1; n <= t.D; ++n) {
    MAdicInt acc(t.m, t.K);
    for (int k = 1; k <= n; ++k) acc += a[k] * b[n - k];
    b.set(n, -(b0 * acc));
  }
  return b;
}

}  // namespace selfsim::adic
