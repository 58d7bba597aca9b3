#include "selfsim/level_perm.hpp"

#include <numeric>

#include "selfsim/kernels.hpp"

namespace selfsim::tree {
namespace {

[[noreturn]] void shape_error(const WreathGenerator& g, const std::string& why) {
  throw Error(Errc::ShapeMismatch, "generator " + g.name + " is not of the form (a^{q_1},...,a^{q_m}) sigma: " + why);
}

// Integer coefficients of the exponent of `e` as a power of the generator.
std::vector<adic::BigInt> exponent_of(const WreathGenerator& g, const AutExpr& e) {
  using K = AutExpr::Kind;
  switch (e.kind()) {
    case K::Identity: return {0};
    case K::Gen:
      if (e.name() != g.name) shape_error(g, "entry mentions " + e.name());
      return {1};
    case K::Pow: {
      auto base = exponent_of(g, e.lhs());
      const auto& q = e.exponent();
      std::vector<adic::BigInt> out(base.size() + static_cast<std::size_t>(q.degree_bound()) + 1);
      for (std::size_t i = 0; i < base.size(); ++i) {
        for (int k = 0; k <= q.degree_bound(); ++k) out[i + static_cast<std::size_t>(k)] += base[i] * q[k].value();
      }
      return out;
    }
    case K::Diag: {
      auto base = exponent_of(g, e.lhs());
      base.insert(base.begin(), static_cast<std::size_t>(e.shift()), adic::BigInt(0));
      return base;
    }
    case K::Inv: {
      auto base = exponent_of(g, e.lhs());
      for (auto& c : base) c = -c;
      return base;
    }
    case K::Mul: {
      auto a = exponent_of(g, e.lhs());
      auto b = exponent_of(g, e.rhs());
      if (a.size() < b.size()) a.resize(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
      return a;
    }
  }
  shape_error(g, "unknown entry");
}

}  // namespace

std::vector<std::vector<adic::BigInt>> power_shape(const WreathGenerator& g) {
  if (!g.root.is_full_cycle()) shape_error(g, "root " + g.root.cycle_string() + " is not an m-cycle");
  std::vector<std::vector<adic::BigInt>> q;
  for (const auto& e : g.entries) q.push_back(exponent_of(g, e));
  return q;
}

std::vector<std::uint32_t> perm_power(const std::vector<std::uint32_t>& p, const adic::BigInt& c) {
  std::vector<std::uint32_t> acc(p.size());
  std::iota(acc.begin(), acc.end(), 0u);
  std::vector<std::uint32_t> base = p;
  std::vector<std::uint32_t> tmp(p.size());
  adic::BigInt e = c;
  while (e > 0) {
    if ((e & 1) != 0) {
      kernels::compose(acc, base, tmp);
      acc.swap(tmp);
    }
    e >>= 1;
    if (e > 0) {
      kernels::compose(base, base, tmp);
      base.swap(tmp);
    }
  }
  return acc;
}

std::vector<std::uint32_t> level_perm_fast(const WreathGenerator& g, int l) {
  const auto q = power_shape(g);
  const int m = g.root.degree();
  std::vector<std::vector<std::uint32_t>> P{{0}};
  std::vector<std::size_t> width{1};
  for (int n = 1; n <= l; ++n) width.push_back(width.back() * static_cast<std::size_t>(m));

  for (int n = 1; n <= l; ++n) {
    const std::size_t M = width[static_cast<std::size_t>(n - 1)];
    std::vector<std::uint32_t> out(M * static_cast<std::size_t>(m));
    std::vector<std::uint32_t> pi(M), factor(M), tmp(M);
    for (int y = 0; y < m; ++y) {
      std::iota(pi.begin(), pi.end(), 0u);
      const auto& qy = q[static_cast<std::size_t>(y)];
      // degree j acts blockwise on the last n-1-j letters
      for (int j = 0; j + 1 < n && j < static_cast<int>(qy.size()); ++j) {
        const int sub = n - 1 - j;
        const adic::BigInt c = adic::floor_mod(qy[static_cast<std::size_t>(j)], adic::ipow(m, sub));
        if (c == 0) continue;
        const auto Q = perm_power(P[static_cast<std::size_t>(sub)], c);
        const std::size_t S = width[static_cast<std::size_t>(sub)];
        for (std::size_t b = 0; b < M / S; ++b) {
          kernels::offset_copy(Q, static_cast<std::uint32_t>(b * S), std::span(factor).subspan(b * S, S));
        }
        kernels::compose(pi, factor, tmp);
        pi.swap(tmp);
      }
      const auto target = static_cast<std::uint32_t>(static_cast<std::size_t>(g.root[y]) * M);
      kernels::offset_copy(pi, target, std::span(out).subspan(static_cast<std::size_t>(y) * M, M));
    }
    P.push_back(std::move(out));
  }
  return P[static_cast<std::size_t>(l)];
}

}  // namespace selfsim::tree
