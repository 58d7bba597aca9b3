#include "selfsim/conjugator.hpp"

#include <numeric>

#include "selfsim/level_perm.hpp"
#include "selfsim/series_io.hpp"

namespace selfsim::tree {

namespace {

std::vector<std::vector<int>> cycles_of(const Permutation& s) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(s.degree()), false);
  for (int i = 0; i < s.degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> c;
    for (int k = i; !seen[static_cast<std::size_t>(k)]; k = s[k]) {
      seen[static_cast<std::size_t>(k)] = true;
      c.push_back(k);
    }
    out.push_back(std::move(c));
  }
  return out;
}

NodeId solve(Forest& f, NodeId b, NodeId a, int depth) {
  if (depth <= 0) return kIdentityNode;
  if (a == b) return kIdentityNode;
  const int m = f.degree();
  const Permutation sb = f.root(b);
  const Permutation sa = f.root(a);
  auto cb = cycles_of(sb);
  auto ca = cycles_of(sa);
  // pair cycles of equal length, in order of their smallest point
  std::vector<bool> used(ca.size(), false);
  std::vector<int> rho(static_cast<std::size_t>(m), -1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < cb.size(); ++x) {
    std::size_t y = 0;
    while (y < ca.size() && (used[y] || ca[y].size() != cb[x].size())) ++y;
    if (y == ca.size()) throw Error(Errc::NotConjugate, "roots " + sb.cycle_string() + " and " + sa.cycle_string() + " differ in cycle type");
    used[y] = true;
    pairs.emplace_back(x, y);
    for (std::size_t t = 0; t < cb[x].size(); ++t) rho[static_cast<std::size_t>(cb[x][t])] = ca[y][t];
  }
  const Permutation r = Permutation::from_zero_based(rho);

  std::vector<NodeId> h(static_cast<std::size_t>(m), kIdentityNode);
  for (auto [x, y] : pairs) {
    const auto& cyc = cb[x];
    const int k = static_cast<int>(cyc.size());
    const Element bk = pow(f, Element{b, depth}, k);
    const Element ak = pow(f, Element{a, depth}, k);
    const int i0 = cyc[0];
    NodeId hi = solve(f, f.child(bk.node, i0), f.child(ak.node, ca[y][0]), depth - 1);
    for (int t = 0; t + 1 < k; ++t) {
      const int it = cyc[static_cast<std::size_t>(t)];
      h[static_cast<std::size_t>(it)] = hi;
      hi = f.mul(f.mul(f.inv(f.child(b, it)), hi), f.child(a, r[it]));
      hi = f.truncate(hi, depth - 1);
    }
    h[static_cast<std::size_t>(cyc.back())] = hi;
  }
  return f.make(r, h);
}

}  // namespace

Element conjugator(Forest& f, const Element& b0, const Element& a0) {
  const int d = std::min(b0.depth, a0.depth);
  const Element b = truncate(f, b0, d);
  const Element a = truncate(f, a0, d);
  Element h{solve(f, b.node, a.node, d), d};
  if (conjugate(f, b, h) != a) throw Error(Errc::NotConjugate, "constructed conjugator fails the check to depth " + std::to_string(d));
  return h;
}

Prop4Result prop4_conjugator(Forest& f, Evaluator& ev, const std::string& beta, int depth) {
  const WreathGenerator& g = ev.system().at(beta);
  const auto p = power_shape(g);
  const int m = g.root.degree();
  std::vector<adic::BigInt> sum;
  for (const auto& pi : p) {
    if (sum.size() < pi.size()) sum.resize(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) sum[i] += pi[i];
  }
  std::size_t v = 0;
  while (v < sum.size() && sum[v] == 0) ++v;
  if (v == sum.size()) throw Error(Errc::NonUnitSum, "p_1 + ... + p_m = 0");
  if (std::gcd(static_cast<int>(adic::floor_mod(sum[v], m)), m) != 1) {
    throw Error(Errc::NonUnitSum, "p_1 + ... + p_m = " + adic::format_integer_series(sum) +
                                      " is not an invertible series times a power of x");
  }
  Prop4Result res;
  res.j = static_cast<int>(v) + 1;
  res.q.assign(sum.begin() + static_cast<std::ptrdiff_t>(v), sum.end());

  GeneratorSystem am(m);
  am.add(adding_machine(m, res.j, "alpha"));
  Evaluator aev(f, am);
  res.alpha = aev.generator("alpha", depth);
  res.h = conjugator(f, ev.generator(beta, depth), res.alpha);
  return res;
}

Example3Sequences example3_sequences(const adic::PowerSeries& q, int n_max) {
  const auto& t = q.truncation();
  Example3Sequences s;
  const auto one = adic::PowerSeries::monomial(t, 1, 0);
  const auto two = adic::MAdicInt::from_integer(t.m, t.K, 2);
  s.c.push_back(one);
  s.c_prime.push_back(adic::PowerSeries(t));
  for (int n = 1; n <= n_max; ++n) {
    s.c.push_back(n == 1 ? q : two * s.c[static_cast<std::size_t>(n - 2)] + s.c[static_cast<std::size_t>(n - 1)]);
    s.c_prime.push_back(s.c[static_cast<std::size_t>(n - 1)] + s.c_prime[static_cast<std::size_t>(n - 1)]);
  }
  return s;
}

Element example3_conjugator(Forest& f, const Element& beta, const Example3Sequences& s, int depth) {
  if (f.degree() != 2) throw Error(Errc::ContextMismatch, "the closed form lives on the binary tree");
  Element h = identity(depth);
  for (int n = 0; n < depth && n < static_cast<int>(s.c_prime.size()); ++n) {
    const Element b = truncate(f, beta, depth - n - 1);
    const Element entry = pow_series(f, b, -s.c_prime[static_cast<std::size_t>(n)]);
    const NodeId kids[2] = {kIdentityNode, entry.node};
    const Element factor{f.make(PermId{0}, kids), depth - n};
    h = mul(f, h, diagonal(f, factor, n));
  }
  return h;
}

}  // namespace selfsim::tree
