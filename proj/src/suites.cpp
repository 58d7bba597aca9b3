#include "selfsim/suites.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "selfsim/closure.hpp"
#include "selfsim/conjugator.hpp"
#include "selfsim/expr.hpp"
#include "selfsim/kernels.hpp"
#include "selfsim/level_perm.hpp"
#include "selfsim/machine.hpp"
#include "selfsim/portrait.hpp"
#include "selfsim/presentation.hpp"
#include "selfsim/quotient.hpp"
#include "selfsim/series_io.hpp"

namespace selfsim::suites {

using adic::BigInt;
using adic::PowerSeries;
using adic::Truncation;
using tree::AutExpr;
using tree::Element;
using tree::Evaluator;
using tree::Forest;
using tree::GeneratorSystem;
using tree::Permutation;

bool SuiteResult::passed() const { return failures() == 0 && !checks.empty(); }

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

nlohmann::json to_json(const SuiteResult& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return {{"suite", r.suite}, {"title", r.title}, {"passed", r.passed()}, {"checks", checks}};
}

namespace {

// Runs fn and records a check; exceptions count as failures with their text.
template <class Fn>
void check(SuiteResult& r, const std::string& name, Fn&& fn) {
  Check c{name, false, {}};
  try {
    c.pass = fn(c.detail);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  r.checks.push_back(std::move(c));
}

PowerSeries series(const Truncation& t, std::initializer_list<long long> c) { return PowerSeries::from_integers(t, c); }

PowerSeries series(const Truncation& t, const std::vector<BigInt>& c) { return PowerSeries::from_integers(t, c); }

std::vector<BigInt> random_poly(std::mt19937_64& rng, int max_degree, int lo, int hi) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(lo, hi);
  std::vector<BigInt> p(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& c : p) c = coef(rng);
  return p;
}

Permutation full_cycle(int m) {
  std::vector<int> c(static_cast<std::size_t>(m));
  std::iota(c.begin(), c.end(), 1);
  return Permutation::from_cycles(m, {c});
}

// ---------------------------------------------------------------------------

SuiteResult example1() {
  SuiteResult r;
  const int depth = 8;
  const Truncation t{2, depth, depth};
  Forest f(2);
  rep::FgAbelianGroup G(1, {});
  rep::VirtualEndo v(G, {{2}}, {{1}});
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; l <= 2; ++l) {
      check(r, "phi_{" + std::to_string(k) + "," + std::to_string(l) + "}(a) = (a^{k-l}, a^{-k+l+1}) sigma",
            [&](std::string&) {
              rep::SelfSimilarMachine M(v, rep::Transversal{{{2 * k}, {2 * l + 1}}});
              GeneratorSystem s(2);
              s.add(tree::power_generator("a", {series(t, {k - l}), series(t, {-k + l + 1})}));
              Evaluator ev(f, s);
              return tree::extract_portrait(f, M.element(f, {1}, depth), depth) ==
                     tree::extract_portrait(f, ev.generator("a", depth), depth);
            });
    }
  }
  return r;
}

SuiteResult example2() {
  SuiteResult r;
  const int L = 10;
  const Truncation t{4, L, L};
  Forest f(4);
  GeneratorSystem s(4);
  s.add({"a", full_cycle(4), {AutExpr(), AutExpr(), AutExpr(), AutExpr::gen("a").pow(series(t, {2}))}});
  Evaluator ev(f, s);
  const Element a = ev.generator("a", L);
  const Element a2 = tree::mul(f, a, a);
  const Element kappa = ev.eval(AutExpr::gen("a").pow(series(t, {2, -1})), L);

  const Element a2d = tree::truncate(f, a2, L - 1);
  check(r, "a^2 = (e, e, a^2, a^2)(1 3)(2 4), states by source vertex", [&](std::string&) {
    const tree::NodeId kids[4] = {0, 0, a2d.node, a2d.node};
    return Element{f.make(Permutation::from_cycles(4, {{1, 3}, {2, 4}}), kids), L} == a2;
  });
  // Reading a tuple with entry k as the state at the preimage of k, the same
  // recursion text defines p = (e, e, p^2, e)(1 2 3 4) in the convention above.
  check(r, "with states listed by image vertex, a^2 = (a^2, e, e, a^2)(1 3)(2 4)", [&](std::string&) {
    GeneratorSystem ps(4);
    ps.add({"p", full_cycle(4), {AutExpr(), AutExpr(), AutExpr::gen("p").pow(series(t, {2})), AutExpr()}});
    Evaluator pev(f, ps);
    const Element p2 = tree::mul(f, pev.generator("p", L), pev.generator("p", L));
    const Element p2d = tree::truncate(f, p2, L - 1);
    const Permutation rho = f.root(p2.node);
    if (rho != Permutation::from_cycles(4, {{1, 3}, {2, 4}})) return false;
    const Element expected[4] = {p2d, tree::identity(L - 1), tree::identity(L - 1), p2d};
    for (int k = 0; k < 4; ++k) {
      const int w[1] = {rho.inverse()[k] + 1};
      if (tree::state(f, p2, w) != expected[k]) return false;
    }
    return true;
  });
  check(r, "a^4 = a^{2x}", [&](std::string&) {
    return tree::mul(f, a2, a2) == ev.eval(AutExpr::gen("a").pow(series(t, {0, 2})), L);
  });
  check(r, "kappa = a^{2-x} has kappa^2 = e", [&](std::string&) { return tree::mul(f, kappa, kappa).is_identity(); });
  check(r, "kappa != e", [&](std::string& d) {
    d = "kappa fixes " + std::to_string(tree::stabilized_levels(f, kappa)) + " levels";
    return !kappa.is_identity();
  });
  for (const std::vector<int>& block : {std::vector<int>{1, 3}, std::vector<int>{2, 4}}) {
    check(r, "a^2 on T({" + std::to_string(block[0]) + "," + std::to_string(block[1]) +
                 "}) is the binary adding machine (e, t)(1 2)",
          [&](std::string&) {
            Forest f2(2);
            GeneratorSystem bin(2);
            bin.add(tree::adding_machine(2, 1, "t"));
            Evaluator eb(f2, bin);
            return tree::restrict_element(f, a2, block, f2) == eb.generator("t", L);
          });
  }
  // a^{x^{i+1}} = (a^{x^i})^x: with a^x = a^2 kappa, a^{n x} = a^{2n} kappa^n.
  // Track a^{x^i} = a^{n} prod_k (kappa^{x^k})^{e_k}, e_k in {0, 1}.
  long long n = 1;
  std::vector<int> e;
  for (int i = 1; i <= 4; ++i) {
    std::vector<int> next{static_cast<int>(((n % 2) + 2) % 2)};
    next.insert(next.end(), e.begin(), e.end());
    e = next;
    n *= 2;
    std::ostringstream name;
    name << "a^{x^" << i << "} = a^" << n;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k]) name << " kappa^{x^" << k << "}";
    }
    name << " lies in <a, K>";
    check(r, name.str(), [&, i, n, e](std::string&) {
      Element w = tree::pow(f, a, n);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k]) w = tree::mul(f, w, tree::diagonal_same_depth(f, kappa, static_cast<int>(k)));
      }
      return w == ev.eval(AutExpr::gen("a").diagonal(i), L);
    });
  }
  for (int i = 0; i <= 4; ++i) {
    check(r, "kappa^{x^" + std::to_string(i) + "} has order 2", [&, i](std::string&) {
      const Element k = tree::diagonal_same_depth(f, kappa, i);
      return !k.is_identity() && tree::mul(f, k, k).is_identity();
    });
  }
  return r;
}

SuiteResult example3() {
  SuiteResult r;
  const int L = 10;
  const Truncation t{2, L, L};
  Forest f(2);
  GeneratorSystem s(2);
  s.add({"b", full_cycle(2), {AutExpr(), AutExpr::gen("b").pow(series(t, {1, 1}))}});
  Evaluator ev(f, s);
  const Element b = ev.generator("b", L);
  GeneratorSystem am(2);
  am.add(tree::adding_machine(2, 1, "a"));
  Evaluator ea(f, am);
  const Element alpha = ea.generator("a", L);

  tree::Prop4Result p4;
  check(r, "constructive conjugator h: b^h = (e, a)(1 2)", [&](std::string& d) {
    p4 = tree::prop4_conjugator(f, ev, "b", L);
    d = "j = " + std::to_string(p4.j) + ", q = " + adic::format_integer_series(p4.q);
    return p4.j == 1 && tree::conjugate(f, b, p4.h) == alpha;
  });
  const auto seq = tree::example3_sequences(series(t, {1, 1}), L);
  check(r, "c'_1 = 1, c'_2 = 1 + q, c'_3 = 5 + 2x", [&](std::string&) {
    return seq.c_prime[1] == series(t, {1}) && seq.c_prime[2] == series(t, {2, 1}) &&
           seq.c_prime[3] == series(t, {5, 2});
  });
  Element closed;
  check(r, "closed form prod (e, b^{-c'_n})^{(n)} conjugates b to (e, a)(1 2)", [&](std::string&) {
    closed = tree::example3_conjugator(f, b, seq, L);
    return tree::conjugate(f, b, closed) == alpha;
  });
  check(r, "the two conjugators agree", [&](std::string&) { return closed == p4.h && !closed.is_identity(); });
  return r;
}

SuiteResult dmj() {
  SuiteResult r;
  for (int m = 2; m <= 5; ++m) {
    for (int j = 1; j <= 3; ++j) {
      const std::string tag = "D_" + std::to_string(m) + "(" + std::to_string(j) + ")";
      const int L = 12;
      const Truncation t{m, L, L};
      Forest f(m);
      GeneratorSystem s(m);
      s.add(tree::adding_machine(m, j, "a"));
      Evaluator ev(f, s);
      const Element a = ev.generator("a", L);
      std::vector<BigInt> rel(static_cast<std::size_t>(j) + 1);
      rel[0] = m;
      rel[static_cast<std::size_t>(j)] = -1;
      check(r, tag + ": a^{m - x^j} = e to depth 12", [&](std::string&) {
        return tree::annihilator_check(f, a, series(t, rel));
      });
      check(r, tag + ": state closure has j states", [&](std::string& d) {
        tree::ClosureOptions o;
        o.depth = 8;
        auto rep = tree::state_closure(ev, o);
        d = std::to_string(rep.states.size()) + " states";
        return rep.states.size() == static_cast<std::size_t>(j) && rep.transitive && rep.abelian;
      });
      check(r, tag + ": extract_relations gives r = m - x^j", [&](std::string& d) {
        auto pres = tree::extract_relations(f, {"a"}, {a}, t);
        d = "r = " + adic::format_series(pres.r);
        const auto ok = tree::verify_relations(f, pres, {a});
        return pres.r == series(t, rel) && ok.size() == 1 && ok[0];
      });
      check(r, tag + ": pro-m generators 1, x, ..., x^{j-1}", [&](std::string& d) {
        adic::QuotientRing ring(m, j, {1}, L);
        auto g = adic::pro_m_generators(ring);
        d = "l = " + std::to_string(g.l);
        if (g.l != j || static_cast<int>(g.generators.size()) != j) return false;
        for (int i = 0; i < j; ++i) {
          if (!(g.generators[static_cast<std::size_t>(i)] == ring.monomial(i))) return false;
        }
        return true;
      });
    }
  }
  return r;
}

// Random generators a = (a^{q_1}, ..., a^{q_m}) sigma shared by two suites.
struct RandomGenerator {
  int m;
  std::vector<std::vector<BigInt>> q;
};

std::vector<RandomGenerator> theorem8_fixtures() {
  std::mt19937_64 rng(0x5eed0008);
  std::vector<RandomGenerator> out;
  std::uniform_int_distribution<int> pick_m(2, 4);
  for (int n = 0; n < 50; ++n) {
    RandomGenerator g{pick_m(rng), {}};
    for (int i = 0; i < g.m; ++i) g.q.push_back(random_poly(rng, 3, -2, 3));
    out.push_back(std::move(g));
  }
  return out;
}

tree::WreathGenerator make_power_generator(const RandomGenerator& g, const Truncation& t) {
  std::vector<PowerSeries> q;
  for (const auto& qi : g.q) q.push_back(series(t, qi));
  return tree::power_generator("a", q);
}

SuiteResult theorem8() {
  SuiteResult r;
  std::mt19937_64 rng(0x5eed1008);
  int idx = 0;
  for (const auto& g : theorem8_fixtures()) {
    const int L = 8;
    const Truncation t{g.m, L, L};
    Forest f(g.m);
    GeneratorSystem s(g.m);
    s.add(make_power_generator(g, t));
    Evaluator ev(f, s);
    std::vector<BigInt> sum;
    for (const auto& qi : g.q) {
      if (sum.size() < qi.size()) sum.resize(qi.size());
      for (std::size_t k = 0; k < qi.size(); ++k) sum[k] += qi[k];
    }
    const std::string tag = "#" + std::to_string(idx++) + " " + s.generators()[0].to_string();
    check(r, tag + ": state closure abelian to depth 6", [&](std::string& d) {
      tree::ClosureOptions o;
      o.depth = 6;
      auto rep = tree::state_closure(ev, o);
      d = std::to_string(rep.states.size()) + " states";
      return rep.abelian && rep.transitive;
    });
    check(r, tag + ": m - x(q_1 + ... + q_m) kills a to depth 8", [&](std::string& d) {
      std::vector<BigInt> rel{BigInt(g.m)};
      for (const auto& c : sum) rel.push_back(-c);
      d = "r = " + adic::format_integer_series(rel);
      return tree::annihilator_check(f, ev.generator("a", L), series(t, rel));
    });
    check(r, tag + ": peel then rebuild reproduces random powers", [&](std::string&) {
      const Element a = ev.generator("a", L);
      tree::PermLog log({f.root(a.node)});
      for (int trial = 0; trial < 3; ++trial) {
        const Element w = ev.eval(AutExpr::gen("a").pow(series(t, random_poly(rng, 4, -6, 6))) *
                                      AutExpr::gen("a").pow(series(t, random_poly(rng, 2, -3, 3))).inverse(),
                                  L);
        auto coeffs = tree::peel(f, {a}, log, w, t);
        if (tree::rebuild(f, {a}, coeffs, L) != w) return false;
      }
      return true;
    });
  }
  return r;
}

SuiteResult oracle() {
  SuiteResult r;
  int idx = 0;
  for (const auto& g : theorem8_fixtures()) {
    const int L = 6;
    const Truncation t{g.m, L, L};
    Forest f(g.m);
    GeneratorSystem s(g.m);
    s.add(make_power_generator(g, t));
    Evaluator ev(f, s);
    check(r, "#" + std::to_string(idx++) + " levels 1..6", [&](std::string& d) {
      const Element a = ev.generator("a", L);
      for (int l = 1; l <= L; ++l) {
        const auto slow = tree::level_permutation(tree::extract_portrait(f, a, l), l);
        for (auto isa : {kernels::Isa::Scalar, kernels::detected_isa()}) {
          const auto prev = kernels::active_isa();
          kernels::set_active_isa(isa);
          const auto fast = tree::level_perm_fast(s.generators()[0], l);
          kernels::set_active_isa(prev);
          if (fast != slow) {
            d = "level " + std::to_string(l) + " differs under " + kernels::isa_name(isa);
            return false;
          }
        }
      }
      return true;
    });
  }
  return r;
}

SuiteResult quotient() {
  SuiteResult r;
  std::mt19937_64 rng(0x5eed0007);
  const int moduli[] = {2, 3, 4, 6, 9};
  std::uniform_int_distribution<int> pick(0, 4), pick_j(1, 2);
  for (int n = 0; n < 100; ++n) {
    const int m = moduli[pick(rng)];
    const int j = pick_j(rng);
    auto q = random_poly(rng, 2, -3, 3);
    const int D = 8;
    adic::QuotientRing ring(m, j, q, D);
    auto a = random_poly(rng, 6, -50, 50);
    auto b = random_poly(rng, 6, -50, 50);
    std::ostringstream name;
    name << "#" << n << " r = " << adic::format_series(ring.relator(D + 2));
    check(r, name.str(), [&](std::string&) {
      auto add = [](std::vector<BigInt> x, const std::vector<BigInt>& y) {
        if (x.size() < y.size()) x.resize(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
        return x;
      };
      auto mul = [](const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
        std::vector<BigInt> z(x.size() + y.size() - 1);
        for (std::size_t i = 0; i < x.size(); ++i) {
          for (std::size_t k = 0; k < y.size(); ++k) z[i + k] += x[i] * y[k];
        }
        return z;
      };
      auto big = [](const adic::QuotientElement& e) { return std::vector<BigInt>(e.digits.begin(), e.digits.end()); };
      const auto ra = ring.reduce(a);
      const auto rb = ring.reduce(b);
      return ring.reduce(big(ra)) == ra && ring.reduce(add(a, b)) == ring.reduce(add(big(ra), big(rb))) &&
             ring.reduce(mul(a, b)) == ring.reduce(mul(big(ra), big(rb)));
    });
  }
  check(r, "r = 2 - x: reduce(n) is the binary expansion of n for 0 <= n <= 255", [&](std::string& d) {
    adic::QuotientRing ring(2, 1, {1}, 10);
    for (int v = 0; v < 256; ++v) {
      auto e = ring.reduce(std::vector<BigInt>{v});
      for (int i = 0; i <= 10; ++i) {
        if (e.digits[static_cast<std::size_t>(i)] != ((v >> i) & 1)) {
          d = "n = " + std::to_string(v);
          return false;
        }
      }
    }
    return true;
  });
  return r;
}

SuiteResult congruence() {
  SuiteResult r;
  std::mt19937_64 rng(0x5eed0006);
  struct PK {
    int p, k;
  };
  const PK mods[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}};
  std::uniform_int_distribution<int> pick(0, 5), pick_j(1, 3);
  int torsion_free = 0;
  for (int n = 0; torsion_free < 20; ++n) {
    const auto [p, k] = mods[pick(rng)];
    int m = 1;
    for (int i = 0; i < k; ++i) m *= p;
    const int j = pick_j(rng);
    auto q = random_poly(rng, 3, -m, m);
    const bool divisible = n % 3 == 2;
    if (divisible) {
      for (auto& c : q) c *= p;
    }
    bool all_div = true;
    for (const auto& c : q) all_div = all_div && (c % p == 0);
    if (!all_div) ++torsion_free;
    const int D = 10;
    adic::QuotientRing ring(m, j, q, D);
    std::ostringstream name;
    name << "m = " << m << ", r = " << adic::format_series(ring.relator(D + 2));
    check(r, name.str(), [&](std::string& d) {
      try {
        auto ce = adic::congruence_exponent(ring, p, k);
        d = "x^" + std::to_string(ce.l_total) + " = " + std::to_string(p) + " * (" +
            adic::format_integer_series(ce.witness) + ")";
        if (all_div) return false;  // should have thrown
        std::vector<BigInt> diff(std::max<std::size_t>(static_cast<std::size_t>(ce.l_total) + 1, ce.witness.size()));
        diff[static_cast<std::size_t>(ce.l_total)] += 1;
        for (std::size_t i = 0; i < ce.witness.size(); ++i) diff[i] -= p * ce.witness[i];
        return ring.reduce(diff).is_zero();
      } catch (const Error& e) {
        d = e.what();
        return e.code() == Errc::AllDivisible && all_div;
      }
    });
  }
  return r;
}

SuiteResult prop3() {
  SuiteResult r;
  const int L = 8;
  Forest f(2);
  // Example 1 transversal pairs: {2k, 2l+1} -> {2k', 2l'+1}, h = (2(k'-k), 2(l'-l)).
  rep::VirtualEndo ex1(rep::FgAbelianGroup(1, {}), {{2}}, {{1}});
  auto verify = [&](const rep::VirtualEndo& v, const rep::Transversal& t, const std::vector<rep::Vec>& h,
                    std::string& d) {
    rep::Transversal tp;
    for (std::size_t i = 0; i < t.reps.size(); ++i) tp.reps.push_back(v.group().add(h[i], t.reps[i]));
    rep::SelfSimilarMachine phi(v, t), phip(v, tp);
    Element lambda = rep::transversal_conjugator(f, phip, h, L);
    for (int i = 0; i < v.group().dim(); ++i) {
      const auto g = v.group().basis(i);
      const Element lhs = phip.element(f, g, L);
      const Element rhs = tree::mul(f, tree::mul(f, lambda, phi.element(f, g, L)), tree::inverse(f, lambda));
      if (lhs != rhs) {
        d = "generator " + std::to_string(i + 1);
        return false;
      }
    }
    return true;
  };
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; l <= 2; ++l) {
      for (int k2 = 0; k2 <= 2; ++k2) {
        for (int l2 = 0; l2 <= 2; ++l2) {
          if (k == k2 && l == l2) continue;
          std::ostringstream name;
          name << "L_{" << k << "," << l << "} -> L_{" << k2 << "," << l2 << "}";
          check(r, name.str(), [&](std::string& d) {
            return verify(ex1, rep::Transversal{{{2 * k}, {2 * l + 1}}}, {{2 * (k2 - k)}, {2 * (l2 - l)}}, d);
          });
        }
      }
    }
  }
  // Random h-tuples over Example 1 and over G = Z^2, H = 2Z + Z, f(2u, v) = (v, u).
  std::mt19937_64 rng(0x5eed0003);
  std::uniform_int_distribution<int> small(-4, 4);
  rep::VirtualEndo z2(rep::FgAbelianGroup(2, {}), {{2, 0}, {0, 1}}, {{0, 1}, {1, 0}});
  for (int n = 0; n < 10; ++n) {
    const bool first = n < 5;
    const rep::VirtualEndo& v = first ? ex1 : z2;
    rep::Transversal t = first ? rep::Transversal{{{0}, {1}}} : rep::Transversal{{{0, 0}, {1, 0}}};
    std::vector<rep::Vec> h;
    for (int i = 0; i < 2; ++i) h.push_back(first ? rep::Vec{2 * small(rng)} : rep::Vec{2 * small(rng), small(rng)});
    std::ostringstream name;
    name << (first ? "Z, 2Z" : "Z^2, 2Z+Z") << " random h = (";
    for (std::size_t i = 0; i < h.size(); ++i) {
      name << (i ? "; " : "");
      for (std::size_t c = 0; c < h[i].size(); ++c) name << (c ? "," : "") << h[i][c];
    }
    name << ")";
    check(r, name.str(), [&](std::string& d) { return verify(v, t, h, d); });
  }
  return r;
}

SuiteResult gap() {
  SuiteResult r;
  std::mt19937_64 rng(0x5eed0010);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int m = 2; m <= 3; ++m) {
    for (int j = 1; j <= 2; ++j) {
      const int L = 10;
      Forest f(m);
      GeneratorSystem s(m);
      s.add(tree::adding_machine(m, j, "a"));
      Evaluator ev(f, s);
      const Element beta = ev.generator("a", L);
      const std::string tag = "D_" + std::to_string(m) + "(" + std::to_string(j) + ")";
      check(r, tag + ": zeta(beta) = j", [&](std::string& d) {
        const int z = tree::zeta(f, beta);
        d = "zeta = " + std::to_string(z);
        return z == j;
      });
      check(r, tag + ": zeta(z beta) = zeta(beta) for 20 sampled z in Stab(1)", [&](std::string& d) {
        int sampled = 0;
        while (sampled < 20) {
          // z = a^{m c_0} prod_{i>=1} (a^{x^i})^{c_i}, states a^{x^i} of the closure
          AutExpr w = AutExpr::gen("a").pow(
              adic::PowerSeries::from_integers({m, L, L}, {static_cast<long long>(m) * coef(rng)}));
          for (int i = 1; i <= j + 1; ++i) {
            const int c = coef(rng);
            if (c) w = w * AutExpr::gen("a").diagonal(i).pow(adic::PowerSeries::from_integers({m, L, L}, {c}));
          }
          const Element z = ev.eval(w, L);
          if (z.is_identity()) continue;
          if (f.root_id(z.node) != 0) {
            d = "sample left Stab(1)";
            return false;
          }
          ++sampled;
          const int zb = tree::zeta(f, tree::mul(f, z, beta));
          if (zb != j) {
            d = "sample " + std::to_string(sampled) + ": " + w.to_string() + " gives " + std::to_string(zb);
            return false;
          }
        }
        return true;
      });
    }
  }
  return r;
}

SuiteResult exponent() {
  SuiteResult r;
  std::mt19937_64 rng(0x5eed0011);
  const std::pair<int, int> shapes[] = {{2, 2}, {2, 3}, {2, 4}, {3, 3}};
  for (auto [m1, m2] : shapes) {
    const int m = m1 * m2;
    const int L = 8;
    // regular action of Z/m1 + Z/m2 on points (u, v) -> u m2 + v + 1
    std::vector<int> s1(static_cast<std::size_t>(m)), s2(static_cast<std::size_t>(m));
    for (int u = 0; u < m1; ++u) {
      for (int v = 0; v < m2; ++v) {
        s1[static_cast<std::size_t>(u * m2 + v)] = ((u + 1) % m1) * m2 + v;
        s2[static_cast<std::size_t>(u * m2 + v)] = u * m2 + (v + 1) % m2;
      }
    }
    const Permutation p1 = Permutation::from_zero_based(s1), p2 = Permutation::from_zero_based(s2);
    Forest f(m);
    GeneratorSystem s(m);
    s.add(tree::rooted("a", p1));
    s.add(tree::rooted("b", p2));
    Evaluator ev(f, s);
    std::ostringstream name;
    name << "P(A) = Z/" << m1 << " + Z/" << m2;
    check(r, name.str(), [&](std::string& d) {
      std::vector<Element> sample{ev.generator("a", L), ev.generator("b", L)};
      std::uniform_int_distribution<int> c(0, 5);
      for (int n = 0; n < 12; ++n) {
        AutExpr w;
        for (int i = 0; i < 4; ++i) {
          const Truncation t{m, L, L};
          w = w * AutExpr::gen("a").diagonal(i).pow(series(t, {c(rng)})) *
              AutExpr::gen("b").diagonal(i).pow(series(t, {c(rng)}));
        }
        sample.push_back(ev.eval(w, L));
      }
      // abelian, then the least n killing every sampled element
      for (std::size_t i = 0; i < sample.size(); ++i) {
        for (std::size_t k = i + 1; k < sample.size(); ++k) {
          if (!tree::commutator(f, sample[i], sample[k]).is_identity()) {
            d = "sampled elements do not commute";
            return false;
          }
        }
      }
      int verified = 0;
      for (int n = 1; n <= 64 && !verified; ++n) {
        bool all = true;
        for (const auto& w : sample) all = all && tree::pow(f, w, n).is_identity();
        if (all) verified = n;
      }
      int perm_exp = 1;
      for (const auto& g : tree::generate_group({p1, p2}, m)) perm_exp = std::lcm(perm_exp, g.order());
      d = "verified exponent " + std::to_string(verified) + ", exponent of P(A) " + std::to_string(perm_exp);
      return verified == perm_exp && perm_exp == std::lcm(m1, m2);
    });
  }
  return r;
}

struct Entry {
  SuiteInfo info;
  SuiteResult (*run)();
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"example1", "Example 1: phi_{k,l} closed forms at depth 8"}, example1},
      {{"example2", "Example 2 identities at depth 10"}, example2},
      {{"example3", "Example 3 conjugators at depth 10"}, example3},
      {{"dmj", "D_m(j): relator, closure size, relations, pro-m generators"}, dmj},
      {{"theorem8", "single-generator power systems: abelian, annihilated, peel round trip"}, theorem8},
      {{"oracle", "fast level permutations agree with portraits"}, oracle},
      {{"quotient", "quotient-ring normal form"}, quotient},
      {{"congruence", "constructive congruence exponent"}, congruence},
      {{"prop3", "transversal change conjugator"}, prop3},
      {{"gap", "uniform gap for zeta"}, gap},
      {{"exponent", "torsion exponent equals exponent of P(A)"}, exponent},
  };
  return entries;
}

}  // namespace

const std::vector<SuiteInfo>& suite_list() {
  static const std::vector<SuiteInfo> list = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return list;
}

SuiteResult run_suite(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.info.name == name) {
      SuiteResult r = e.run();
      r.suite = e.info.name;
      r.title = e.info.title;
      return r;
    }
  }
  std::string known;
  for (const auto& e : registry()) known += (known.empty() ? "" : ", ") + e.info.name;
  throw Error(Errc::UndefinedName, "unknown suite '" + name + "' (known: " + known + ")");
}

}  // namespace selfsim::suites
