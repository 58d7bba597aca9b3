#include "selfsim/closure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace selfsim::tree {

namespace {

std::string word_text(const std::vector<int>& w) {
  std::string s;
  for (int y : w) s += std::to_string(y);
  return s.empty() ? "root" : s;
}

// Looks for w in Stab(1), a product of at most two powers of pool elements,
// whose first state equals target to depth c.
std::string find_recurrence_witness(Forest& f, const std::vector<ClosureState>& pool, const Element& target,
                                    int c) {
  const int m = f.degree();
  struct Cand {
    std::string text;
    Element el;
  };
  std::vector<Cand> singles;
  for (const auto& s : pool) {
    const Element base = truncate(f, s.element, c + 1);
    for (int k = -m; k <= m; ++k) {
      if (k == 0) continue;
      singles.push_back({s.source + (s.vertex.empty() ? "" : "_" + word_text(s.vertex)) + "^" + std::to_string(k),
                         pow(f, base, k)});
    }
  }
  const Element want = truncate(f, target, c);
  auto test = [&](const Element& w) {
    if (f.root_id(w.node) != 0) return false;
    return Element{f.child(w.node, 0), c} == want || (w.is_identity() && want.is_identity());
  };
  for (const auto& a : singles) {
    if (test(a.el)) return a.text;
  }
  for (const auto& a : singles) {
    for (const auto& b : singles) {
      if (test(mul(f, a.el, b.el))) return a.text + "*" + b.text;
    }
  }
  return {};
}

}  // namespace

ClosureReport state_closure(Evaluator& ev, const ClosureOptions& opts) {
  Forest& f = ev.forest();
  const auto& sys = ev.system();
  const int L = opts.depth;
  const int c = opts.compare_depth > 0 ? opts.compare_depth : std::max(1, L / 2);
  if (c >= L) throw Error(Errc::InvalidContext, "closure compare depth must be below the expansion depth");

  ClosureReport rep;
  rep.depth = L;
  rep.compare_depth = c;

  std::vector<std::string> roots = opts.roots;
  if (roots.empty()) {
    for (const auto& g : sys.generators()) roots.push_back(g.name);
  }
  std::unordered_set<NodeId> seen;
  std::deque<ClosureState> queue;
  for (const auto& name : roots) queue.push_back({name, {}, ev.generator(name, L), true});
  while (!queue.empty()) {
    ClosureState s = std::move(queue.front());
    queue.pop_front();
    const NodeId key = truncate(f, s.element, c).node;
    if (!seen.insert(key).second) continue;
    if (key == kIdentityNode) {
      rep.identity_state = true;
    } else {
      rep.states.push_back(s);
      if (rep.states.size() > opts.cap) {
        throw Error(Errc::SaturationOverflow, "state closure exceeded " + std::to_string(opts.cap) + " states");
      }
    }
    if (s.element.depth - 1 < c + 1) continue;
    for (int y = 1; y <= f.degree(); ++y) {
      std::vector<int> v = s.vertex;
      v.push_back(y);
      queue.push_back({s.source, v, {f.child(s.element.node, y - 1), s.element.depth - 1}, false});
    }
  }

  std::vector<Permutation> perms;
  for (const auto& name : roots) perms.push_back(sys.at(name).root);
  rep.orbits = orbits(perms, sys.degree());
  for (auto& o : rep.orbits) {
    for (auto& p : o) ++p;
  }
  rep.transitive = rep.orbits.size() == 1;

  rep.abelian = true;
  for (std::size_t i = 0; i < roots.size() && rep.abelian; ++i) {
    for (std::size_t k = i + 1; k < roots.size() && rep.abelian; ++k) {
      rep.abelian = commutator(f, ev.generator(roots[i], L), ev.generator(roots[k], L)).is_identity();
    }
  }
  for (std::size_t i = 0; i < rep.states.size() && rep.abelian; ++i) {
    for (std::size_t k = i + 1; k < rep.states.size() && rep.abelian; ++k) {
      rep.abelian = commutator(f, truncate(f, rep.states[i].element, c), truncate(f, rep.states[k].element, c))
                        .is_identity();
    }
  }

  std::vector<ClosureState> pool(rep.states.begin(), rep.states.begin() + static_cast<std::ptrdiff_t>(
                                                                               std::min<std::size_t>(rep.states.size(), 8)));
  rep.recurrent_witnessed = !roots.empty();
  for (const auto& name : roots) {
    std::string w = find_recurrence_witness(f, pool, ev.generator(name, L), c);
    if (w.empty()) rep.recurrent_witnessed = false;
    rep.recurrence_witnesses.push_back(w);
  }
  return rep;
}

nlohmann::json to_json(const ClosureReport& r) {
  nlohmann::json states = nlohmann::json::array();
  for (const auto& s : r.states) states.push_back({{"source", s.source}, {"vertex", s.vertex}});
  return {{"depth", r.depth},
          {"compare_depth", r.compare_depth},
          {"size", r.states.size()},
          {"states", states},
          {"identity_state", r.identity_state},
          {"orbits", r.orbits},
          {"transitive", r.transitive},
          {"abelian_to_depth", r.abelian},
          {"recurrent_witnessed", r.recurrent_witnessed},
          {"recurrence_witnesses", r.recurrence_witnesses}};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> orbit_index(const std::vector<int>& orbit, int m) {
  std::vector<int> pos(static_cast<std::size_t>(m), -1);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    const int p = orbit[i];
    if (p < 1 || p > m || pos[static_cast<std::size_t>(p - 1)] != -1) {
      throw Error(Errc::NotInvariant, "orbit must list distinct points of 1.." + std::to_string(m));
    }
    pos[static_cast<std::size_t>(p - 1)] = static_cast<int>(i);
  }
  return pos;
}

Permutation restrict_perm(const Permutation& s, const std::vector<int>& orbit, const std::vector<int>& pos) {
  std::vector<int> img;
  for (int p : orbit) {
    const int q = pos[static_cast<std::size_t>(s[p - 1])];
    if (q < 0) throw Error(Errc::NotInvariant, "permutation " + s.cycle_string() + " moves the orbit off itself");
    img.push_back(q);
  }
  return Permutation::from_zero_based(std::move(img));
}

}  // namespace

GeneratorSystem restrict_to_orbit(const GeneratorSystem& sys, const std::vector<int>& orbit) {
  std::vector<int> sorted = orbit;
  std::sort(sorted.begin(), sorted.end());
  const auto pos = orbit_index(sorted, sys.degree());
  GeneratorSystem out(static_cast<int>(sorted.size()));
  for (const auto& g : sys.generators()) {
    WreathGenerator r{g.name, restrict_perm(g.root, sorted, pos), {}};
    for (int p : sorted) r.entries.push_back(g.entries[static_cast<std::size_t>(p - 1)]);
    out.add(std::move(r));
  }
  return out;
}

Element restrict_element(const Forest& src, const Element& a, const std::vector<int>& orbit, Forest& dst) {
  std::vector<int> sorted = orbit;
  std::sort(sorted.begin(), sorted.end());
  const auto pos = orbit_index(sorted, src.degree());
  if (dst.degree() != static_cast<int>(sorted.size())) throw Error(Errc::ContextMismatch, "target forest degree");
  std::unordered_map<std::uint64_t, NodeId> memo;
  auto rec = [&](auto&& self, NodeId n, int depth) -> NodeId {
    if (n == kIdentityNode || depth == 0) return kIdentityNode;
    const std::uint64_t key = (static_cast<std::uint64_t>(n) << 16) | static_cast<std::uint64_t>(depth);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Permutation root = restrict_perm(src.root(n), sorted, pos);
    std::vector<NodeId> kids;
    for (int p : sorted) kids.push_back(self(self, src.child(n, p - 1), depth - 1));
    NodeId r = dst.make(root, kids);
    memo.emplace(key, r);
    return r;
  };
  return {rec(rec, a.node, a.depth), a.depth};
}

// ---------------------------------------------------------------------------

OrderResult order_to_depth(Forest& f, const Element& e, const adic::BigInt& n) {
  const Element p = pow(f, e, n);
  OrderResult r;
  r.depth = e.depth;
  r.identity = p.is_identity();
  if (!r.identity) r.level = stabilized_levels(f, p) + 1;
  return r;
}

nlohmann::json to_json(const OrderResult& r) {
  if (r.identity) return {{"identity_to_depth", r.depth}};
  return {{"distinct_at_level", r.level}, {"depth", r.depth}};
}

int zeta(Forest& f, const Element& z) {
  const Element zm = pow(f, z, adic::BigInt(f.degree()));
  if (zm.is_identity()) {
    throw Error(Errc::Unbounded, "z^m is the identity to depth " + std::to_string(z.depth) + "; zeta >= " +
                                     std::to_string(z.depth));
  }
  return stabilized_levels(f, zm);
}

bool annihilator_check(Forest& f, const Element& e, const adic::PowerSeries& r) {
  return pow_series(f, e, r).is_identity();
}

}  // namespace selfsim::tree
