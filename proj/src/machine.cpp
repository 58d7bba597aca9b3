#include "selfsim/machine.hpp"

#include <deque>

namespace selfsim::rep {

SelfSimilarMachine::SelfSimilarMachine(VirtualEndo endo, Transversal t, std::size_t visited_cap)
    : endo_(std::move(endo)), t_(std::move(t)), cap_(visited_cap) {
  check_transversal(endo_, t_);
}

const SelfSimilarMachine::Info& SelfSimilarMachine::info(const Vec& g) {
  if (auto it = info_.find(g); it != info_.end()) return it->second;
  const auto& G = endo_.group();
  Info inf{coset_permutation(endo_, t_, g), {}};
  for (std::size_t i = 0; i < t_.reps.size(); ++i) {
    const Vec& xj = t_.reps[static_cast<std::size_t>(inf.out[static_cast<int>(i)])];
    const Vec h = G.sub(G.add(t_.reps[i], g), xj);
    inf.next.push_back(endo_.apply(h));
  }
  if (info_.size() >= cap_) throw Error(Errc::SaturationOverflow, "machine visited more than " + std::to_string(cap_) + " states");
  return info_.emplace(g, std::move(inf)).first->second;
}

const tree::Permutation& SelfSimilarMachine::output(const Vec& g) { return info(endo_.group().canonical(g)).out; }

const std::vector<Vec>& SelfSimilarMachine::transitions(const Vec& g) {
  return info(endo_.group().canonical(g)).next;
}

tree::Element SelfSimilarMachine::element(tree::Forest& f, const Vec& g0, int depth) {
  if (f.degree() != degree()) throw Error(Errc::ContextMismatch, "forest degree differs from [G:H]");
  if (memo_forest_ != &f) {
    memo_.clear();
    memo_forest_ = &f;
  }
  const Vec g = endo_.group().canonical(g0);
  if (depth <= 0) return tree::identity(0);
  auto key = std::make_pair(g, depth);
  if (auto it = memo_.find(key); it != memo_.end()) return {it->second, depth};
  const Info& inf = info(g);
  std::vector<tree::NodeId> kids;
  for (const auto& s : inf.next) kids.push_back(element(f, s, depth - 1).node);
  tree::NodeId n = f.make(inf.out, kids);
  memo_.emplace(std::move(key), n);
  return {n, depth};
}

SelfSimilarMachine::Reachable SelfSimilarMachine::reachable(const std::vector<Vec>& roots, std::size_t cap) {
  Reachable r;
  std::map<Vec, bool> seen;
  std::deque<Vec> queue;
  for (const auto& g : roots) queue.push_back(endo_.group().canonical(g));
  while (!queue.empty()) {
    Vec g = queue.front();
    queue.pop_front();
    if (seen.count(g)) continue;
    if (r.states.size() >= cap) {
      r.complete = false;
      break;
    }
    seen[g] = true;
    r.states.push_back(g);
    for (const auto& s : transitions(g)) queue.push_back(s);
  }
  return r;
}

std::vector<tree::WreathGenerator> SelfSimilarMachine::to_generators(const Reachable& r, const std::string& prefix) {
  if (!r.complete) throw Error(Errc::SaturationOverflow, "reachable state set is incomplete");
  std::map<Vec, std::string> names;
  const Vec zero = endo_.group().zero();
  int k = 0;
  for (const auto& s : r.states) names[s] = s == zero ? "e" : prefix + std::to_string(k++);
  std::vector<tree::WreathGenerator> out;
  for (const auto& s : r.states) {
    if (s == zero) continue;
    tree::WreathGenerator g{names[s], output(s), {}};
    for (const auto& n : transitions(s)) {
      g.entries.push_back(n == zero ? tree::AutExpr() : tree::AutExpr::gen(names.at(n)));
    }
    out.push_back(std::move(g));
  }
  return out;
}

tree::Element transversal_conjugator(tree::Forest& f, SelfSimilarMachine& primed, const std::vector<Vec>& h,
                                     int depth) {
  if (static_cast<int>(h.size()) != primed.degree()) throw Error(Errc::Arity, "need one h_i per coset");
  const auto& v = primed.endo();
  std::vector<Vec> fh;
  for (const auto& hi : h) {
    if (!v.contains(hi)) throw Error(Errc::InconsistentTransversal, "h_i must lie in H");
    fh.push_back(v.apply(hi));
  }
  // lambda_d = gamma_d (lambda_{d-1})^{(1)}; the factor gamma^{(n)} fixes n levels
  tree::Element lambda = tree::identity(0);
  std::vector<tree::NodeId> kids(h.size());
  for (int d = 1; d <= depth; ++d) {
    for (std::size_t i = 0; i < h.size(); ++i) {
      kids[i] = tree::mul(f, primed.element(f, fh[i], d - 1), lambda).node;
    }
    lambda = {f.make(tree::PermId{0}, kids), d};
  }
  return lambda;
}

}  // namespace selfsim::rep
