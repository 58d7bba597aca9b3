#pragma once

// The tree representation g -> g^phi of a triple (G, H, f) with a transversal:
//   g^phi = ( f(x_i + g - x_{(i)g^pi})^phi )_i  g^pi      (G written additively)
// States are G elements; expansion is depth driven and memoized per forest.

#include <map>
#include <string>
#include <vector>

#include "selfsim/abelian.hpp"
#include "selfsim/expr.hpp"
#include "selfsim/forest.hpp"

namespace selfsim::rep {

class SelfSimilarMachine {
 public:
  SelfSimilarMachine(VirtualEndo endo, Transversal t, std::size_t visited_cap = 1u << 20);

  const VirtualEndo& endo() const { return endo_; }
  const Transversal& transversal() const { return t_; }
  int degree() const { return static_cast<int>(t_.reps.size()); }

  const tree::Permutation& output(const Vec& g);
  /// The m states f(x_i + g - x_{(i)g^pi}).
  const std::vector<Vec>& transitions(const Vec& g);

  tree::Element element(tree::Forest& f, const Vec& g, int depth);

  /// States reachable from `roots`, breadth first, at most `cap` of them.
  /// `complete` is false when the cap cut the search short.
  struct Reachable {
    std::vector<Vec> states;
    bool complete = true;
  };
  Reachable reachable(const std::vector<Vec>& roots, std::size_t cap);

  /// DSL generator definitions for a complete reachable set; state k is
  /// named prefix + k, the zero state is e.
  std::vector<tree::WreathGenerator> to_generators(const Reachable& r, const std::string& prefix);

 private:
  struct Info {
    tree::Permutation out;
    std::vector<Vec> next;
  };
  const Info& info(const Vec& g);

  VirtualEndo endo_;
  Transversal t_;
  std::size_t cap_;
  std::map<Vec, Info> info_;
  const tree::Forest* memo_forest_ = nullptr;
  std::map<std::pair<Vec, int>, tree::NodeId> memo_;
};

/// lambda = gamma gamma^{(1)} gamma^{(2)} ... with gamma = (f(h_i)^{phi'})_i,
/// where phi' is the machine of the transversal x'_i = h_i + x_i.
tree::Element transversal_conjugator(tree::Forest& f, SelfSimilarMachine& primed, const std::vector<Vec>& h,
                                     int depth);

}  // namespace selfsim::rep
