#pragma once

// State-closure saturation and depth-bounded structural checks.
//
// Everything here is a statement "to depth L": two automorphisms are treated
// as equal when their portraits agree through the stated depth.

#include <string>
#include <vector>

#include <json.hpp>

#include "selfsim/expr.hpp"
#include "selfsim/forest.hpp"

namespace selfsim::tree {

struct ClosureOptions {
  int depth = 8;          // L: generators are expanded to this depth
  int compare_depth = 0;  // c: states compared at this depth; 0 picks max(1, L/2)
  std::size_t cap = 10000;
  std::vector<std::string> roots;  // generators to saturate from; empty means all
};

struct ClosureState {
  std::string source;     // generator whose state this is
  std::vector<int> vertex;  // shortest vertex (1-based) where it was found
  Element element;        // depth >= compare_depth + 1
  bool generator = false;
};

struct ClosureReport {
  int depth = 0;
  int compare_depth = 0;
  std::vector<ClosureState> states;  // non-identity states, in discovery order
  bool identity_state = false;       // e occurred as a state
  std::vector<std::vector<int>> orbits;  // of P(G), 1-based
  bool transitive = false;
  bool abelian = false;
  bool recurrent_witnessed = false;
  std::vector<std::string> recurrence_witnesses;  // per generator, "" when none found
};

ClosureReport state_closure(Evaluator& ev, const ClosureOptions& opts);
nlohmann::json to_json(const ClosureReport& r);

/// Rewrites a system on a P(G)-invariant orbit (1-based points), relabeled
/// 1..|orbit| in increasing order.  Throws NotInvariant.
GeneratorSystem restrict_to_orbit(const GeneratorSystem& sys, const std::vector<int>& orbit);
/// Restriction of one element to the subtree over `orbit`, rebuilt in `dst`.
Element restrict_element(const Forest& src, const Element& a, const std::vector<int>& orbit, Forest& dst);

struct OrderResult {
  bool identity = false;  // e^n is the identity to the element's depth
  int level = 0;          // otherwise the first level where e^n moves a vertex
  int depth = 0;
};
OrderResult order_to_depth(Forest& f, const Element& e, const adic::BigInt& n);
nlohmann::json to_json(const OrderResult& r);

/// zeta(z): the number of levels fixed by z^m.  Throws Unbounded when z^m is
/// the identity at z's depth.
int zeta(Forest& f, const Element& z);

/// e^r is the identity to e's depth.
bool annihilator_check(Forest& f, const Element& e, const adic::PowerSeries& r);

}  // namespace selfsim::tree
