#pragma once

// Explicit conjugators between tree automorphisms.
//
// conjugator(B, A) solves h^{-1} B h = A level by level: on a cycle
// (i_0 ... i_{k-1}) of the root of B, h_{i_{t+1}} = B_{i_t}^{-1} h_{i_t} A_{i_t rho},
// and h_{i_0} conjugates (B^k)_{i_0} to (A^k)_{i_0 rho}, one level down.

#include <vector>

#include "selfsim/adic.hpp"
#include "selfsim/expr.hpp"
#include "selfsim/forest.hpp"

namespace selfsim::tree {

/// Some h with h^{-1} b h = a to the common depth; throws NotConjugate when
/// the construction fails (roots of different cycle type, or the final
/// check does not hold).
Element conjugator(Forest& f, const Element& b, const Element& a);

struct Prop4Result {
  int j = 0;
  std::vector<adic::BigInt> q;  // p_1 + ... + p_m = q x^{j-1}
  Element h;
  Element alpha;  // the adding machine (e, ..., e, alpha^{x^{j-1}}) sigma
};

/// beta = (beta^{p_1}, ..., beta^{p_m}) sigma with sigma the m-cycle.  j is
/// read off the valuation of p_1 + ... + p_m; throws NonUnitSum when the
/// leading coefficient is not a unit.
Prop4Result prop4_conjugator(Forest& f, Evaluator& ev, const std::string& beta, int depth);

struct Example3Sequences {
  std::vector<adic::PowerSeries> c;        // c_0 .. c_n
  std::vector<adic::PowerSeries> c_prime;  // c'_0 .. c'_n
};
/// c_0 = 1, c_1 = q, c_n = 2 c_{n-2} + c_{n-1};  c'_0 = 0, c'_n = c_{n-1} + c'_{n-1}.
Example3Sequences example3_sequences(const adic::PowerSeries& q, int n_max);

/// prod_n ((e, beta^{-c'_n}))^{(n)} at the given depth (binary tree).
Element example3_conjugator(Forest& f, const Element& beta, const Example3Sequences& s, int depth);

}  // namespace selfsim::tree
