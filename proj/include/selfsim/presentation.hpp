#pragma once

// Normal forms and defining relations for abelian transitive state-closed
// groups given by generators beta_1..beta_k.
//
// peel writes an element as prod beta_i^{q_i}: solve the root in P(A) by
// table lookup, divide, then desuspend (a level-1 stabilizing element of
// such a group is a diagonal gamma^{(1)}) and repeat one level down.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "selfsim/adic.hpp"
#include "selfsim/forest.hpp"

namespace selfsim::tree {

/// Discrete logarithms in P(A) = <sigma_1, ..., sigma_k>, by enumeration.
class PermLog {
 public:
  explicit PermLog(std::vector<Permutation> roots, std::size_t cap = 10000);

  const std::vector<Permutation>& roots() const { return roots_; }
  const std::vector<int>& orders() const { return orders_; }
  std::size_t group_order() const { return table_.size(); }
  /// Exponents e_i in [0, o(sigma_i)) with prod sigma_i^{e_i} = s, preferring
  /// the lexicographically smallest tuple.
  std::optional<std::vector<int>> solve(const Permutation& s) const;

 private:
  std::vector<Permutation> roots_;
  std::vector<int> orders_;
  std::map<Permutation, std::vector<int>> table_;
};

/// Coefficients q_i (degrees < e.depth, digits in [0, o(sigma_i))) with
/// prod beta_i^{q_i} = e to e's depth.  Throws PermSolveFail or NotAbelian.
std::vector<adic::PowerSeries> peel(Forest& f, const std::vector<Element>& betas, const PermLog& log,
                                    const Element& e, const adic::Truncation& t);

/// prod beta_i^{q_i} at the given depth.
Element rebuild(Forest& f, const std::vector<Element>& betas, const std::vector<adic::PowerSeries>& q, int depth);

struct ModulePresentation {
  std::vector<std::string> names;
  std::vector<Permutation> roots;
  std::vector<int> orders;                          // m_i
  std::vector<std::vector<adic::PowerSeries>> p;    // beta_i^{m_i} = prod_j beta_j^{x p_ij}
  adic::PowerSeries r;                              // det(diag(m_i) - x P)
  int depth = 0;
};

/// betas at a common depth L; relations hold to depth L.
ModulePresentation extract_relations(Forest& f, const std::vector<std::string>& names,
                                     const std::vector<Element>& betas, const adic::Truncation& t);

/// One entry per relation: whether beta_i^{m_i} prod_j beta_j^{-x p_ij} is
/// the identity to depth L.
std::vector<bool> verify_relations(Forest& f, const ModulePresentation& pres, const std::vector<Element>& betas);

adic::PowerSeries determinant(const std::vector<std::vector<adic::PowerSeries>>& a);

nlohmann::json to_json(const ModulePresentation& p);

}  // namespace selfsim::tree
