#pragma once

// Depth-L portraits: one permutation per vertex of levels 0..L-1, stored in
// breadth-first order with the first letter of a vertex most significant.
// This is a plain value type, independent of the Forest; the label-wise
// product below serves as an oracle for Forest::mul.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "selfsim/forest.hpp"
#include "selfsim/permutation.hpp"

namespace selfsim::tree {

struct Portrait {
  int m = 2;
  int L = 0;
  std::vector<Permutation> nodes;

  static Portrait identity(int m, int L);
  static std::size_t node_count(int m, int L);
  /// Offset of level l in `nodes`.
  static std::size_t level_offset(int m, int l);

  const Permutation& label(int level, std::size_t vertex) const {
    return nodes[level_offset(m, level) + vertex];
  }

  friend bool operator==(const Portrait&, const Portrait&) = default;
};

Portrait extract_portrait(const Forest& f, const Element& a, int L);
Element portrait_to_element(Forest& f, const Portrait& p);

/// Label-wise wreath product: (ab)_u = a_u b_{u^a}.
Portrait compose(const Portrait& a, const Portrait& b);

/// Images of the m^l vertices of level l (0-based indices), l <= L.
std::vector<std::uint32_t> level_permutation(const Portrait& p, int l);
/// Same, read straight off the DAG.
std::vector<std::uint32_t> level_permutation(const Forest& f, const Element& a, int l);

nlohmann::json to_json(const Portrait& p);
Portrait portrait_from_json(const nlohmann::json& j);
std::string to_dot(const Portrait& p, const std::string& name = "portrait");

}  // namespace selfsim::tree
