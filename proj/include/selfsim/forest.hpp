#pragma once

// Truncated tree automorphisms as hash-consed portrait DAGs.
//
// A node is a root permutation plus m child nodes.  Node 0 is the identity at
// every depth; a node built for depth d has only the identity below level d,
// so portraits of a fixed depth are canonical and equality is id equality.
// Products, inverses and truncations are memoized on node ids.
//
// A Forest is a single-threaded workspace.  Share expressions across threads
// and give each thread its own Forest.

#include <algorithm>
#include <cstdint>
#include <string>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "selfsim/adic.hpp"
#include "selfsim/permutation.hpp"

namespace selfsim::tree {

using NodeId = std::uint32_t;
using PermId = std::uint32_t;
inline constexpr NodeId kIdentityNode = 0;

class Forest {
 public:
  /// memo_cap bounds each memo table; 0 reads SELFSIM_CACHE_SIZE (default 1<<22).
  explicit Forest(int degree, std::size_t memo_cap = 0);

  Forest(const Forest&) = delete;
  Forest& operator=(const Forest&) = delete;

  int degree() const { return m_; }

  PermId intern(const Permutation& p);
  const Permutation& perm(PermId id) const { return perms_[id]; }
  PermId compose(PermId a, PermId b);
  PermId perm_inverse(PermId a);

  NodeId make(PermId root, std::span<const NodeId> children);
  NodeId make(const Permutation& root, std::span<const NodeId> children) {
    return make(intern(root), children);
  }

  PermId root_id(NodeId n) const { return roots_[n]; }
  const Permutation& root(NodeId n) const { return perms_[roots_[n]]; }
  NodeId child(NodeId n, int i) const { return kids_[static_cast<std::size_t>(n) * m_ + static_cast<std::size_t>(i)]; }
  std::span<const NodeId> children(NodeId n) const {
    return {kids_.data() + static_cast<std::size_t>(n) * m_, static_cast<std::size_t>(m_)};
  }

  NodeId mul(NodeId a, NodeId b);
  NodeId inv(NodeId a);
  NodeId pow(NodeId a, std::uint64_t n);
  NodeId pow(NodeId a, const adic::BigInt& n);
  /// (a, a, ..., a) with trivial root.
  NodeId diag(NodeId a);
  NodeId truncate(NodeId a, int depth);

  std::size_t node_count() const { return roots_.size(); }

 private:
  struct NodeHash {
    const Forest* f;
    std::size_t operator()(NodeId n) const;
  };
  struct NodeEq {
    const Forest* f;
    bool operator()(NodeId a, NodeId b) const;
  };

  template <class Map>
  void bound(Map& map) {
    if (map.size() >= memo_cap_) map.clear();
  }

  int m_;
  std::size_t memo_cap_;
  std::vector<Permutation> perms_;
  std::unordered_map<std::string, PermId> perm_index_;
  std::unordered_map<std::uint64_t, PermId> perm_mul_;
  std::vector<PermId> perm_inv_;

  std::vector<PermId> roots_;
  std::vector<NodeId> kids_;
  std::unordered_set<NodeId, NodeHash, NodeEq> index_;

  std::unordered_map<std::uint64_t, NodeId> mul_memo_;
  std::unordered_map<NodeId, NodeId> inv_memo_;
  std::unordered_map<NodeId, NodeId> diag_memo_;
  std::unordered_map<std::uint64_t, NodeId> trunc_memo_;
};

/// A truncated automorphism: the portrait of `node` through level depth-1.
struct Element {
  NodeId node = kIdentityNode;
  int depth = 0;

  bool is_identity() const { return node == kIdentityNode; }
  friend bool operator==(const Element&, const Element&) = default;
};

Element identity(int depth);
Element truncate(Forest& f, const Element& a, int depth);
Element mul(Forest& f, const Element& a, const Element& b);
Element inverse(Forest& f, const Element& a);
Element commutator(Forest& f, const Element& a, const Element& b);
/// a^{-1} b a.
Element conjugate(Forest& f, const Element& b, const Element& a);
Element pow(Forest& f, const Element& a, const adic::BigInt& n);

/// a^c for an m-adic c: prod_u (a^{m^u})^{c_u}.  Throws ExponentNotStabilized
/// unless a^{m^K} is the identity at a's depth, which makes the result
/// independent of the digits beyond the precision.
Element pow_madic(Forest& f, const Element& a, const adic::MAdicInt& c);
/// a^q = a^{q_0} (a^{q_1})^{(1)} (a^{q_2})^{(2)} ... through a's depth.
Element pow_series(Forest& f, const Element& a, const adic::PowerSeries& q);
/// a^{(s)}: depth grows by s.
Element diagonal(Forest& f, const Element& a, int s);
/// a^{(s)} truncated back to a's depth.
Element diagonal_same_depth(Forest& f, const Element& a, int s);

/// Number of levels fixed by a (== depth when a is the identity).
int stabilized_levels(Forest& f, const Element& a);
bool equal_to_depth(Forest& f, const Element& a, const Element& b, int L);

/// State a_u for a 1-indexed vertex word u.
Element state(Forest& f, const Element& a, std::span<const int> word);

struct ActResult {
  std::vector<int> image;  // 1-indexed
  Element residual;
};
ActResult act(Forest& f, const Element& a, std::span<const int> word);

/// Desuspension: when a stabilizes level 1 with all children equal, returns
/// the common child.  Otherwise returns false.
bool desuspend(Forest& f, const Element& a, Element& out);

}  // namespace selfsim::tree
