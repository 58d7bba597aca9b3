#include "selfsim/forest.hpp"

#include <cstdlib>
#include <string>

namespace selfsim::tree {
namespace {

std::size_t memo_cap_from_env() {
  if (const char* env = std::getenv("SELFSIM_CACHE_SIZE")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 22;
}

std::string perm_key(const Permutation& p) {
  std::string key;
  for (int v : p.zero_based()) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return key;
}

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

std::size_t Forest::NodeHash::operator()(NodeId n) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ f->roots_[n];
  for (NodeId c : f->children(n)) {
    h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool Forest::NodeEq::operator()(NodeId a, NodeId b) const {
  if (f->roots_[a] != f->roots_[b]) return false;
  auto ca = f->children(a);
  auto cb = f->children(b);
  return std::equal(ca.begin(), ca.end(), cb.begin());
}

Forest::Forest(int degree, std::size_t memo_cap)
    : m_(degree),
      memo_cap_(memo_cap ? memo_cap : memo_cap_from_env()),
      index_(64, NodeHash{this}, NodeEq{this}) {
  if (degree < 2 || degree > 4096) {
    throw Error(Errc::InvalidContext, "tree degree must lie in [2, 4096]");
  }
  intern(Permutation::identity(degree));
  roots_.push_back(0);
  kids_.assign(static_cast<std::size_t>(m_), kIdentityNode);
  index_.insert(kIdentityNode);
}

PermId Forest::intern(const Permutation& p) {
  if (p.degree() != m_) {
    throw Error(Errc::ContextMismatch, "permutation of degree " + std::to_string(p.degree()) +
                                           " in a forest of degree " + std::to_string(m_));
  }
  auto [it, inserted] = perm_index_.try_emplace(perm_key(p), static_cast<PermId>(perms_.size()));
  if (inserted) {
    perms_.push_back(p);
    perm_inv_.push_back(~PermId{0});
  }
  return it->second;
}

PermId Forest::compose(PermId a, PermId b) {
  if (a == 0) return b;
  if (b == 0) return a;
  auto key = pair_key(a, b);
  if (auto it = perm_mul_.find(key); it != perm_mul_.end()) return it->second;
  PermId r = intern(perms_[a] * perms_[b]);
  perm_mul_.emplace(key, r);
  return r;
}

PermId Forest::perm_inverse(PermId a) {
  if (perm_inv_[a] == ~PermId{0}) {
    Permutation inv = perms_[a].inverse();
    PermId r = intern(inv);
    perm_inv_[a] = r;
  }
  return perm_inv_[a];
}

NodeId Forest::make(PermId root, std::span<const NodeId> children) {
  if (children.size() != static_cast<std::size_t>(m_)) {
    throw Error(Errc::Arity, "node needs exactly " + std::to_string(m_) + " children");
  }
  if (root == 0 && std::all_of(children.begin(), children.end(), [](NodeId c) { return c == kIdentityNode; })) {
    return kIdentityNode;
  }
  const auto candidate = static_cast<NodeId>(roots_.size());
  roots_.push_back(root);
  kids_.insert(kids_.end(), children.begin(), children.end());
  auto [it, inserted] = index_.insert(candidate);
  if (!inserted) {
    roots_.pop_back();
    kids_.resize(kids_.size() - static_cast<std::size_t>(m_));
    return *it;
  }
  return candidate;
}

NodeId Forest::mul(NodeId a, NodeId b) {
  if (a == kIdentityNode) return b;
  if (b == kIdentityNode) return a;
  const auto key = pair_key(a, b);
  if (auto it = mul_memo_.find(key); it != mul_memo_.end()) return it->second;
  const PermId ra = roots_[a];
  const Permutation pa = perms_[ra];  // copy: recursion may grow perms_
  std::vector<NodeId> ca(children(a).begin(), children(a).end());
  std::vector<NodeId> cb(children(b).begin(), children(b).end());
  std::vector<NodeId> out(static_cast<std::size_t>(m_));
  for (int i = 0; i < m_; ++i) {
    out[static_cast<std::size_t>(i)] = mul(ca[static_cast<std::size_t>(i)], cb[static_cast<std::size_t>(pa[i])]);
  }
  NodeId r = make(compose(ra, roots_[b]), out);
  bound(mul_memo_);
  mul_memo_.emplace(key, r);
  return r;
}

NodeId Forest::inv(NodeId a) {
  if (a == kIdentityNode) return a;
  if (auto it = inv_memo_.find(a); it != inv_memo_.end()) return it->second;
  const PermId rinv = perm_inverse(roots_[a]);
  const Permutation pinv = perms_[rinv];
  std::vector<NodeId> ca(children(a).begin(), children(a).end());
  std::vector<NodeId> out(static_cast<std::size_t>(m_));
  // (a^{-1})_k = (a_{k sigma^{-1}})^{-1}
  for (int k = 0; k < m_; ++k) out[static_cast<std::size_t>(k)] = inv(ca[static_cast<std::size_t>(pinv[k])]);
  NodeId r = make(rinv, out);
  bound(inv_memo_);
  inv_memo_.emplace(a, r);
  return r;
}

NodeId Forest::pow(NodeId a, std::uint64_t n) {
  NodeId acc = kIdentityNode;
  NodeId base = a;
  while (n) {
    if (n & 1) acc = mul(acc, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return acc;
}

NodeId Forest::pow(NodeId a, const adic::BigInt& n) {
  if (n < 0) return pow(inv(a), adic::BigInt(-n));
  NodeId acc = kIdentityNode;
  NodeId base = a;
  adic::BigInt e = n;
  while (e != 0) {
    if ((e & 1) != 0) acc = mul(acc, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return acc;
}

NodeId Forest::diag(NodeId a) {
  if (a == kIdentityNode) return a;
  if (auto it = diag_memo_.find(a); it != diag_memo_.end()) return it->second;
  std::vector<NodeId> out(static_cast<std::size_t>(m_), a);
  NodeId r = make(PermId{0}, out);
  bound(diag_memo_);
  diag_memo_.emplace(a, r);
  return r;
}

NodeId Forest::truncate(NodeId a, int depth) {
  if (a == kIdentityNode || depth <= 0) return kIdentityNode;
  const auto key = pair_key(a, static_cast<std::uint32_t>(depth));
  if (auto it = trunc_memo_.find(key); it != trunc_memo_.end()) return it->second;
  std::vector<NodeId> ca(children(a).begin(), children(a).end());
  for (auto& c : ca) c = truncate(c, depth - 1);
  NodeId r = make(roots_[a], ca);
  bound(trunc_memo_);
  trunc_memo_.emplace(key, r);
  return r;
}

// ---------------------------------------------------------------------------

Element identity(int depth) { return {kIdentityNode, depth}; }

Element truncate(Forest& f, const Element& a, int depth) {
  if (depth > a.depth) {
    throw Error(Errc::DepthExceeded, "requested depth " + std::to_string(depth) +
                                         " exceeds element depth " + std::to_string(a.depth));
  }
  if (depth == a.depth) return a;
  return {f.truncate(a.node, depth), depth};
}

Element mul(Forest& f, const Element& a, const Element& b) {
  const int d = std::min(a.depth, b.depth);
  return {f.mul(truncate(f, a, d).node, truncate(f, b, d).node), d};
}

Element inverse(Forest& f, const Element& a) { return {f.inv(a.node), a.depth}; }

Element commutator(Forest& f, const Element& a, const Element& b) {
  return mul(f, mul(f, inverse(f, a), inverse(f, b)), mul(f, a, b));
}

Element conjugate(Forest& f, const Element& b, const Element& a) {
  return mul(f, mul(f, inverse(f, a), b), a);
}

Element pow(Forest& f, const Element& a, const adic::BigInt& n) { return {f.pow(a.node, n), a.depth}; }

Element pow_madic(Forest& f, const Element& a, const adic::MAdicInt& c) {
  const int m = c.modulus();
  NodeId acc = kIdentityNode;
  NodeId base = a.node;  // a^{m^u}
  for (int u = 0; u < c.precision(); ++u) {
    if (base == kIdentityNode) return {acc, a.depth};
    if (c.digit(u) != 0) acc = f.mul(acc, f.pow(base, std::uint64_t{c.digit(u)}));
    base = f.pow(base, static_cast<std::uint64_t>(m));
  }
  if (base != kIdentityNode) {
    throw Error(Errc::ExponentNotStabilized,
                "a^(m^K) is not the identity at depth " + std::to_string(a.depth) +
                    " (m=" + std::to_string(m) + ", K=" + std::to_string(c.precision()) +
                    "); the m-adic power is not determined by the truncated exponent");
  }
  return {acc, a.depth};
}

Element pow_series(Forest& f, const Element& a, const adic::PowerSeries& q) {
  Element acc = identity(a.depth);
  const int top = std::min(q.degree_bound(), a.depth - 1);
  for (int i = 0; i <= top; ++i) {
    if (q[i].is_zero()) continue;
    Element part = pow_madic(f, truncate(f, a, a.depth - i), q[i]);
    acc = mul(f, acc, diagonal(f, part, i));
  }
  return acc;
}

Element diagonal(Forest& f, const Element& a, int s) {
  NodeId n = a.node;
  for (int i = 0; i < s; ++i) n = f.diag(n);
  return {n, a.depth + s};
}

Element diagonal_same_depth(Forest& f, const Element& a, int s) {
  if (s >= a.depth) return identity(a.depth);
  return diagonal(f, truncate(f, a, a.depth - s), s);
}

int stabilized_levels(Forest& f, const Element& a) {
  if (a.is_identity()) return a.depth;
  for (int l = 1; l <= a.depth; ++l) {
    if (f.truncate(a.node, l) != kIdentityNode) return l - 1;
  }
  return a.depth;
}

bool equal_to_depth(Forest& f, const Element& a, const Element& b, int L) {
  return truncate(f, a, L).node == truncate(f, b, L).node;
}

Element state(Forest& f, const Element& a, std::span<const int> word) {
  return act(f, a, word).residual;
}

ActResult act(Forest& f, const Element& a, std::span<const int> word) {
  if (static_cast<int>(word.size()) > a.depth) {
    throw Error(Errc::DepthExceeded, "vertex of length " + std::to_string(word.size()) +
                                         " lies below the truncation depth " + std::to_string(a.depth));
  }
  ActResult r;
  NodeId n = a.node;
  for (int letter : word) {
    if (letter < 1 || letter > f.degree()) {
      throw Error(Errc::ShapeMismatch, "letter " + std::to_string(letter) + " outside 1.." + std::to_string(f.degree()));
    }
    r.image.push_back(f.root(n)[letter - 1] + 1);
    n = f.child(n, letter - 1);
  }
  r.residual = {n, a.depth - static_cast<int>(word.size())};
  return r;
}

bool desuspend(Forest& f, const Element& a, Element& out) {
  if (a.depth < 1) return false;
  if (a.is_identity()) {
    out = identity(a.depth - 1);
    return true;
  }
  if (f.root_id(a.node) != 0) return false;
  auto kids = f.children(a.node);
  for (NodeId c : kids) {
    if (c != kids[0]) return false;
  }
  out = {kids[0], a.depth - 1};
  return true;
}

}  // namespace selfsim::tree
