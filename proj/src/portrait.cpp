#include "selfsim/portrait.hpp"

#include <sstream>

namespace selfsim::tree {

std::size_t Portrait::node_count(int m, int L) { return level_offset(m, L); }

std::size_t Portrait::level_offset(int m, int l) {
  std::size_t total = 0;
  std::size_t width = 1;
  for (int i = 0; i < l; ++i) {
    total += width;
    width *= static_cast<std::size_t>(m);
  }
  return total;
}

Portrait Portrait::identity(int m, int L) {
  return {m, L, std::vector<Permutation>(node_count(m, L), Permutation::identity(m))};
}

Portrait extract_portrait(const Forest& f, const Element& a, int L) {
  if (L > a.depth) {
    throw Error(Errc::DepthExceeded, "portrait depth " + std::to_string(L) + " exceeds element depth " +
                                         std::to_string(a.depth));
  }
  const int m = f.degree();
  Portrait p{m, L, {}};
  p.nodes.reserve(Portrait::node_count(m, L));
  std::vector<NodeId> level{a.node};
  for (int l = 0; l < L; ++l) {
    std::vector<NodeId> next;
    next.reserve(level.size() * static_cast<std::size_t>(m));
    for (NodeId n : level) {
      p.nodes.push_back(f.root(n));
      for (NodeId c : f.children(n)) next.push_back(c);
    }
    level = std::move(next);
  }
  return p;
}

Element portrait_to_element(Forest& f, const Portrait& p) {
  if (p.m != f.degree()) throw Error(Errc::ContextMismatch, "portrait degree differs from forest degree");
  const auto m = static_cast<std::size_t>(p.m);
  std::vector<NodeId> below;  // nodes of level l+1
  for (int l = p.L - 1; l >= 0; --l) {
    const std::size_t off = Portrait::level_offset(p.m, l);
    const std::size_t width = Portrait::level_offset(p.m, l + 1) - off;
    std::vector<NodeId> here(width);
    std::vector<NodeId> kids(m, kIdentityNode);
    for (std::size_t v = 0; v < width; ++v) {
      for (std::size_t y = 0; y < m; ++y) kids[y] = below.empty() ? kIdentityNode : below[v * m + y];
      here[v] = f.make(p.nodes[off + v], kids);
    }
    below = std::move(here);
  }
  return {below.empty() ? kIdentityNode : below[0], p.L};
}

namespace {

// Vertex images level by level: img[l+1][v m + y] = img[l][v] m + label(v)[y].
std::vector<std::vector<std::uint32_t>> vertex_images(const Portrait& p, int upto) {
  std::vector<std::vector<std::uint32_t>> img{{0}};
  const auto m = static_cast<std::uint32_t>(p.m);
  for (int l = 0; l < upto; ++l) {
    const auto& cur = img.back();
    std::vector<std::uint32_t> next(cur.size() * m);
    for (std::size_t v = 0; v < cur.size(); ++v) {
      const Permutation& s = p.label(l, v);
      for (std::uint32_t y = 0; y < m; ++y) {
        next[v * m + y] = cur[v] * m + static_cast<std::uint32_t>(s[static_cast<int>(y)]);
      }
    }
    img.push_back(std::move(next));
  }
  return img;
}

}  // namespace

Portrait compose(const Portrait& a, const Portrait& b) {
  if (a.m != b.m || a.L != b.L) throw Error(Errc::ContextMismatch, "portraits of different shape");
  auto img = vertex_images(a, a.L - 1 < 0 ? 0 : a.L - 1);
  Portrait out{a.m, a.L, {}};
  out.nodes.reserve(a.nodes.size());
  for (int l = 0; l < a.L; ++l) {
    const auto& iv = img[static_cast<std::size_t>(l)];
    for (std::size_t v = 0; v < iv.size(); ++v) out.nodes.push_back(a.label(l, v) * b.label(l, iv[v]));
  }
  return out;
}

std::vector<std::uint32_t> level_permutation(const Portrait& p, int l) {
  if (l > p.L) throw Error(Errc::DepthExceeded, "level beyond portrait depth");
  return vertex_images(p, l).back();
}

std::vector<std::uint32_t> level_permutation(const Forest& f, const Element& a, int l) {
  if (l > a.depth) throw Error(Errc::DepthExceeded, "level beyond element depth");
  const auto m = static_cast<std::uint32_t>(f.degree());
  std::vector<std::uint32_t> img{0};
  std::vector<NodeId> nodes{a.node};
  for (int t = 0; t < l; ++t) {
    std::vector<std::uint32_t> next(img.size() * m);
    std::vector<NodeId> next_nodes(img.size() * m);
    for (std::size_t v = 0; v < img.size(); ++v) {
      const Permutation& s = f.root(nodes[v]);
      for (std::uint32_t y = 0; y < m; ++y) {
        next[v * m + y] = img[v] * m + static_cast<std::uint32_t>(s[static_cast<int>(y)]);
        next_nodes[v * m + y] = f.child(nodes[v], static_cast<int>(y));
      }
    }
    img = std::move(next);
    nodes = std::move(next_nodes);
  }
  return img;
}

nlohmann::json to_json(const Portrait& p) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& s : p.nodes) nodes.push_back(s.images());
  return {{"m", p.m}, {"L", p.L}, {"nodes", std::move(nodes)}};
}

Portrait portrait_from_json(const nlohmann::json& j) {
  Portrait p{j.at("m").get<int>(), j.at("L").get<int>(), {}};
  for (const auto& n : j.at("nodes")) p.nodes.push_back(Permutation::from_images(n.get<std::vector<int>>()));
  if (p.nodes.size() != Portrait::node_count(p.m, p.L)) {
    throw Error(Errc::ShapeMismatch, "portrait JSON has the wrong number of nodes");
  }
  return p;
}

std::string to_dot(const Portrait& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  node [shape=box];\n";
  std::size_t idx = 0;
  for (int l = 0; l < p.L; ++l) {
    const std::size_t width = Portrait::level_offset(p.m, l + 1) - Portrait::level_offset(p.m, l);
    for (std::size_t v = 0; v < width; ++v, ++idx) {
      os << "  n" << idx << " [label=\"" << p.nodes[idx].cycle_string() << "\"];\n";
      if (l > 0) {
        const std::size_t parent = Portrait::level_offset(p.m, l - 1) + v / static_cast<std::size_t>(p.m);
        os << "  n" << parent << " -> n" << idx << " [label=\"" << (v % static_cast<std::size_t>(p.m)) + 1
           << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace selfsim::tree
