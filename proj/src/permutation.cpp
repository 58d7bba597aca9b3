#include "selfsim/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace selfsim::tree {

Permutation Permutation::identity(int m) {
  Permutation p;
  p.img_.resize(static_cast<std::size_t>(m));
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Permutation Permutation::from_zero_based(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)]) {
      throw Error(Errc::ShapeMismatch, "images do not form a permutation");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::from_images(const std::vector<int>& images_1based) {
  std::vector<int> z;
  z.reserve(images_1based.size());
  for (int v : images_1based) z.push_back(v - 1);
  return from_zero_based(std::move(z));
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(m);
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  for (const auto& c : cycles) {
    for (int v : c) {
      if (v < 1 || v > m) {
        throw Error(Errc::ShapeMismatch, "cycle point " + std::to_string(v) + " outside 1.." + std::to_string(m));
      }
      if (used[static_cast<std::size_t>(v - 1)]) {
        throw Error(Errc::ShapeMismatch, "point " + std::to_string(v) + " repeated in cycle notation");
      }
      used[static_cast<std::size_t>(v - 1)] = 1;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      p.img_[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()] - 1;
    }
  }
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out;
  out.reserve(img_.size());
  for (int v : img_) out.push_back(v + 1);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) p.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return p;
}

Permutation Permutation::pow(long long n) const {
  Permutation base = n < 0 ? inverse() : *this;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
  Permutation acc = identity(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

int Permutation::order() const {
  long long ord = 1;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return static_cast<int>(ord);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool Permutation::is_full_cycle() const {
  if (img_.empty()) return false;
  std::size_t len = 0;
  std::size_t j = 0;
  do {
    j = static_cast<std::size_t>(img_[j]);
    ++len;
  } while (j != 0);
  return len == img_.size();
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    out += "(";
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(Errc::ContextMismatch, "permutation degrees differ");
  Permutation p;
  p.img_.resize(a.img_.size());
  for (std::size_t i = 0; i < a.img_.size(); ++i) p.img_[i] = b.img_[static_cast<std::size_t>(a.img_[i])];
  return p;
}

std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens, int m) {
  std::vector<int> comp(static_cast<std::size_t>(m), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < m; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> orbit{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& g : gens) {
        int t = g[orbit[k]];
        if (comp[static_cast<std::size_t>(t)] < 0) {
          comp[static_cast<std::size_t>(t)] = static_cast<int>(out.size());
          orbit.push_back(t);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, int m, std::size_t cap) {
  std::set<Permutation> seen{Permutation::identity(m)};
  std::vector<Permutation> out{Permutation::identity(m)};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : gens) {
      Permutation h = out[k] * g;
      if (seen.insert(h).second) {
        out.push_back(h);
        if (out.size() > cap) {
          throw Error(Errc::SaturationOverflow, "permutation group exceeds cap " + std::to_string(cap));
        }
      }
    }
  }
  return out;
}

}  // namespace selfsim::tree
