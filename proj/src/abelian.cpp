#include "selfsim/abelian.hpp"

namespace selfsim::rep {

FgAbelianGroup::FgAbelianGroup(int free_rank, std::vector<long long> torsion) : n_(free_rank), d_(std::move(torsion)) {
  if (n_ < 0) throw Error(Errc::InvalidTriple, "negative free rank");
  for (long long d : d_) {
    if (d < 2) throw Error(Errc::InvalidTriple, "torsion orders must be at least 2");
  }
}

Vec FgAbelianGroup::canonical(Vec v) const {
  if (static_cast<int>(v.size()) != dim()) {
    throw Error(Errc::ShapeMismatch, "element has " + std::to_string(v.size()) + " coordinates, group has " +
                                         std::to_string(dim()));
  }
  for (std::size_t i = 0; i < d_.size(); ++i) {
    auto& x = v[static_cast<std::size_t>(n_) + i];
    x %= d_[i];
    if (x < 0) x += d_[i];
  }
  return v;
}

Vec FgAbelianGroup::add(const Vec& a, const Vec& b) const {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (__builtin_add_overflow(a[i], b[i], &r[i])) throw Error(Errc::Overflow, "group coordinate overflow");
  }
  return canonical(std::move(r));
}

Vec FgAbelianGroup::neg(const Vec& a) const {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return canonical(std::move(r));
}

Vec FgAbelianGroup::sub(const Vec& a, const Vec& b) const { return add(a, neg(b)); }

Vec FgAbelianGroup::scale(const Vec& a, long long k) const {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (__builtin_mul_overflow(a[i], k, &r[i])) throw Error(Errc::Overflow, "group coordinate overflow");
  }
  return canonical(std::move(r));
}

Vec FgAbelianGroup::basis(int i) const {
  Vec v = zero();
  v.at(static_cast<std::size_t>(i)) = 1;
  return v;
}

lin::Matrix FgAbelianGroup::torsion_rows() const {
  lin::Matrix rows;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    std::vector<lin::BigInt> r(static_cast<std::size_t>(dim()), 0);
    r[static_cast<std::size_t>(n_) + i] = d_[i];
    rows.push_back(std::move(r));
  }
  return rows;
}

VirtualEndo::VirtualEndo(FgAbelianGroup g, std::vector<Vec> h_gens, std::vector<Vec> f_images)
    : g_(std::move(g)), h_gens_(std::move(h_gens)), f_images_(std::move(f_images)) {
  if (h_gens_.size() != f_images_.size()) throw Error(Errc::InvalidTriple, "H_gens and f_images differ in length");
  lin::Matrix A;
  for (auto& h : h_gens_) {
    h = g_.canonical(h);
    A.emplace_back(h.begin(), h.end());
  }
  for (auto& fi : f_images_) fi = g_.canonical(fi);
  for (auto& r : g_.torsion_rows()) A.push_back(r);
  hnf_ = lin::hermite(A, g_.dim());
  if (hnf_.rank() < g_.dim()) throw Error(Errc::InvalidTriple, "H has infinite index in G");
  lin::BigInt idx = 1;
  for (std::size_t r = 0; r < hnf_.pivots.size(); ++r) idx *= hnf_.H[r][static_cast<std::size_t>(hnf_.pivots[r])];
  lin::BigInt tors = 1;
  for (long long d : g_.torsion()) tors *= d;
  index_ = lin::to_int64(idx / tors);
  if (index_ < 2) throw Error(Errc::InvalidTriple, "[G:H] = " + std::to_string(index_) + "; the index must be at least 2");

  // f respects every relation among the generators of H
  for (const auto& c : lin::left_kernel(hnf_)) {
    Vec img = g_.zero();
    for (std::size_t k = 0; k < h_gens_.size(); ++k) {
      img = g_.add(img, g_.scale(f_images_[k], lin::to_int64(c[k])));
    }
    if (img != g_.zero()) throw Error(Errc::FIllDefined, "f does not respect a relation among the H generators");
  }
}

bool VirtualEndo::contains(const Vec& v) const {
  return lin::solve_in_lattice(hnf_, std::vector<lin::BigInt>(v.begin(), v.end())).has_value();
}

Vec VirtualEndo::apply(const Vec& h) const {
  auto c = lin::solve_in_lattice(hnf_, std::vector<lin::BigInt>(h.begin(), h.end()));
  if (!c) throw Error(Errc::NotInvariant, "element outside H");
  Vec img = g_.zero();
  for (std::size_t k = 0; k < h_gens_.size(); ++k) img = g_.add(img, g_.scale(f_images_[k], lin::to_int64((*c)[k])));
  return img;
}

void check_transversal(const VirtualEndo& v, const Transversal& t) {
  if (static_cast<long long>(t.reps.size()) != v.index()) {
    throw Error(Errc::InconsistentTransversal, "transversal has " + std::to_string(t.reps.size()) +
                                                   " elements, [G:H] = " + std::to_string(v.index()));
  }
  const auto& g = v.group();
  for (std::size_t i = 0; i < t.reps.size(); ++i) {
    for (std::size_t j = i + 1; j < t.reps.size(); ++j) {
      if (v.contains(g.sub(t.reps[i], t.reps[j]))) {
        throw Error(Errc::InconsistentTransversal,
                    "representatives " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " share a coset");
      }
    }
  }
}

tree::Permutation coset_permutation(const VirtualEndo& v, const Transversal& t, const Vec& g) {
  const auto& G = v.group();
  std::vector<int> img;
  for (const auto& xi : t.reps) {
    const Vec y = G.add(xi, g);
    int found = -1;
    for (std::size_t j = 0; j < t.reps.size(); ++j) {
      if (v.contains(G.sub(y, t.reps[j]))) {
        found = static_cast<int>(j);
        break;
      }
    }
    if (found < 0) throw Error(Errc::InconsistentTransversal, "x_i g lies in no listed coset");
    img.push_back(found);
  }
  return tree::Permutation::from_zero_based(std::move(img));
}

Triple triple_from_json(const nlohmann::json& j) {
  try {
    FgAbelianGroup g(j.at("free_rank").get<int>(), j.value("torsion", std::vector<long long>{}));
    VirtualEndo v(g, j.at("H_gens").get<std::vector<Vec>>(), j.at("f_images").get<std::vector<Vec>>());
    Transversal t;
    for (const auto& x : j.at("transversal")) t.reps.push_back(v.group().canonical(x.get<Vec>()));
    check_transversal(v, t);
    return {std::move(v), std::move(t)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidTriple, std::string("triple file: ") + e.what());
  }
}

}  // namespace selfsim::rep
