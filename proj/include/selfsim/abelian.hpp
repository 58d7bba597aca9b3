#pragma once

// Finitely generated abelian groups G = Z^n + Z/d_1 + ... + Z/d_t in explicit
// coordinates, finite-index subgroups H, homomorphisms f: H -> G, and right
// transversals of H in G.  Membership in H is decided on the lattice spanned
// by the H generators together with the torsion relations.

#include <vector>

#include <json.hpp>

#include "selfsim/intmat.hpp"
#include "selfsim/permutation.hpp"

namespace selfsim::rep {

using Vec = std::vector<long long>;

class FgAbelianGroup {
 public:
  FgAbelianGroup(int free_rank, std::vector<long long> torsion);

  int free_rank() const { return n_; }
  const std::vector<long long>& torsion() const { return d_; }
  int dim() const { return n_ + static_cast<int>(d_.size()); }

  Vec canonical(Vec v) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  Vec scale(const Vec& a, long long k) const;
  Vec zero() const { return Vec(static_cast<std::size_t>(dim()), 0); }
  Vec basis(int i) const;

  /// Rows d_i e_{n+i}.
  lin::Matrix torsion_rows() const;

 private:
  int n_;
  std::vector<long long> d_;
};

class VirtualEndo {
 public:
  /// h_gens and f_images in G coordinates, one row per generator of H.
  VirtualEndo(FgAbelianGroup g, std::vector<Vec> h_gens, std::vector<Vec> f_images);

  const FgAbelianGroup& group() const { return g_; }
  long long index() const { return index_; }
  bool contains(const Vec& v) const;
  /// f(h); throws NotInvariant when h is outside H.
  Vec apply(const Vec& h) const;

 private:
  FgAbelianGroup g_;
  std::vector<Vec> h_gens_;
  std::vector<Vec> f_images_;
  lin::Hnf hnf_;  // rows: H generators, then torsion relations
  long long index_ = 0;
};

struct Transversal {
  std::vector<Vec> reps;  // x_1..x_m
};

/// Checks that reps lie in distinct cosets and number [G:H].
void check_transversal(const VirtualEndo& v, const Transversal& t);
/// pi(g): i -> j where H x_i g = H x_j.
tree::Permutation coset_permutation(const VirtualEndo& v, const Transversal& t, const Vec& g);

struct Triple {
  VirtualEndo endo;
  Transversal transversal;
};
/// {"free_rank", "torsion", "H_gens", "f_images", "transversal"}
Triple triple_from_json(const nlohmann::json& j);

}  // namespace selfsim::rep
