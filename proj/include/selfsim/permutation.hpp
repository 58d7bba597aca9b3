#pragma once

// Permutations of Y = {1..m}.  Stored 0-indexed; the product a * b means
// "apply a, then b", matching actions on the right.

#include <cstdint>
#include <string>
#include <vector>

#include "selfsim/error.hpp"

namespace selfsim::tree {

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int m);
  /// Images in 1-indexed form, e.g. {2, 1} for the transposition.
  static Permutation from_images(const std::vector<int>& images_1based);
  /// Cycle notation, 1-indexed.
  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);
  /// 0-indexed images, unchecked apart from bijectivity.
  static Permutation from_zero_based(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int point) const { return img_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& zero_based() const { return img_; }
  std::vector<int> images() const;

  Permutation inverse() const;
  Permutation pow(long long n) const;
  int order() const;
  bool is_identity() const;
  bool is_full_cycle() const;

  /// "(1 2)(3 4)", or "()" for the identity.
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

/// Orbits of the group generated by gens on {0..m-1}, each sorted, ordered by
/// smallest point.
std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens, int m);

/// Closure of gens under multiplication; throws SaturationOverflow past cap.
std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, int m,
                                        std::size_t cap = 10000);

}  // namespace selfsim::tree
