#pragma once

// Row-style Hermite normal form over the integers, with the unimodular
// transform, plus the derived membership and left-kernel routines.

#include <optional>
#include <vector>

#include "selfsim/adic.hpp"

namespace selfsim::lin {

using adic::BigInt;
using Matrix = std::vector<std::vector<BigInt>>;

struct Hnf {
  Matrix H;                 // U A = H, echelon with positive pivots
  Matrix U;                 // unimodular, rows x rows
  std::vector<int> pivots;  // pivot column of each nonzero row of H
  int rank() const { return static_cast<int>(pivots.size()); }
};

Hnf hermite(const Matrix& A, int cols);

/// Coefficients c with c A = v, or nullopt when v is outside the row lattice.
std::optional<std::vector<BigInt>> solve_in_lattice(const Hnf& h, const std::vector<BigInt>& v);

/// Basis of { c : c A = 0 }.
Matrix left_kernel(const Hnf& h);

long long to_int64(const BigInt& v);

}  // namespace selfsim::lin
