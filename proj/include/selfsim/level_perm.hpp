#pragma once

// Level permutations of generators a = (a^{q_1}, ..., a^{q_m}) sigma, built
// without portraits through sigma(l) = (sigma(l-1)^{q_1}, ..., sigma(l-1)^{q_m}) sigma,
// where a power a^{q} acts on level n as prod_j (sigma(n-j) blockwise)^{q_j mod m^{n-j}}.

#include <cstdint>
#include <vector>

#include "selfsim/adic.hpp"
#include "selfsim/expr.hpp"

namespace selfsim::tree {

/// Exponent q_i of entry i when g has the single-generator power shape.
/// Throws ShapeMismatch otherwise.
std::vector<std::vector<adic::BigInt>> power_shape(const WreathGenerator& g);

/// 0-based images of the m^l vertices of level l.
std::vector<std::uint32_t> level_perm_fast(const WreathGenerator& g, int l);

/// p^c for a permutation array, c >= 0, via the compose kernel.
std::vector<std::uint32_t> perm_power(const std::vector<std::uint32_t>& p, const adic::BigInt& c);

}  // namespace selfsim::tree
