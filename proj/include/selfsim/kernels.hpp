#pragma once

// Data-parallel kernels over level permutations: arrays of m^l images, one
// per vertex of a tree level.  Each kernel has a scalar reference version and
// an AVX2 version; the variant is chosen once at startup from CPU features
// and may be pinned with SELFSIM_ISA=scalar|avx2.

#include <cstdint>
#include <span>

namespace selfsim::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
/// Best variant the CPU supports.
Isa detected_isa();
Isa active_isa();
/// Overrides the dispatch; rejects variants the CPU lacks.  Returns the
/// variant actually in force.
Isa set_active_isa(Isa isa);

/// out[i] = b[a[i]]: apply a, then b.
void compose(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out);
/// out[i] = src[i] + offset.
void offset_copy(std::span<const std::uint32_t> src, std::uint32_t offset,
                 std::span<std::uint32_t> out);
bool equal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
bool is_identity(std::span<const std::uint32_t> a);

namespace scalar {
void compose(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out);
void offset_copy(std::span<const std::uint32_t> src, std::uint32_t offset,
                 std::span<std::uint32_t> out);
bool equal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
bool is_identity(std::span<const std::uint32_t> a);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define SELFSIM_HAVE_AVX2_KERNELS 1
namespace avx2 {
void compose(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out);
void offset_copy(std::span<const std::uint32_t> src, std::uint32_t offset,
                 std::span<std::uint32_t> out);
bool equal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
bool is_identity(std::span<const std::uint32_t> a);
}  // namespace avx2
#endif

}  // namespace selfsim::kernels
