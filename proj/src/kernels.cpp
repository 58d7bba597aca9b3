#include "selfsim/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace selfsim::kernels {

namespace scalar {

void compose(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
}

void offset_copy(std::span<const std::uint32_t> src, std::uint32_t offset,
                 std::span<std::uint32_t> out) {
  for (std::size_t i = 0; i < src.size(); ++i) out[i] = src[i] + offset;
}

bool equal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool is_identity(std::span<const std::uint32_t> a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != i) return false;
  }
  return true;
}

}  // namespace scalar

namespace {

bool cpu_has_avx2() {
#if defined(SELFSIM_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  Isa best = cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
  if (const char* env = std::getenv("SELFSIM_ISA")) {
    std::string_view v(env);
    if (v == "scalar") return Isa::Scalar;
  }
  return best;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() { return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

Isa set_active_isa(Isa isa) {
  if (isa == Isa::Avx2 && !cpu_has_avx2()) isa = Isa::Scalar;
  current().store(isa, std::memory_order_relaxed);
  return isa;
}

#ifdef SELFSIM_HAVE_AVX2_KERNELS
#define SELFSIM_DISPATCH(fn, ...) \
  (active_isa() == Isa::Avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define SELFSIM_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void compose(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out) {
  SELFSIM_DISPATCH(compose, a, b, out);
}

void offset_copy(std::span<const std::uint32_t> src, std::uint32_t offset,
                 std::span<std::uint32_t> out) {
  SELFSIM_DISPATCH(offset_copy, src, offset, out);
}

bool equal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  return SELFSIM_DISPATCH(equal, a, b);
}

bool is_identity(std::span<const std::uint32_t> a) { return SELFSIM_DISPATCH(is_identity, a); }

}  // namespace selfsim::kernels
