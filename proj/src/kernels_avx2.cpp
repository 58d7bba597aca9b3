#include "selfsim/kernels.hpp"

#ifdef SELFSIM_HAVE_AVX2_KERNELS
#include <immintrin.h>

namespace selfsim::kernels::avx2 {

// Level sizes stay far below 2^31, so 32-bit signed gather indices are safe.
void compose(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out) {
  const std::size_t n = a.size();
  const auto* base = reinterpret_cast<const int*>(b.data());
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i v = _mm256_i32gather_epi32(base, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), v);
  }
  for (; i < n; ++i) out[i] = b[a[i]];
}

void offset_copy(std::span<const std::uint32_t> src, std::uint32_t offset,
                 std::span<std::uint32_t> out) {
  const std::size_t n = src.size();
  const __m256i off = _mm256_set1_epi32(static_cast<int>(offset));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), _mm256_add_epi32(v, off));
  }
  for (; i < n; ++i) out[i] = src[i] + offset;
}

bool equal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(x, y)) != -1) return false;
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool is_identity(std::span<const std::uint32_t> a) {
  const std::size_t n = a.size();
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(x, iota)) != -1) return false;
    iota = _mm256_add_epi32(iota, step);
  }
  for (; i < n; ++i) {
    if (a[i] != i) return false;
  }
  return true;
}

}  // namespace selfsim::kernels::avx2

#endif
