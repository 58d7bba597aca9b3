#include "selfsim/intmat.hpp"

#include <limits>
#include <utility>

namespace selfsim::lin {
namespace {

void row_sub(std::vector<BigInt>& dst, const std::vector<BigInt>& src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= k * src[i];
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Hnf hermite(const Matrix& A, int cols) {
  const std::size_t rows = A.size();
  Hnf h;
  h.H = A;
  for (auto& r : h.H) {
    if (static_cast<int>(r.size()) != cols) throw Error(Errc::ShapeMismatch, "ragged integer matrix");
  }
  h.U.assign(rows, std::vector<BigInt>(rows, 0));
  for (std::size_t i = 0; i < rows; ++i) h.U[i][i] = 1;

  std::size_t p = 0;
  for (int c = 0; c < cols && p < rows; ++c) {
    const auto col = static_cast<std::size_t>(c);
    while (true) {
      std::size_t best = rows;
      for (std::size_t r = p; r < rows; ++r) {
        if (h.H[r][col] != 0 && (best == rows || abs(h.H[r][col]) < abs(h.H[best][col]))) best = r;
      }
      if (best == rows) break;
      std::swap(h.H[p], h.H[best]);
      std::swap(h.U[p], h.U[best]);
      bool done = true;
      for (std::size_t r = p + 1; r < rows; ++r) {
        if (h.H[r][col] == 0) continue;
        const BigInt k = h.H[r][col] / h.H[p][col];
        row_sub(h.H[r], h.H[p], k);
        row_sub(h.U[r], h.U[p], k);
        if (h.H[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (h.H[p][col] == 0) continue;
    if (h.H[p][col] < 0) {
      for (auto& x : h.H[p]) x = -x;
      for (auto& x : h.U[p]) x = -x;
    }
    for (std::size_t r = 0; r < p; ++r) {
      const BigInt k = floor_div(h.H[r][col], h.H[p][col]);
      row_sub(h.H[r], h.H[p], k);
      row_sub(h.U[r], h.U[p], k);
    }
    h.pivots.push_back(c);
    ++p;
  }
  return h;
}

std::optional<std::vector<BigInt>> solve_in_lattice(const Hnf& h, const std::vector<BigInt>& v) {
  std::vector<BigInt> rem = v;
  std::vector<BigInt> coeff(h.H.size(), 0);  // in terms of HNF rows
  for (std::size_t r = 0; r < h.pivots.size(); ++r) {
    const auto col = static_cast<std::size_t>(h.pivots[r]);
    if (rem[col] % h.H[r][col] != 0) return std::nullopt;
    const BigInt k = rem[col] / h.H[r][col];
    coeff[r] = k;
    row_sub(rem, h.H[r], k);
  }
  for (const auto& x : rem) {
    if (x != 0) return std::nullopt;
  }
  std::vector<BigInt> out(h.U.empty() ? 0 : h.U[0].size(), 0);
  for (std::size_t r = 0; r < h.pivots.size(); ++r) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeff[r] * h.U[r][i];
  }
  return out;
}

Matrix left_kernel(const Hnf& h) {
  Matrix K;
  for (std::size_t r = h.pivots.size(); r < h.U.size(); ++r) K.push_back(h.U[r]);
  return K;
}

long long to_int64(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw Error(Errc::Overflow, "integer coordinate exceeds 64 bits");
  }
  return static_cast<long long>(v);
}

}  // namespace selfsim::lin
