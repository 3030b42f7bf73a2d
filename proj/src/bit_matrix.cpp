#include "chi/bit_matrix.hpp"

#include <stdexcept>

namespace chi {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  bits_.assign(static_cast<std::size_t>(rows_) * words_per_row_, 0);
}

bool BitMatrix::get(int r, int c) const {
  return (bits_[static_cast<std::size_t>(r) * words_per_row_ + c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::set(int r, int c, bool v) {
  auto& w = bits_[static_cast<std::size_t>(r) * words_per_row_ + c / 64];
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  if (v)
    w |= mask;
  else
    w &= ~mask;
}

void BitMatrix::flip(int r, int c) {
  bits_[static_cast<std::size_t>(r) * words_per_row_ + c / 64] ^= std::uint64_t{1} << (c % 64);
}

void BitMatrix::add_row(int dst, int src) {
  auto* d = &bits_[static_cast<std::size_t>(dst) * words_per_row_];
  const auto* s = &bits_[static_cast<std::size_t>(src) * words_per_row_];
  for (int w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(int a, int b) {
  auto* pa = &bits_[static_cast<std::size_t>(a) * words_per_row_];
  auto* pb = &bits_[static_cast<std::size_t>(b) * words_per_row_];
  for (int w = 0; w < words_per_row_; ++w) std::swap(pa[w], pb[w]);
}

BitVec BitMatrix::row(int r) const {
  BitVec out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = get(r, c);
  return out;
}

BitVec BitMatrix::apply(const BitVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("dimension mismatch");
  BitVec out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    unsigned acc = 0;
    for (int c = 0; c < cols_; ++c) acc ^= static_cast<unsigned>(get(r, c) & v[c]);
    out[r] = static_cast<std::uint8_t>(acc & 1u);
  }
  return out;
}

RankKernel rank_and_kernel(const BitMatrix& m) {
  BitMatrix a = m;
  const int rows = a.rows(), cols = a.cols();
  std::vector<int> pivot_col;  // pivot column of each eliminated row
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a.get(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.swap_rows(r, piv);
    for (int i = 0; i < rows; ++i)
      if (i != r && a.get(i, c)) a.add_row(i, r);
    pivot_col.push_back(c);
    ++r;
  }

  RankKernel out;
  out.rank = r;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    BitVec v(cols, 0);
    v[c] = 1;
    for (int i = 0; i < r; ++i)
      if (a.get(i, c)) v[pivot_col[i]] = 1;
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::optional<BitVec> solve_membership(const BitMatrix& m, const BitVec& v) {
  if (static_cast<int>(v.size()) != m.rows()) throw std::invalid_argument("dimension mismatch");
  const int rows = m.rows(), cols = m.cols();
  // augmented elimination over [m | v]
  BitMatrix a(rows, cols + 1);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) a.set(r, c, m.get(r, c));
    a.set(r, cols, v[r] != 0);
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a.get(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.swap_rows(r, piv);
    for (int i = 0; i < rows; ++i)
      if (i != r && a.get(i, c)) a.add_row(i, r);
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (a.get(i, cols)) return std::nullopt;  // inconsistent
  BitVec c(cols, 0);
  for (int i = 0; i < r; ++i) c[pivot_col[i]] = a.get(i, cols) ? 1 : 0;
  return c;
}

}  // namespace chi
