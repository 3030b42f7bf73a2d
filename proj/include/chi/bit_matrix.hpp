#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace chi {

// Dense 0/1 vector; entries are 0 or 1.
using BitVec = std::vector<std::uint8_t>;

// Dense matrix over GF(2), row-major packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const;
  void set(int r, int c, bool v);
  void flip(int r, int c);

  // xor of row src into row dst
  void add_row(int dst, int src);
  void swap_rows(int a, int b);

  BitVec row(int r) const;
  BitVec apply(const BitVec& v) const;  // matrix * column vector

 private:
  int rows_, cols_, words_per_row_;
  std::vector<std::uint64_t> bits_;
};

struct RankKernel {
  int rank = 0;
  std::vector<BitVec> kernel;  // basis vectors v with m*v = 0, each of length cols
};

// Gaussian elimination; pivots chosen leftmost column, topmost row.
RankKernel rank_and_kernel(const BitMatrix& m);

// Coordinates c with m*c = v when v lies in the column space, otherwise nullopt.
// Throws std::invalid_argument when v has the wrong length.
std::optional<BitVec> solve_membership(const BitMatrix& m, const BitVec& v);

}  // namespace chi
