#pragma once

#include <cstdint>
#include <vector>

#include "orbitdist/errors.hpp"

namespace orbitdist {

// Scalar arithmetic for F_q as lookup tables (q small). For prime q the
// tables are plain mod-p arithmetic; for q = p^e they are filled in by the
// field tower from the subfield embedding.
struct FqArith {
  int q = 0;
  std::vector<uint8_t> add_tab;  // q*q
  std::vector<uint8_t> mul_tab;  // q*q
  std::vector<uint8_t> neg_tab;  // q
  std::vector<uint8_t> inv_tab;  // q, entry 0 unused

  static FqArith for_prime(int p);

  uint8_t add(uint8_t a, uint8_t b) const { return add_tab[a * q + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_tab[a * q + neg_tab[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_tab[a * q + b]; }
  uint8_t neg(uint8_t a) const { return neg_tab[a]; }
  uint8_t inv(uint8_t a) const { return inv_tab[a]; }
};

// Dense row-major matrix over F_q with a fixed ambient dimension (columns).
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static FqMatrix from_rows(const std::vector<std::vector<uint8_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint8_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
  uint8_t& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const uint8_t* row(int r) const { return a_.data() + size_t(r) * cols_; }
  uint8_t* row(int r) { return a_.data() + size_t(r) * cols_; }

  void append_row(const uint8_t* v, int len);
  void append_row(const std::vector<uint8_t>& v) { append_row(v.data(), int(v.size())); }
  std::vector<uint8_t> row_vec(int r) const;

  const std::vector<uint8_t>& data() const { return a_; }

  bool operator==(const FqMatrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint8_t> a_;
};

struct RrefResult {
  FqMatrix mat;   // reduced row echelon form, zero rows removed
  int rank = 0;
  std::vector<int> pivots;  // pivot column per row
};

// Unique reduced row echelon form: pivots are the first nonzero entry of
// each row in column order, leading coefficients normalized to 1, pivot
// columns cleared above and below, zero rows dropped.
RrefResult rref(const FqMatrix& m, const FqArith& F);

int rank(const FqMatrix& m, const FqArith& F);

// dim(rowspace(a) ∩ rowspace(b)) = rank(a) + rank(b) - rank(a stacked on b)
int intersection_dim(const FqMatrix& a, const FqMatrix& b, const FqArith& F);

// basis (RREF) of rowspace(a) ∩ rowspace(b), via the Zassenhaus layout
FqMatrix intersection_basis(const FqMatrix& a, const FqMatrix& b, const FqArith& F);

// true iff v lies in the row space of m
bool solve_membership(const FqMatrix& m, const std::vector<uint8_t>& v, const FqArith& F);

// basis (rows, RREF) of the right kernel {v : m v^T = 0}
FqMatrix kernel_basis(const FqMatrix& m, const FqArith& F);

// Word-parallel elimination kernels used by the orbit sweep. Columns are
// bit positions; at most 64 columns.
namespace gf2kernel {

int rank_destructive(uint64_t* rows, int count);

}  // namespace gf2kernel

namespace gf3kernel {

// One row of GF(3) digits in two bit planes: digit i is 1 if bit i of lo
// is set, 2 if bit i of hi is set; the planes never overlap.
struct Row {
  uint64_t lo = 0;
  uint64_t hi = 0;
  bool operator==(const Row&) const = default;
};

inline Row add(Row x, Row y) {
  const uint64_t xn = x.lo | x.hi;   // x != 0
  const uint64_t yn = y.lo | y.hi;   // y != 0
  Row r;
  r.lo = (~xn & y.lo) | (x.lo & ~yn) | (x.hi & y.hi);
  r.hi = (~xn & y.hi) | (x.hi & ~yn) | (x.lo & y.lo);
  return r;
}

inline Row neg(Row x) { return Row{x.hi, x.lo}; }
inline Row sub(Row x, Row y) { return add(x, neg(y)); }
inline int digit(Row x, int col) {
  return int((x.lo >> col) & 1) + 2 * int((x.hi >> col) & 1);
}

int rank_destructive(Row* rows, int count);

}  // namespace gf3kernel

}  // namespace orbitdist
