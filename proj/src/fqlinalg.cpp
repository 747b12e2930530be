#include "orbitdist/fqlinalg.hpp"

#include <algorithm>
#include <cassert>

namespace orbitdist {

FqArith FqArith::for_prime(int p) {
  FqArith F;
  F.q = p;
  F.add_tab.resize(p * p);
  F.mul_tab.resize(p * p);
  F.neg_tab.resize(p);
  F.inv_tab.resize(p);
  for (int a = 0; a < p; ++a) {
    F.neg_tab[a] = uint8_t((p - a) % p);
    for (int b = 0; b < p; ++b) {
      F.add_tab[a * p + b] = uint8_t((a + b) % p);
      F.mul_tab[a * p + b] = uint8_t((a * b) % p);
    }
  }
  F.inv_tab[0] = 0;
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if (a * b % p == 1) F.inv_tab[a] = uint8_t(b);
  return F;
}

FqMatrix FqMatrix::from_rows(const std::vector<std::vector<uint8_t>>& rows) {
  FqMatrix m;
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void FqMatrix::append_row(const uint8_t* v, int len) {
  if (rows_ == 0 && cols_ == 0) cols_ = len;
  if (len != cols_) throw AmbientMismatchError("row length does not match ambient dimension");
  a_.insert(a_.end(), v, v + len);
  ++rows_;
}

std::vector<uint8_t> FqMatrix::row_vec(int r) const {
  return std::vector<uint8_t>(row(r), row(r) + cols_);
}

namespace {

// in-place elimination; returns rank and, if out/pivots given, the
// compacted reduced rows
int eliminate(FqMatrix& w, const FqArith& F, std::vector<int>* pivots) {
  const int rows = w.rows(), cols = w.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (w.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols; ++j) std::swap(w.at(r, j), w.at(piv, j));
    const uint8_t lead = w.at(r, c);
    if (lead != 1) {
      const uint8_t s = F.inv(lead);
      for (int j = c; j < cols; ++j) w.at(r, j) = F.mul(w.at(r, j), s);
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const uint8_t f = w.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < cols; ++j)
        w.at(i, j) = F.sub(w.at(i, j), F.mul(f, w.at(r, j)));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

RrefResult rref(const FqMatrix& m, const FqArith& F) {
  FqMatrix w = m;
  RrefResult res;
  res.rank = eliminate(w, F, &res.pivots);
  res.mat = FqMatrix(res.rank, m.cols());
  for (int i = 0; i < res.rank; ++i)
    std::copy(w.row(i), w.row(i) + m.cols(), res.mat.row(i));
  return res;
}

int rank(const FqMatrix& m, const FqArith& F) {
  FqMatrix w = m;
  return eliminate(w, F, nullptr);
}

int intersection_dim(const FqMatrix& a, const FqMatrix& b, const FqArith& F) {
  if (a.cols() != b.cols())
    throw AmbientMismatchError("ambient dimensions differ");
  FqMatrix stacked(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    std::copy(a.row(i), a.row(i) + a.cols(), stacked.row(i));
  for (int i = 0; i < b.rows(); ++i)
    std::copy(b.row(i), b.row(i) + b.cols(), stacked.row(a.rows() + i));
  return rank(a, F) + rank(b, F) - rank(stacked, F);
}

FqMatrix intersection_basis(const FqMatrix& a, const FqMatrix& b, const FqArith& F) {
  if (a.cols() != b.cols())
    throw AmbientMismatchError("ambient dimensions differ");
  const int n = a.cols();
  // Zassenhaus: rows [a | a] and [b | 0]; after elimination the rows whose
  // left half vanished span the intersection in their right half.
  FqMatrix w(a.rows() + b.rows(), 2 * n);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < n; ++j) {
      w.at(i, j) = a.at(i, j);
      w.at(i, n + j) = a.at(i, j);
    }
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < n; ++j) w.at(a.rows() + i, j) = b.at(i, j);
  const int r = eliminate(w, F, nullptr);
  FqMatrix inter;
  for (int i = 0; i < r; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n; ++j)
      if (w.at(i, j) != 0) { left_zero = false; break; }
    if (left_zero) inter.append_row(w.row(i) + n, n);
  }
  if (inter.rows() == 0) return FqMatrix(0, n);
  return rref(inter, F).mat;
}

bool solve_membership(const FqMatrix& m, const std::vector<uint8_t>& v, const FqArith& F) {
  if (int(v.size()) != m.cols() && m.rows() > 0)
    throw AmbientMismatchError("vector length does not match ambient dimension");
  RrefResult r = rref(m, F);
  std::vector<uint8_t> w = v;
  for (int i = 0; i < r.rank; ++i) {
    const int c = r.pivots[i];
    const uint8_t f = w[c];
    if (f == 0) continue;
    for (int j = c; j < int(w.size()); ++j)
      w[j] = F.sub(w[j], F.mul(f, r.mat.at(i, j)));
  }
  return std::all_of(w.begin(), w.end(), [](uint8_t x) { return x == 0; });
}

FqMatrix kernel_basis(const FqMatrix& m, const FqArith& F) {
  const int n = m.cols();
  RrefResult r = rref(m, F);
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivots) is_pivot[c] = true;
  FqMatrix ker;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<uint8_t> v(n, 0);
    v[c] = 1;
    for (int i = 0; i < r.rank; ++i)
      v[r.pivots[i]] = F.neg(r.mat.at(i, c));
    ker.append_row(v);
  }
  if (ker.rows() == 0) return FqMatrix(0, n);
  return rref(ker, F).mat;
}

namespace gf2kernel {

int rank_destructive(uint64_t* rows, int count) {
  int r = 0;
  for (int i = 0; i < count; ++i) {
    uint64_t v = rows[i];
    for (int j = 0; j < r; ++j) {
      const uint64_t p = rows[j];
      if (v & (p & -p)) v ^= p;
    }
    if (v) {
      // keep pivot rows sorted by pivot bit so the low-bit trick above works
      rows[r] = v;
      int j = r;
      while (j > 0 && (rows[j] & -rows[j]) < (rows[j - 1] & -rows[j - 1])) {
        std::swap(rows[j], rows[j - 1]);
        --j;
      }
      ++r;
    }
  }
  return r;
}

}  // namespace gf2kernel

namespace gf3kernel {

int rank_destructive(Row* rows, int count) {
  int r = 0;
  for (int i = 0; i < count; ++i) {
    Row v = rows[i];
    for (int j = 0; j < r; ++j) {
      const Row p = rows[j];
      const uint64_t pbit = (p.lo | p.hi) & -(p.lo | p.hi);
      const int col = __builtin_ctzll(pbit);
      const int dv = digit(v, col);
      if (dv == 0) continue;
      const int dp = digit(p, col);
      v = (dv == dp) ? sub(v, p) : add(v, p);
    }
    if (v.lo | v.hi) {
      rows[r] = v;
      int j = r;
      auto low = [](const Row& x) { return (x.lo | x.hi) & -(x.lo | x.hi); };
      while (j > 0 && low(rows[j]) < low(rows[j - 1])) {
        std::swap(rows[j], rows[j - 1]);
        --j;
      }
      ++r;
    }
  }
  return r;
}

}  // namespace gf3kernel

}  // namespace orbitdist
