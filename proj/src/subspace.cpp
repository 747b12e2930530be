#include "orbitdist/subspace.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace orbitdist {

Subspace Subspace::zero(const FieldTower& tower) {
  Subspace s;
  s.tower_ = &tower;
  s.basis_ = FqMatrix(0, tower.n());
  return s;
}

Subspace Subspace::full(const FieldTower& tower) {
  FqMatrix rows(tower.n(), tower.n());
  for (int i = 0; i < tower.n(); ++i) rows.at(i, i) = 1;
  return from_coord_rows(tower, rows);
}

Subspace Subspace::span(const FieldTower& tower, const std::vector<FFElem>& elems) {
  FqMatrix rows(0, tower.n());
  for (const FFElem& x : elems) {
    tower.require_same(x);
    rows.append_row(tower.to_fq_coords(x));
  }
  return from_coord_rows(tower, rows);
}

Subspace Subspace::from_coord_rows(const FieldTower& tower, const FqMatrix& rows) {
  if (rows.rows() > 0 && rows.cols() != tower.n())
    throw AmbientMismatchError("coordinate rows must have length n");
  Subspace s;
  s.tower_ = &tower;
  s.basis_ = rref(rows, tower.fq()).mat;
  if (s.basis_.rows() == 0) s.basis_ = FqMatrix(0, tower.n());
  return s;
}

std::vector<FFElem> Subspace::basis_elements() const {
  std::vector<FFElem> out;
  out.reserve(k());
  for (int i = 0; i < k(); ++i) out.push_back(tower_->from_fq_coords(basis_.row_vec(i)));
  return out;
}

bool Subspace::contains(const FFElem& x) const {
  tower_->require_same(x);
  return solve_membership(basis_, tower_->to_fq_coords(x), tower_->fq());
}

bool Subspace::contains_subspace(const Subspace& other) const {
  if (tower_ != other.tower_) throw TowerMismatchError("subspaces from different towers");
  for (int i = 0; i < other.k(); ++i)
    if (!solve_membership(basis_, other.basis_.row_vec(i), tower_->fq())) return false;
  return true;
}

std::vector<FFElem> Subspace::elements() const {
  const int q = tower_->q();
  uint64_t total = 1;
  for (int i = 0; i < k(); ++i) {
    total *= uint64_t(q);
    if (total > (uint64_t(1) << 22))
      throw OracleScaleExceededError("subspace too large to enumerate");
  }
  std::vector<FFElem> base = basis_elements();
  std::vector<FFElem> out;
  out.reserve(total);
  std::vector<int> digits(k(), 0);
  for (uint64_t c = 0; c < total; ++c) {
    FFElem acc = tower_->zero();
    uint64_t rem = c;
    for (int i = 0; i < k(); ++i) {
      const int d = int(rem % q);
      rem /= q;
      if (d) acc = tower_->add(acc, tower_->mul(tower_->fq_elem(uint8_t(d)), base[i]));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

Subspace Subspace::shifted(const FFElem& a) const {
  tower_->require_same(a);
  if (a.is_zero()) throw ZeroShiftError("cyclic shift by zero");
  FqMatrix rows(0, tower_->n());
  for (int i = 0; i < k(); ++i) {
    FFElem x = tower_->from_fq_coords(basis_.row_vec(i));
    rows.append_row(tower_->to_fq_coords(tower_->mul(a, x)));
  }
  Subspace s = from_coord_rows(*tower_, rows);
  assert(s.k() == k());
  return s;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (tower_ != other.tower_) throw TowerMismatchError("subspaces from different towers");
  FqMatrix rows = basis_;
  for (int i = 0; i < other.k(); ++i) rows.append_row(other.basis_.row(i), other.basis_.cols());
  return from_coord_rows(*tower_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (tower_ != other.tower_) throw TowerMismatchError("subspaces from different towers");
  Subspace s;
  s.tower_ = tower_;
  s.basis_ = intersection_basis(basis_, other.basis_, tower_->fq());
  if (s.basis_.rows() == 0) s.basis_ = FqMatrix(0, tower_->n());
  return s;
}

StabilizerResult Subspace::stabilizer() const {
  const int n = tower_->n();
  if (k() == 0 || k() == n) {
    // fixed by every shift
    return StabilizerResult{n, 1};
  }
  const int g = std::gcd(k(), n);
  std::vector<int> divs;
  for (int d = 1; d <= g; ++d)
    if (g % d == 0) divs.push_back(d);
  int t = 1;
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    if (shifted(tower_->subfield_generator(*it)) == *this) {
      t = *it;
      break;
    }
  }
#ifndef NDEBUG
  // the set of stabilizing subfield exponents must be exactly the divisors of t
  for (int d : divs) {
    const bool fixes = shifted(tower_->subfield_generator(d)) == *this;
    assert(fixes == (t % d == 0));
  }
#endif
  uint64_t qt = 1;
  for (int i = 0; i < t * tower_->e(); ++i) qt *= uint64_t(tower_->p());
  return StabilizerResult{t, tower_->group_order() / (qt - 1)};
}

size_t Subspace::hash() const {
  // FNV-1a over dimensions and basis bytes
  size_t h = 1469598103934665603ull;
  auto mix = [&h](uint8_t b) {
    h ^= b;
    h *= 1099511628211ull;
  };
  mix(uint8_t(basis_.rows()));
  mix(uint8_t(basis_.cols()));
  for (uint8_t b : basis_.data()) mix(b);
  return h;
}

std::string Subspace::to_dsl() const {
  std::string s = "span(";
  for (int i = 0; i < k(); ++i) {
    if (i) s += ", ";
    const FFElem x = tower_->from_fq_coords(basis_.row_vec(i));
    // render as a polynomial in z over F_p
    std::string term;
    bool first = true;
    for (int d = int(x.coeffs.size()) - 1; d >= 0; --d) {
      const int c = x.coeffs[d];
      if (!c) continue;
      if (!first) term += "+";
      first = false;
      if (c != 1 || d == 0) term += std::to_string(c);
      if (d > 0) {
        if (c != 1) term += "*";
        term += "z";
        if (d > 1) term += "^" + std::to_string(d);
      }
    }
    if (first) term = "0";
    s += term;
  }
  s += ")";
  return s;
}

LineSumResult line_sum(const FieldTower& tower,
                       const std::vector<std::pair<FFElem, int>>& terms) {
  FqMatrix rows(0, tower.n());
  int dim_if_direct = 0;
  for (const auto& [gen, s] : terms) {
    tower.require_same(gen);
    if (gen.is_zero()) throw ZeroGeneratorError("line generator must be nonzero");
    if (s < 1 || tower.n() % s != 0)
      throw InvalidSubfieldError("F_{q^" + std::to_string(s) + "} is not a subfield of F_{q^n}");
    dim_if_direct += s;
    // {1, g, ..., g^{s-1}} with g the subfield generator is an F_q-basis
    // of F_{q^s}
    const FFElem g = tower.subfield_generator(s);
    FFElem b = gen;
    for (int j = 0; j < s; ++j) {
      rows.append_row(tower.to_fq_coords(b));
      b = tower.mul(b, g);
    }
  }
  LineSumResult res;
  res.subspace = Subspace::from_coord_rows(tower, rows);
  res.direct = (res.subspace.k() == dim_if_direct);
  return res;
}

}  // namespace orbitdist
