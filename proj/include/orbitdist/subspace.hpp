#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitdist/fqlinalg.hpp"
#include "orbitdist/gf.hpp"

namespace orbitdist {

struct StabilizerResult {
  int t = 1;                // Stab(U) ∪ {0} = F_{q^t}
  uint64_t orbit_size = 0;  // (q^n - 1)/(q^t - 1)
};

// An F_q-subspace of F_{q^n}, held as its canonical basis: the reduced
// row echelon form of the F_q-coordinate rows of any generating set.
// Canonical-basis equality is set equality, so subspaces can be compared
// and hashed in O(1) per byte.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const FieldTower& tower);
  static Subspace full(const FieldTower& tower);
  static Subspace span(const FieldTower& tower, const std::vector<FFElem>& elems);
  // rows are F_q coordinates; canonicalized on entry
  static Subspace from_coord_rows(const FieldTower& tower, const FqMatrix& rows);

  const FieldTower& tower() const { return *tower_; }
  int k() const { return basis_.rows(); }
  int n() const { return tower_->n(); }
  const FqMatrix& basis() const { return basis_; }
  std::vector<FFElem> basis_elements() const;

  bool contains(const FFElem& x) const;
  bool contains_subspace(const Subspace& other) const;
  std::vector<FFElem> elements() const;  // all q^k members (small spaces only)

  Subspace shifted(const FFElem& a) const;  // aU; ZeroShiftError on a = 0
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  // Walks the divisors of gcd(k, n) in decreasing order and returns the
  // first d whose subfield generator fixes U.
  StabilizerResult stabilizer() const;

  bool operator==(const Subspace& o) const {
    return tower_ == o.tower_ && basis_ == o.basis_;
  }
  size_t hash() const;

  std::string to_dsl() const;  // "span(...)" form that reparses to *this

 private:
  const FieldTower* tower_ = nullptr;
  FqMatrix basis_;
};

struct SubspaceHash {
  size_t operator()(const Subspace& s) const { return s.hash(); }
};

struct LineSumResult {
  Subspace subspace;
  bool direct = false;  // dimension equals the sum of the term dimensions
};

// Σ e_i · F_{q^{s_i}} as an F_q-space. Each s_i must divide n and each
// e_i must be nonzero.
LineSumResult line_sum(const FieldTower& tower,
                       const std::vector<std::pair<FFElem, int>>& terms);

// Parses the subspace DSL:
//   subspace := term ("+" term)*
//   term     := "span" "(" [elem ("," elem)*] ")"
//             | elem "*" "F" "(" int ["," int] ")"
//             | "F" "(" int ["," int] ")"
//   elem     := mono (("+"|"-") mono)*
//   mono     := [int "*"] ("z" ["^" int] | int)
// Whitespace-insensitive; coefficients mod p; z-exponents mod q^n - 1.
// F(q) is the base field, F(q,s) the subfield F_{q^s}; the first integer
// must equal the tower's q.
Subspace parse_subspace(std::string_view text, const FieldTower& tower);

// element expression parser used by the DSL grammar's elem rule
FFElem parse_element(std::string_view text, const FieldTower& tower);

}  // namespace orbitdist
