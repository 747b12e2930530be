#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbitdist/errors.hpp"
#include "orbitdist/fqlinalg.hpp"

namespace orbitdist {

class FieldTower;

// Element of F_{q^n}: coefficient vector over the prime field F_p of a
// polynomial in the primitive element z, degree < e*n.
struct FFElem {
  const FieldTower* tower = nullptr;
  std::vector<uint8_t> coeffs;

  bool is_zero() const {
    for (uint8_t c : coeffs)
      if (c) return false;
    return true;
  }
  bool operator==(const FFElem&) const = default;
};

// Lookup of Conway polynomials from a text table, one record per line:
//   p degree c_0 c_1 ... c_d
// with ascending coefficients in [0, p). Lines starting with '#' are
// comments.
class ConwayTable {
 public:
  static ConwayTable parse(const std::string& text);
  static ConwayTable load_file(const std::string& path);
  static const ConwayTable& bundled();

  // ascending coefficients incl. leading 1, or nullptr if absent
  const std::vector<uint8_t>* find(int p, int degree) const;

 private:
  std::map<std::pair<int, int>, std::vector<uint8_t>> polys_;
};

// The field chain F_p ⊂ F_q ⊂ F_{q^n}, q = p^e, presented as
// F_p[x]/(modulus) with z = class of x. The modulus must be primitive, so
// z generates the multiplicative group; F_q sits inside as the set
// spanned by powers of w = z^((q^n-1)/(q-1)).
//
// Immutable after construction; safe to share across threads.
class FieldTower {
 public:
  // Throws DegreeMismatchError / NotIrreducibleError / NotPrimitiveError.
  FieldTower(int p, int e, int n, std::vector<uint8_t> modulus);

  static FieldTower from_conway(int p, int e, int n, const ConwayTable& table);

  int p() const { return p_; }
  int e() const { return e_; }
  int n() const { return n_; }
  int q() const { return q_; }
  int ext_degree() const { return m_; }           // e*n
  uint64_t order() const { return order_; }       // q^n
  uint64_t group_order() const { return order_ - 1; }
  const std::vector<uint8_t>& modulus() const { return modulus_; }
  const FqArith& fq() const { return fq_; }

  FFElem zero() const;
  FFElem one() const;
  FFElem z() const;
  FFElem from_coeffs(std::vector<uint8_t> coeffs) const;
  FFElem z_power(uint64_t j) const;

  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  FFElem inv(const FFElem& a) const;  // DivisionByZeroError on 0
  FFElem pow(const FFElem& a, uint64_t k) const;

  // degree of a over the subfield F_{q^s}, s | n: the least d with
  // a^((q^s)^d) = a
  int degree_over(const FFElem& a, int s) const;

  // z^((q^n-1)/(q^s-1)): a primitive element of F_{q^s}, s | n
  FFElem subfield_generator(int s) const;

  // coordinates of a in the F_q-basis {1, z, ..., z^{n-1}}, entries are
  // F_q digits in [0, q)
  std::vector<uint8_t> to_fq_coords(const FFElem& a) const;
  FFElem from_fq_coords(const std::vector<uint8_t>& coords) const;
  FFElem fq_elem(uint8_t digit) const;  // embed an F_q scalar

  // Tr_{F_{q^n}/F_q}(a) as an F_q digit
  uint8_t trace_to_fq(const FFElem& a) const;

  uint64_t order_of(const FFElem& a) const;  // multiplicative order, a != 0

  void require_same(const FFElem& a) const {
    if (a.tower != this) throw TowerMismatchError("element belongs to a different tower");
  }

  std::string describe_modulus() const;  // "c0,c1,...,cd"

  FieldTower(const FieldTower&) = delete;
  FieldTower& operator=(const FieldTower&) = delete;
  FieldTower(FieldTower&&) = delete;
  FieldTower& operator=(FieldTower&&) = delete;

 private:
  int p_, e_, n_, q_, m_;
  uint64_t order_;
  std::vector<uint8_t> modulus_;   // ascending, degree m_, monic
  std::vector<uint8_t> zn_red_;    // z^m reduced: -(modulus minus leading term)
  FqArith fp_;                     // prime-field scalar tables
  FqArith fq_;                     // F_q scalar tables
  // change of basis between prime-field coefficients and the tower basis
  // {z^i w^j}; identity when e == 1
  FqMatrix basis_to_std_;   // columns are z^i w^j in standard coefficients
  FqMatrix std_to_basis_;   // its inverse
  std::vector<FFElem> fq_embed_;  // digit -> field element

  std::vector<uint8_t> raw_mul(const std::vector<uint8_t>& a,
                               const std::vector<uint8_t>& b) const;
  FFElem make(std::vector<uint8_t> c) const;
  void build_coord_matrices();
  void build_fq_tables();
};

// distinct prime factors, trial division (inputs fit the tower sizes)
std::vector<uint64_t> prime_factors(uint64_t x);

}  // namespace orbitdist
