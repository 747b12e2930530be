#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orbitdist/orbit.hpp"
#include "orbitdist/subspace.hpp"

namespace orbitdist {

using uint128 = unsigned __int128;

std::string u128_to_string(uint128 v);

// number of k-dimensional subspaces of an n-dimensional space over F_q
uint128 gaussian_binomial(int n, int k, int q);

struct CheckParams {
  int k = 2;
  int t = 1;             // prescribed stabilizer exponent where a check needs one
  int samples = 20;
  uint64_t seed = 1;
  uint64_t budget = uint64_t(1) << 26;
  int threads = 1;
};

struct CheckReport {
  std::string check_name;
  int q = 0;
  int n = 0;
  CheckParams params;
  bool passed = false;
  std::vector<std::string> witnesses;  // counterexample descriptions; empty iff passed
  std::vector<int64_t> observed_multipliers;
  std::string note;  // e.g. hypotheses not satisfiable on this configuration
};

// Runs one named checker against sampled subspaces of the tower. Names:
//   lemma_2_1 lemma_3_1 prop_3_1 thm_3_2 thm_3_3 cor_2q lemma_3_4
//   lemma_3_5 lemma_3_7 thm_3_7 lemma_3_8 thm_3_9 cor_even_dim thm_3_11
//   lemma_7 thm_3_12 thm_3_13 thm_3_14 sum_rule oracle_equivalence
//   dual_distance sidon_equivalence
// Throws UnknownCheckError for anything else.
CheckReport run_check(const std::string& name, const FieldTower& tower,
                      const CheckParams& params);

const std::vector<std::string>& check_names();

// Literal transcription of the definition: canonicalize αU for every
// nonzero α, deduplicate, and tally intersection dimensions once per
// distinct subspace. Only for towers with q^n <= 4096.
IntersectionDistribution oracle_intersection_distribution(const Subspace& u);

// deterministic sampling helpers shared by the checkers and tests
class SubspaceSampler {
 public:
  SubspaceSampler(const FieldTower& tower, uint64_t seed)
      : T_(tower), rng_(seed) {}

  FFElem random_element();
  FFElem random_nonzero();
  FFElem random_outside_fq();                  // degree over F_q > 1
  FFElem random_degree2();                     // element of F_{q^2} \ F_q (n even)
  Subspace random_subspace(int k);             // any stabilizer
  Subspace random_full_length(int k);          // stabilizer exponent 1
  Subspace random_with_stabilizer(int k, int t);  // exponent exactly t

 private:
  const FieldTower& T_;
  std::mt19937_64 rng_;
};

// quadruple-free definitional test: every product of two nonzero elements
// of U factors uniquely over U up to F_q-scalars (q^k <= 1024)
bool definitional_sidon(const Subspace& u);

}  // namespace orbitdist
