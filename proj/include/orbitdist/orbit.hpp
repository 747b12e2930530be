#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "orbitdist/subspace.hpp"

namespace orbitdist {

// λ_i = number of orbit members αU (αU ≠ U) with dim(U ∩ αU) = i,
// together with the stabilizer data of the orbit.
struct IntersectionDistribution {
  std::vector<uint64_t> lambda;  // indexed 0..k-1
  int k = 0;
  int t = 1;
  uint64_t orbit_size = 0;
  std::optional<int> max_dim;  // largest i with λ_i > 0

  uint64_t sum() const {
    uint64_t s = 0;
    for (uint64_t v : lambda) s += v;
    return s;
  }
};

// δ_d = number of orbit members at subspace distance d from U; the
// reference space itself contributes δ_0 = 1.
struct DistanceDistribution {
  int k = 0;
  std::map<int, uint64_t> delta;       // keys 0, 2, ..., 2k
  std::optional<int> min_distance;     // 2k - 2l; empty for a one-element orbit
};

struct SweepOptions {
  uint64_t budget = uint64_t(1) << 26;
  int threads = 1;
  // called with (done, total) from the sweep; at most a few hundred times
  std::function<void(uint64_t, uint64_t)> progress;
};

// Computes λ by sweeping coset representatives z^j, 1 <= j < orbit_size,
// advancing the shifted basis incrementally (one multiplication by z per
// step). Packed GF(2)/GF(3) elimination kernels are used when the prime
// field is the coordinate field; a table-driven path covers the rest.
IntersectionDistribution intersection_distribution(const Subspace& u,
                                                   const SweepOptions& opts = {});

DistanceDistribution distance_distribution(const IntersectionDistribution& d);

// ordered codeword pairs per distance: orbit_size * δ_d
std::map<int, uint64_t> pair_counts(const IntersectionDistribution& d);

// S_{α,U} = U_α ∪ ⋃_{λ∈F_q} U_{(α+λ)^{-1}} with U_γ = {(γ+δ)U : δ∈F_q},
// collected as canonical subspaces.
struct SClass {
  FFElem representative;
  std::vector<Subspace> members;  // distinct canonical forms
};

SClass s_class(const FFElem& alpha, const Subspace& u);

// partitions O_i(U) = {αU : dim(U∩αU) = i} into S-classes
std::vector<SClass> s_partition(const Subspace& u, int i, const SweepOptions& opts = {});

// Number of distinct cyclic shifts of F_{q^{2t}} contained in U, via
// W = U ∩ β^{-1}U with β a generator of F_{q^{2t}}: x ∈ W iff x, βx ∈ U.
// dim W = 2tm and the count is (q^{2tm}-1)/(q^{2t}-1).
struct SubfieldShiftCount {
  int m = 0;
  uint64_t count = 0;
};

SubfieldShiftCount count_subfield_line_shifts(const Subspace& u, int t);

// orthogonal complement under <x,y> = Tr_{F_{q^n}/F_q}(xy)
Subspace trace_dual(const Subspace& u);

// full-length orbit with maximum intersection dimension <= 1
bool is_sidon(const Subspace& u, const SweepOptions& opts = {});

}  // namespace orbitdist
