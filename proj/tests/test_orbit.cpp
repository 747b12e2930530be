#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "orbitdist/orbit.hpp"
#include "orbitdist/verify.hpp"

using namespace orbitdist;

namespace {

const FieldTower& tower(int p, int n) {
  static std::map<std::pair<int, int>, std::unique_ptr<FieldTower>> cache;
  auto& slot = cache[{p, n}];
  if (!slot)
    slot = std::make_unique<FieldTower>(p, 1, n, *ConwayTable::bundled().find(p, n));
  return *slot;
}

}  // namespace

TEST_CASE("spread distribution: shifts of F_4 inside F_2^4") {
  const FieldTower& T = tower(2, 4);
  const Subspace u = parse_subspace("F(2,2)", T);
  const auto d = intersection_distribution(u);
  CHECK(d.t == 2);
  CHECK(d.orbit_size == 5);
  CHECK(d.lambda == std::vector<uint64_t>{4, 0});
  CHECK(d.max_dim == 0);

  const auto dd = distance_distribution(d);
  CHECK(dd.delta.at(0) == 1);
  CHECK(dd.delta.at(4) == 4);
  CHECK(dd.delta.at(2) == 0);
  CHECK(dd.min_distance == 4);

  const auto pc = pair_counts(d);
  CHECK(pc.at(4) == 20);  // 5 * 4 ordered pairs
  CHECK(pc.at(0) == 5);
}

TEST_CASE("dimension-5 subspace of F_3^10") {
  const FieldTower& T = tower(3, 10);
  const Subspace u = parse_subspace("z^1708*F(3,2) + z^732*F(3,2) + z^91*F(3,1)", T);
  REQUIRE(u.k() == 5);
  const auto d = intersection_distribution(u);
  CHECK(d.t == 1);
  CHECK(d.orbit_size == 29524);
  CHECK(d.lambda == std::vector<uint64_t>{17280, 11520, 720, 0, 3});
  CHECK(d.sum() == d.orbit_size - 1);
}

TEST_CASE("dimension-4 subspace of F_3^11") {
  const FieldTower& T = tower(3, 11);
  const Subspace u = parse_subspace("span(z^13, z^17, z^21, z^23)", T);
  const auto d = intersection_distribution(u);
  CHECK(d.t == 1);
  CHECK(d.orbit_size == 88573);
  CHECK(d.lambda == std::vector<uint64_t>{87048, 1512, 12, 0});

  const auto dd = distance_distribution(d);
  CHECK(dd.delta == std::map<int, uint64_t>{{0, 1}, {2, 0}, {4, 12}, {6, 1512}, {8, 87048}});
  CHECK(dd.min_distance == 4);
  CHECK(pair_counts(d).at(6) == uint64_t(88573) * 1512);
}

TEST_CASE("degenerate orbit over F_2^14") {
  const FieldTower& T = tower(2, 14);
  const Subspace u = parse_subspace("z^11*F(2,2)+z^13*F(2,2)+z^14*F(2,2)", T);
  REQUIRE(u.k() == 6);
  const auto d = intersection_distribution(u);
  CHECK(d.t == 2);
  CHECK(d.orbit_size == 5461);
  CHECK(d.lambda == std::vector<uint64_t>{5040, 0, 420, 0, 0, 0});
  // intersection dimensions are multiples of t
  for (int i = 0; i < d.k; ++i)
    if (i % d.t) CHECK(d.lambda[i] == 0);
}

TEST_CASE("degenerate orbit over F_3^12") {
  const FieldTower& T = tower(3, 12);
  const Subspace u = parse_subspace(
      "2*z^11+2*z^10+z^9+z^8+2*z^7+2*z^4+z+1*F(3,2) + "
      "z^11+2*z^8+2*z^7+z^6+2*z^5+2*z^4+z^3+2*z*F(3,2) + z^3+z+1*F(3,2)",
      T);
  REQUIRE(u.k() == 6);
  const auto d = intersection_distribution(u);
  CHECK(d.t == 2);
  CHECK(d.orbit_size == 66430);
  CHECK(d.lambda == std::vector<uint64_t>{58320, 0, 8100, 0, 9, 0});

  // it contains exactly one shift of F_{3^4}
  const auto sc = count_subfield_line_shifts(u, 2);
  CHECK(sc.m == 1);
  CHECK(sc.count == 1);
}

TEST_CASE("budget guard") {
  const FieldTower& T = tower(3, 11);
  const Subspace u = parse_subspace("span(z^13, z^17)", T);
  SweepOptions opts;
  opts.budget = 1000;
  CHECK_THROWS_AS(intersection_distribution(u, opts), BudgetExceededError);
  try {
    intersection_distribution(u, opts);
  } catch (const BudgetExceededError& e) {
    CHECK(e.required_orbit_size == 88573);
  }
}

TEST_CASE("thread count does not change the distribution") {
  const FieldTower& T = tower(3, 10);
  const Subspace u = parse_subspace("z^1708*F(3,2)+z^732*F(3,2)+z^91*F(3,1)", T);
  SweepOptions one, four, seven;
  one.threads = 1;
  four.threads = 4;
  seven.threads = 7;
  const auto d1 = intersection_distribution(u, one);
  const auto d4 = intersection_distribution(u, four);
  const auto d7 = intersection_distribution(u, seven);
  CHECK(d1.lambda == d4.lambda);
  CHECK(d1.lambda == d7.lambda);
}

TEST_CASE("generic engine agrees with the packed engines") {
  // q = 4 and q = 5 exercise the table-driven sweep
  {
    const FieldTower T(2, 2, 3, *ConwayTable::bundled().find(2, 6));
    SubspaceSampler s(T, 2);
    for (int i = 0; i < 10; ++i) {
      const Subspace u = s.random_subspace(2);
      const auto fast = intersection_distribution(u);
      const auto slow = oracle_intersection_distribution(u);
      CHECK(fast.lambda == slow.lambda);
      CHECK(fast.t == slow.t);
    }
  }
  {
    const FieldTower& T = tower(5, 4);
    SubspaceSampler s(T, 3);
    for (int i = 0; i < 10; ++i) {
      const Subspace u = s.random_subspace(2);
      const auto fast = intersection_distribution(u);
      const auto slow = oracle_intersection_distribution(u);
      CHECK(fast.lambda == slow.lambda);
    }
  }
}

TEST_CASE("S-classes of the F_3^11 orbit") {
  const FieldTower& T = tower(3, 11);
  const Subspace u = parse_subspace("span(z^13, z^17, z^21, z^23)", T);

  // O_2 is a single class of size q(q+1) = 12
  const auto classes = s_partition(u, 2);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].members.size() == 12);
  // every member intersects U in dimension 2
  for (const Subspace& v : classes[0].members)
    CHECK(u.intersect(v).k() == 2);

  // dimension 3 never occurs
  CHECK(s_partition(u, 3).empty());
}

TEST_CASE("S-class of the degree-2 representative over F_3^10") {
  const FieldTower& T = tower(3, 10);
  const Subspace u = parse_subspace("z^1708*F(3,2)+z^732*F(3,2)+z^91*F(3,1)", T);
  const auto classes = s_partition(u, 4);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].members.size() == 3);  // q, degree-2 representative
  CHECK(T.degree_over(classes[0].representative, 1) == 2);
}

TEST_CASE("S-class sizes for generic representatives") {
  const FieldTower& T = tower(3, 5);
  SubspaceSampler s(T, 4);
  const Subspace u = s.random_full_length(2);
  for (int i = 0; i < 5; ++i) {
    const FFElem alpha = s.random_outside_fq();
    const SClass cls = s_class(alpha, u);
    CHECK(cls.members.size() == 12);  // n odd: no degree-2 elements
  }
}

TEST_CASE("s_class rejects invalid inputs") {
  const FieldTower& T = tower(2, 14);
  const Subspace degenerate =
      parse_subspace("z^11*F(2,2)+z^13*F(2,2)+z^14*F(2,2)", T);
  CHECK_THROWS_AS(s_class(T.z(), degenerate), NotFullLengthError);
  const Subspace full_len = parse_subspace("span(z, z^3)", T);
  REQUIRE(full_len.stabilizer().t == 1);
  CHECK_THROWS_AS(s_class(T.one(), full_len), AlphaInBaseFieldError);
}

TEST_CASE("subfield shift counting via the membership oracle") {
  // brute force count of {xF_{q^2} ⊆ U} on small towers
  for (auto [p, n] : {std::pair{2, 6}, {3, 4}}) {
    const FieldTower& T = tower(p, n);
    SubspaceSampler s(T, 7);
    const FFElem g2 = T.subfield_generator(2);
    for (int iter = 0; iter < 20; ++iter) {
      const Subspace u = s.random_subspace(2 + int(iter % 2));
      const auto sc = count_subfield_line_shifts(u, 1);
      std::unordered_set<Subspace, SubspaceHash> shifts;
      for (const FFElem& x : u.elements()) {
        if (x.is_zero()) continue;
        if (u.contains(T.mul(g2, x))) shifts.insert(Subspace::span(T, {x, T.mul(g2, x)}));
      }
      CHECK(shifts.size() == sc.count);
    }
  }
  // a subfield contains exactly one shift of itself
  const FieldTower& T = tower(2, 4);
  const auto sc = count_subfield_line_shifts(parse_subspace("F(2,2)", T), 1);
  CHECK(sc.m == 1);
  CHECK(sc.count == 1);
  CHECK_THROWS_AS(count_subfield_line_shifts(parse_subspace("F(2,2)", tower(2, 6)), 2),
                  InvalidSubfieldError);
}

TEST_CASE("trace dual") {
  const FieldTower& T = tower(2, 6);
  CHECK(trace_dual(Subspace::zero(T)).k() == 6);
  CHECK(trace_dual(Subspace::full(T)).k() == 0);

  SubspaceSampler s(T, 8);
  for (int iter = 0; iter < 20; ++iter) {
    const Subspace u = s.random_subspace(1 + int(iter % 3));
    const Subspace d = trace_dual(u);
    CHECK(d.k() == 6 - u.k());
    CHECK(trace_dual(d) == u);
    // the pairing vanishes on U x U^perp
    for (const FFElem& x : u.basis_elements())
      for (const FFElem& y : d.basis_elements())
        CHECK(T.trace_to_fq(T.mul(x, y)) == 0);
  }
}

TEST_CASE("dual orbit has the same nontrivial distance distribution") {
  const FieldTower& T = tower(2, 6);
  SubspaceSampler s(T, 9);
  for (int iter = 0; iter < 10; ++iter) {
    const Subspace u = s.random_subspace(2);
    const auto du = distance_distribution(intersection_distribution(u));
    const auto dv = distance_distribution(intersection_distribution(trace_dual(u)));
    std::map<int, uint64_t> nu, nv;
    for (auto [dist, c] : du.delta)
      if (dist > 0 && c) nu[dist] = c;
    for (auto [dist, c] : dv.delta)
      if (dist > 0 && c) nv[dist] = c;
    CHECK(nu == nv);
  }
}

TEST_CASE("sidon detection") {
  {
    // an embedded subfield generates a degenerate orbit: never Sidon
    const FieldTower& T = tower(2, 4);
    CHECK(!is_sidon(parse_subspace("F(2,2)", T)));
  }
  {
    // max intersection dimension 4 > 1
    const FieldTower& T = tower(3, 10);
    CHECK(!is_sidon(parse_subspace("z^1708*F(3,2)+z^732*F(3,2)+z^91*F(3,1)", T)));
  }
  {
    // agreement with the quadruple-product definition
    const FieldTower& T = tower(2, 6);
    SubspaceSampler s(T, 10);
    for (int iter = 0; iter < 30; ++iter) {
      const Subspace u = s.random_subspace(2);
      CHECK(is_sidon(u) == definitional_sidon(u));
    }
  }
}
