#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <unordered_set>

#include "doctest.h"
#include "orbitdist/subspace.hpp"

using namespace orbitdist;

namespace {

const FieldTower& tower(int p, int e, int n) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<FieldTower>> cache;
  auto& slot = cache[{p, e, n}];
  if (!slot) slot = std::make_unique<FieldTower>([&] {
    const auto* f = ConwayTable::bundled().find(p, e * n);
    REQUIRE(f != nullptr);
    return FieldTower(p, e, n, *f);
  }());
  return *slot;
}

}  // namespace

TEST_CASE("span basics") {
  const FieldTower& T = tower(2, 1, 4);
  CHECK(Subspace::span(T, {}).k() == 0);
  CHECK(Subspace::zero(T).k() == 0);
  CHECK(Subspace::full(T).k() == 4);

  // the subfield F_4 is 2-dimensional over F_2
  std::vector<FFElem> f4;
  const FFElem g = T.subfield_generator(2);
  f4.push_back(T.one());
  f4.push_back(g);
  f4.push_back(T.mul(g, g));
  CHECK(Subspace::span(T, f4).k() == 2);
}

TEST_CASE("the dimension-4 span over F_3^11") {
  const FieldTower& T = tower(3, 1, 11);
  const Subspace u = Subspace::span(
      T, {T.z_power(13), T.z_power(17), T.z_power(21), T.z_power(23)});
  CHECK(u.k() == 4);
  const StabilizerResult st = u.stabilizer();
  CHECK(st.t == 1);
  CHECK(st.orbit_size == 88573);
}

TEST_CASE("line sums") {
  {
    const FieldTower& T = tower(3, 1, 10);
    const auto r = line_sum(T, {{T.z_power(1708), 2}, {T.z_power(732), 2}, {T.z_power(91), 1}});
    CHECK(r.subspace.k() == 5);
    CHECK(r.direct);
  }
  {
    const FieldTower& T = tower(2, 1, 14);
    const auto r = line_sum(T, {{T.z_power(11), 2}, {T.z_power(13), 2}, {T.z_power(14), 2}});
    CHECK(r.subspace.k() == 6);
    CHECK(r.direct);
  }
  {
    const FieldTower& T = tower(2, 1, 4);
    const auto r = line_sum(T, {{T.one(), 1}});
    CHECK(r.subspace.k() == 1);
    CHECK(r.subspace.contains(T.one()));
    // overlapping terms are not direct
    const auto r2 = line_sum(T, {{T.one(), 2}, {T.subfield_generator(2), 2}});
    CHECK(r2.subspace.k() == 2);
    CHECK(!r2.direct);
    CHECK_THROWS_AS(line_sum(T, {{T.zero(), 1}}), ZeroGeneratorError);
    CHECK_THROWS_AS(line_sum(T, {{T.one(), 3}}), InvalidSubfieldError);
  }
}

TEST_CASE("shift laws") {
  const FieldTower& T = tower(3, 1, 10);
  const Subspace u =
      line_sum(T, {{T.z_power(1708), 2}, {T.z_power(732), 2}, {T.z_power(91), 1}}).subspace;
  CHECK(u.shifted(T.one()) == u);
  for (int s = 1; s < 3; ++s) CHECK(u.shifted(T.fq_elem(uint8_t(s))) == u);
  CHECK(u.shifted(T.z()) != u);  // the stabilizer is only F_3^*
  CHECK(u.shifted(T.z()).k() == u.k());
  CHECK_THROWS_AS(u.shifted(T.zero()), ZeroShiftError);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const FFElem a = T.z_power(rng() % T.group_order());
    const FFElem b = T.z_power(rng() % T.group_order());
    CHECK(u.shifted(a).shifted(b) == u.shifted(T.mul(a, b)));
  }
}

TEST_CASE("stabilizers") {
  {
    // a subfield is stabilized by its own nonzero elements
    const FieldTower& T = tower(2, 1, 4);
    const Subspace u = line_sum(T, {{T.one(), 2}}).subspace;
    const auto st = u.stabilizer();
    CHECK(st.t == 2);
    CHECK(st.orbit_size == 5);
  }
  {
    const FieldTower& T = tower(2, 1, 14);
    const Subspace u =
        line_sum(T, {{T.z_power(11), 2}, {T.z_power(13), 2}, {T.z_power(14), 2}}).subspace;
    const auto st = u.stabilizer();
    CHECK(st.t == 2);
    CHECK(st.orbit_size == 5461);
  }
}

TEST_CASE("orbit size equals the number of distinct canonical forms") {
  const FieldTower& T = tower(2, 1, 6);
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 10; ++iter) {
    std::vector<FFElem> gens;
    for (int i = 0; i < 2 + int(rng() % 2); ++i) gens.push_back(T.z_power(rng() % 63));
    const Subspace u = Subspace::span(T, gens);
    if (u.k() == 0) continue;
    std::unordered_set<Subspace, SubspaceHash> forms;
    for (uint64_t j = 0; j < T.group_order(); ++j) forms.insert(u.shifted(T.z_power(j)));
    CHECK(forms.size() == u.stabilizer().orbit_size);
  }
}

TEST_CASE("the stabilizer plus zero is closed under addition") {
  const FieldTower& T = tower(2, 1, 6);
  const Subspace u = line_sum(T, {{T.z_power(3), 3}}).subspace;  // F_8 shifted
  std::vector<FFElem> stab;
  stab.push_back(T.zero());
  for (uint64_t j = 0; j < T.group_order(); ++j) {
    const FFElem a = T.z_power(j);
    if (u.shifted(a) == u) stab.push_back(a);
  }
  CHECK(stab.size() == 8);  // F_{2^3}
  for (const auto& a : stab)
    for (const auto& b : stab) {
      const FFElem s = T.add(a, b);
      bool found = false;
      for (const auto& c : stab)
        if (c == s) { found = true; break; }
      CHECK(found);
    }
}

TEST_CASE("canonical equality is set equality") {
  const FieldTower& T = tower(3, 1, 4);
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 50; ++iter) {
    const Subspace u = Subspace::span(T, {T.z_power(rng() % 80), T.z_power(rng() % 80)});
    const Subspace v = u.shifted(T.z_power(rng() % 80));
    const bool eq = (u == v);
    // cross membership check
    bool contained = true;
    for (const FFElem& x : u.elements())
      if (!v.contains(x)) { contained = false; break; }
    CHECK(eq == (contained && u.k() == v.k()));
  }
}

TEST_CASE("sum and intersect") {
  const FieldTower& T = tower(2, 1, 6);
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 50; ++iter) {
    const Subspace a = Subspace::span(T, {T.z_power(rng() % 63), T.z_power(rng() % 63)});
    const Subspace b = Subspace::span(T, {T.z_power(rng() % 63), T.z_power(rng() % 63)});
    const Subspace s = a.sum(b);
    const Subspace i = a.intersect(b);
    CHECK(s.contains_subspace(a));
    CHECK(s.contains_subspace(b));
    CHECK(a.contains_subspace(i));
    CHECK(b.contains_subspace(i));
    CHECK(s.k() + i.k() == a.k() + b.k());
  }
}

TEST_CASE("to_dsl round trips") {
  const FieldTower& T = tower(3, 1, 10);
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<FFElem> gens;
    for (int i = 0; i < 1 + int(rng() % 3); ++i) gens.push_back(T.z_power(rng() % 100));
    const Subspace u = Subspace::span(T, gens);
    CHECK(parse_subspace(u.to_dsl(), T) == u);
  }
}
