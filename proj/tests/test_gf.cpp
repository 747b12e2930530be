#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "orbitdist/gf.hpp"

using namespace orbitdist;

TEST_CASE("tower construction over F_2^4") {
  FieldTower T(2, 1, 4, {1, 1, 0, 0, 1});  // x^4 + x + 1
  CHECK(T.q() == 2);
  CHECK(T.order() == 16);
  CHECK(T.order_of(T.z()) == 15);
  CHECK(T.pow(T.z(), 15) == T.one());
  CHECK(T.pow(T.z(), 5) != T.one());
}

TEST_CASE("reducible modulus is rejected") {
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2
  CHECK_THROWS_AS(FieldTower(2, 1, 4, {1, 0, 1, 0, 1}), NotIrreducibleError);
}

TEST_CASE("irreducible but imprimitive modulus is rejected") {
  // x^4 + x^3 + x^2 + x + 1 divides x^5 - 1, so z has order 5
  CHECK_THROWS_AS(FieldTower(2, 1, 4, {1, 1, 1, 1, 1}), NotPrimitiveError);
}

TEST_CASE("degree validation") {
  CHECK_THROWS_AS(FieldTower(2, 1, 4, {1, 1, 1}), DegreeMismatchError);
  CHECK_THROWS_AS(FieldTower(2, 1, 4, {1, 1, 0, 0, 1, 0}), DegreeMismatchError);
  CHECK_THROWS_AS(FieldTower(4, 1, 2, {1, 1, 1}), DegreeMismatchError);  // p not prime
}

TEST_CASE("conway table lookups") {
  const ConwayTable& t = ConwayTable::bundled();
  REQUIRE(t.find(2, 4) != nullptr);
  CHECK(*t.find(2, 4) == std::vector<uint8_t>{1, 1, 0, 0, 1});
  CHECK(t.find(2, 99) == nullptr);
  CHECK_THROWS_AS(ConwayTable::parse("2 3 1 1\n"), Error);   // wrong count
  CHECK_THROWS_AS(ConwayTable::parse("3 2 5 0 1\n"), Error); // coeff out of range
}

TEST_CASE("field inverse and exponent laws") {
  FieldTower T = FieldTower::from_conway(3, 1, 5, ConwayTable::bundled());
  CHECK(T.mul(T.inv(T.z()), T.z()) == T.one());
  CHECK(T.pow(T.z(), T.group_order()) == T.one());
  CHECK_THROWS_AS(T.inv(T.zero()), DivisionByZeroError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const FFElem a = T.z_power(rng() % T.group_order());
    const FFElem b = T.z_power(rng() % T.group_order());
    CHECK(T.mul(a, b) == T.mul(b, a));
    CHECK(T.mul(T.inv(a), a) == T.one());
    CHECK(T.add(a, T.neg(a)) == T.zero());
  }
}

TEST_CASE("subfield structure of F_3^10 matches the worked values") {
  FieldTower T = FieldTower::from_conway(3, 1, 10, ConwayTable::bundled());
  const FFElem x = T.subfield_generator(2);
  CHECK(x == T.z_power(7381));
  CHECK(T.degree_over(x, 1) == 2);
  CHECK(T.order_of(x) == 8);
  CHECK(T.pow(T.z(), 7381) == x);
}

TEST_CASE("subfield generator of F_4 inside F_2^14") {
  FieldTower T = FieldTower::from_conway(2, 1, 14, ConwayTable::bundled());
  const FFElem g = T.subfield_generator(2);
  CHECK(g == T.z_power(5461));
  CHECK(T.mul(g, g) == T.z_power(10922));
  CHECK(T.mul(T.mul(g, g), g) == T.one());  // F_4^* = {1, g, g^2}
  CHECK_THROWS_AS(T.subfield_generator(3), InvalidSubfieldError);
}

TEST_CASE("degree_over") {
  FieldTower T = FieldTower::from_conway(2, 1, 6, ConwayTable::bundled());
  CHECK(T.degree_over(T.one(), 1) == 1);
  CHECK(T.degree_over(T.zero(), 1) == 1);
  CHECK(T.degree_over(T.z(), 1) == 6);
  CHECK(T.degree_over(T.subfield_generator(2), 1) == 2);
  CHECK(T.degree_over(T.subfield_generator(3), 1) == 3);
  CHECK(T.degree_over(T.subfield_generator(2), 2) == 1);
  CHECK(T.degree_over(T.z(), 2) == 3);
  CHECK_THROWS_AS(T.degree_over(T.z(), 4), InvalidSubfieldError);

  // d * s divides n for every element
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const FFElem a = T.z_power(rng() % T.group_order());
    for (int s : {1, 2, 3, 6}) CHECK((T.n() / s) % T.degree_over(a, s) == 0);
  }
}

TEST_CASE("count of degree-2 elements") {
  // even n: exactly q^2 - q of them; odd n: none
  for (auto [p, n] : {std::pair{2, 4}, {3, 4}, {2, 6}}) {
    FieldTower T = FieldTower::from_conway(p, 1, n, ConwayTable::bundled());
    uint64_t cnt = 0;
    FFElem x = T.one();
    for (uint64_t j = 0; j + 1 < T.order(); ++j) {
      if (T.degree_over(x, 1) == 2) ++cnt;
      x = T.mul(x, T.z());
    }
    CHECK(cnt == uint64_t(p) * p - p);
  }
  FieldTower T = FieldTower::from_conway(3, 1, 5, ConwayTable::bundled());
  uint64_t cnt = 0;
  FFElem x = T.one();
  for (uint64_t j = 0; j + 1 < T.order(); ++j) {
    if (T.degree_over(x, 1) == 2) ++cnt;
    x = T.mul(x, T.z());
  }
  CHECK(cnt == 0);
}

TEST_CASE("fq coordinates round trip and are F_q-linear") {
  for (auto [p, e, n] : {std::tuple{3, 1, 5}, {2, 2, 3}, {2, 2, 5}, {5, 1, 4}}) {
    FieldTower T = FieldTower::from_conway(p, e, n, ConwayTable::bundled());
    CHECK(T.to_fq_coords(T.zero()) == std::vector<uint8_t>(n, 0));
    // z^2 is the third basis vector over F_q
    if (n > 2) {
      std::vector<uint8_t> unit(n, 0);
      unit[2] = 1;
      CHECK(T.to_fq_coords(T.mul(T.z(), T.z())) == unit);
    }
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
      const FFElem a = T.z_power(rng() % T.group_order());
      CHECK(T.from_fq_coords(T.to_fq_coords(a)) == a);
    }
    // additivity and scalar compatibility
    for (int i = 0; i < 200; ++i) {
      const FFElem a = T.z_power(rng() % T.group_order());
      const FFElem b = T.z_power(rng() % T.group_order());
      const auto ca = T.to_fq_coords(a);
      const auto cb = T.to_fq_coords(b);
      const auto cs = T.to_fq_coords(T.add(a, b));
      for (int j = 0; j < n; ++j) CHECK(cs[j] == T.fq().add(ca[j], cb[j]));
      const uint8_t s = uint8_t(rng() % T.q());
      const auto cm = T.to_fq_coords(T.mul(T.fq_elem(s), a));
      for (int j = 0; j < n; ++j) CHECK(cm[j] == T.fq().mul(s, ca[j]));
    }
  }
}

TEST_CASE("F_q scalar tables match the embedded subfield") {
  FieldTower T = FieldTower::from_conway(2, 2, 3, ConwayTable::bundled());  // q = 4
  CHECK(T.q() == 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const FFElem ea = T.fq_elem(uint8_t(a));
      const FFElem eb = T.fq_elem(uint8_t(b));
      CHECK(T.fq_elem(T.fq().mul(uint8_t(a), uint8_t(b))) == T.mul(ea, eb));
      CHECK(T.fq_elem(T.fq().add(uint8_t(a), uint8_t(b))) == T.add(ea, eb));
    }
    if (a) {
      CHECK(T.fq().mul(uint8_t(a), T.fq().inv(uint8_t(a))) == 1);
    }
  }
  // the subfield embedding is multiplicatively closed of order q-1
  const FFElem w = T.fq_elem(2);
  CHECK(T.degree_over(w, 1) == 1);
}

TEST_CASE("trace maps onto F_q") {
  for (auto [p, e, n] : {std::tuple{2, 1, 6}, {3, 1, 4}, {2, 2, 3}}) {
    FieldTower T = FieldTower::from_conway(p, e, n, ConwayTable::bundled());
    std::mt19937_64 rng(5);
    // additivity of the trace and nontriviality
    bool nonzero_seen = false;
    for (int i = 0; i < 200; ++i) {
      const FFElem a = T.z_power(rng() % T.group_order());
      const FFElem b = T.z_power(rng() % T.group_order());
      const uint8_t ta = T.trace_to_fq(a);
      const uint8_t tb = T.trace_to_fq(b);
      CHECK(T.trace_to_fq(T.add(a, b)) == T.fq().add(ta, tb));
      if (ta) nonzero_seen = true;
    }
    CHECK(nonzero_seen);
  }
}
