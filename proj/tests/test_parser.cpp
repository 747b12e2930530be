#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "orbitdist/subspace.hpp"

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

TEST_CASE("span form") {
  const FieldTower& T = tower(3, 11);
  const Subspace u = parse_subspace("span(z^13, z^17, z^21, z^23)", T);
  CHECK(u.k() == 4);
  CHECK(u == Subspace::span(T, {T.z_power(13), T.z_power(17), T.z_power(21), T.z_power(23)}));
  CHECK(parse_subspace("span()", T).k() == 0);
  CHECK(parse_subspace("  span ( z ^ 13 , z^17 )  ", T).k() == 2);  // whitespace-insensitive
}

TEST_CASE("line terms") {
  const FieldTower& T = tower(3, 10);
  const Subspace u = parse_subspace("z^1708*F(3,2) + z^732*F(3,2) + z^91*F(3,1)", T);
  CHECK(u.k() == 5);
  const auto viaApi =
      line_sum(T, {{T.z_power(1708), 2}, {T.z_power(732), 2}, {T.z_power(91), 1}});
  CHECK(u == viaApi.subspace);

  CHECK(parse_subspace("F(3)", T).k() == 1);        // the base field as a line
  CHECK(parse_subspace("F(3,2)", T).k() == 2);      // a subfield
  CHECK(parse_subspace("F(3,1)", T) == parse_subspace("F(3)", T));
}

TEST_CASE("element expressions") {
  const FieldTower& T = tower(3, 10);
  CHECK(parse_element("z^4+z^3+1", T) ==
        T.add(T.add(T.z_power(4), T.z_power(3)), T.one()));
  CHECK(parse_element("2*z^5", T) == T.mul(T.fq_elem(2), T.z_power(5)));
  CHECK(parse_element("z", T) == T.z());
  CHECK(parse_element("z^0", T) == T.one());
  CHECK(parse_element("5", T) == T.fq_elem(2));   // coefficients mod p
  CHECK(parse_element("2*3", T) == T.zero());     // 6 mod 3
  CHECK(parse_element("z^5-z^5", T) == T.zero());
  // z-exponents reduce mod q^n - 1
  CHECK(parse_element("z^59049", T) == T.z_power(59049 % T.group_order()));
}

TEST_CASE("a compound elem binds to its line term as a whole") {
  const FieldTower& T = tower(3, 12);
  // (z^3+z+1) F_9: two-dimensional
  const Subspace u = parse_subspace("z^3+z+1*F(3,2)", T);
  CHECK(u.k() == 2);
  const FFElem g = parse_element("z^3+z+1", T);
  CHECK(u == line_sum(T, {{g, 2}}).subspace);
}

TEST_CASE("mixed span and line terms sum") {
  const FieldTower& T = tower(2, 14);
  const Subspace u = parse_subspace("span(z^11) + z^13*F(2,2)", T);
  CHECK(u.k() == 3);
  CHECK(u.contains(T.z_power(11)));
  CHECK(u.contains(T.z_power(13)));
}

TEST_CASE("syntax errors carry the offending position") {
  const FieldTower& T = tower(3, 10);
  auto pos_of = [&](const std::string& text) -> size_t {
    try {
      parse_subspace(text, T);
    } catch (const SyntaxError& e) {
      return e.position;
    }
    return size_t(-1);
  };
  CHECK(pos_of("span(z^") == 7);        // missing exponent
  CHECK(pos_of("span(z^13") == 9);      // missing ')'
  CHECK(pos_of("span(z^13,)") == 10);   // missing element
  CHECK(pos_of("spn(z)") == 0);         // unknown head is not an element
  CHECK(pos_of("z^13") == 4);           // bare elem is not a term
  CHECK(pos_of("z^13*G(3,2)") == 5);    // not F
  CHECK(pos_of("F(3,2") == 5);          // unterminated F
  CHECK(pos_of("F(,2)") == 2);          // missing q
  CHECK(pos_of("span(z^13) % 2") == 11);// stray character
  CHECK(pos_of("") == 0);               // empty input
  CHECK(pos_of("span(z^13)+") == 11);   // dangling '+'
}

TEST_CASE("semantic errors") {
  const FieldTower& T = tower(3, 10);
  CHECK_THROWS_AS(parse_subspace("z^5*F(2,2)", T), TowerMismatchError);   // wrong q
  CHECK_THROWS_AS(parse_subspace("z^5*F(3,3)", T), InvalidSubfieldError); // 3 does not divide 10
  CHECK_THROWS_AS(parse_subspace("z^5*F(3,11)", T), InvalidSubfieldError);
  CHECK_THROWS_AS(parse_subspace("0*F(3,2)", T), ZeroGeneratorError);
}

TEST_CASE("span of the zero element") {
  const FieldTower& T = tower(3, 10);
  CHECK(parse_subspace("span(0)", T).k() == 0);
  CHECK(parse_subspace("span(3)", T).k() == 0);  // 3 mod 3
}
