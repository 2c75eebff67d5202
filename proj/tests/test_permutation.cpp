#include <doctest.h>

#include "gassmann/errors.hpp"
#include "gassmann/permutation.hpp"

using namespace gassmann;

TEST_CASE("parse_cycles identity forms") {
  CHECK(parse_cycles("()", 3) == identity_perm(3));
  CHECK(parse_cycles(" ( ) ", 5) == identity_perm(5));
}

TEST_CASE("parse_cycles basic cycle") {
  Permutation p = parse_cycles("(1 2 3)", 3);
  CHECK(p.images == std::vector<std::uint32_t>{1, 2, 0});
  CHECK(parse_cycles("(1,2,3)", 3) == p);  // commas tolerated inside cycles
}

TEST_CASE("parse_cycles multi-cycle and whitespace") {
  Permutation p = parse_cycles(" (1 2) (4 5) ", 5);
  CHECK(p.images == std::vector<std::uint32_t>{1, 0, 2, 4, 3});
}

TEST_CASE("parse_cycles error paths") {
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), MalformedCycle);
  CHECK_THROWS_AS(parse_cycles("(1 x)", 3), MalformedCycle);
  CHECK_THROWS_AS(parse_cycles("1 2)", 3), MalformedCycle);
  CHECK_THROWS_AS(parse_cycles("", 3), MalformedCycle);
  CHECK_THROWS_AS(parse_cycles("(1 4)", 3), PointOutOfRange);
  CHECK_THROWS_AS(parse_cycles("(0 1)", 3), PointOutOfRange);
  CHECK_THROWS_AS(parse_cycles("(1 2)(1 3)", 3), RepeatedPoint);
  CHECK_THROWS_AS(parse_cycles("(1 1)", 3), RepeatedPoint);
}

TEST_CASE("compose convention: right factor first") {
  Permutation p{{1, 2, 0}}, q{{1, 0, 2}};
  // (p*q)(x) = p(q(x)) evaluated pointwise by hand
  CHECK(compose(p, q).images == std::vector<std::uint32_t>{2, 1, 0});
  CHECK(compose(identity_perm(3), q) == q);
  CHECK(compose(p, inverse(p)) == identity_perm(3));
  CHECK(compose(inverse(p), p) == identity_perm(3));
  CHECK_THROWS_AS(compose(p, identity_perm(4)), DegreeMismatch);
}

TEST_CASE("cycle_string round trip") {
  CHECK(cycle_string(identity_perm(4)) == "()");
  CHECK(cycle_string(parse_cycles("(1 2 3)(4 5)", 6)) == "(1 2 3)(4 5)");
  // cycles are re-anchored at their smallest point
  CHECK(cycle_string(parse_cycles("(3 1 2)", 3)) == "(1 2 3)");
  for (const char* text : {"(1 7 3)(2 5)", "(2 4 6)", "()"}) {
    Permutation p = parse_cycles(text, 7);
    CHECK(parse_cycles(cycle_string(p), 7) == p);
  }
}

TEST_CASE("parse_cycle_list splits on top-level commas only") {
  auto perms = parse_cycle_list("(1 2)(3 4), (1 3), (1,2,3)", 4);
  REQUIRE(perms.size() == 3);
  CHECK(perms[0] == parse_cycles("(1 2)(3 4)", 4));
  CHECK(perms[1] == parse_cycles("(1 3)", 4));
  CHECK(perms[2] == parse_cycles("(1 2 3)", 4));
}
