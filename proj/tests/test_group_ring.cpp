#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "magnus/errors.hpp"
#include "magnus/group_ring.hpp"
#include "test_util.hpp"

using namespace magnus;
using testutil::random_elem;
using testutil::random_monomial;

namespace {
GroupRingElem gen(int g, int j, int e = 1) { return GroupRingElem::generator(g, j, e); }
GroupRingElem cst(int g, long c) { return GroupRingElem::constant(g, c); }
} // namespace

TEST_CASE("addition") {
  const int g = 2;
  CHECK(gen(g, 1) + (-gen(g, 1)) == GroupRingElem::zero(g));
  CHECK((gen(g, 1) + gen(g, g + 1)).term_count() == 2);
  CHECK(cst(g, 2) + (gen(g, 1) - cst(g, 2)) == gen(g, 1));
}

TEST_CASE("multiplication") {
  const int g = 2;
  CHECK(gen(g, 1) * gen(g, 1, -1) == cst(g, 1));
  GroupRingElem lhs = (gen(g, 1) - cst(g, 1)) * (gen(g, g + 1, -1) - cst(g, 1));
  GroupRingElem rhs = gen(g, 1) * gen(g, g + 1, -1) - gen(g, 1) -
                      gen(g, g + 1, -1) + cst(g, 1);
  CHECK(lhs == rhs);
  std::mt19937 rng(1);
  GroupRingElem x = random_elem(rng, g);
  CHECK(GroupRingElem::zero(g) * x == GroupRingElem::zero(g));
}

TEST_CASE("genus mismatch is rejected") {
  CHECK_THROWS_AS(gen(1, 1) + gen(2, 1), precondition_error);
  CHECK_THROWS_AS(gen(1, 1) * gen(2, 1), precondition_error);
}

TEST_CASE("involution") {
  const int g = 2;
  CHECK((gen(g, 1) + cst(g, 2) * gen(g, g + 2, -1)).involute() ==
        gen(g, 1, -1) + cst(g, 2) * gen(g, g + 2));
  CHECK(cst(g, 5).involute() == cst(g, 5));
  std::mt19937 rng(2);
  for (int i = 0; i < 50; ++i) {
    GroupRingElem x = random_elem(rng, g), y = random_elem(rng, g);
    CHECK((x * y).involute() == x.involute() * y.involute());
    CHECK(x.involute().involute() == x);
    CHECK(x.involute().augmentation() == x.augmentation());
    CHECK(x.involute().const_term() == x.const_term());
  }
}

TEST_CASE("augmentation") {
  const int g = 2;
  CHECK((gen(g, 1) - cst(g, 1)).augmentation() == 0);
  GroupRingElem x = cst(g, 3) * (gen(g, 1) * gen(g, g + 2)) + cst(g, 2);
  CHECK(x.augmentation() == 5);
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    GroupRingElem a = random_elem(rng, g), b = random_elem(rng, g);
    CHECK((a * b).augmentation() == a.augmentation() * b.augmentation());
  }
}

TEST_CASE("constant term") {
  const int g = 2;
  CHECK((gen(g, 1) + cst(g, 7)).const_term() == 7);
  CHECK((gen(g, 1) - gen(g, g + 2)).const_term() == 0);
  std::mt19937 rng(4);
  for (int i = 0; i < 50; ++i) {
    GroupRingElem x = random_elem(rng, g);
    GroupRingElem h = random_monomial(rng, g);
    ExpVec hinv = h.terms().begin()->first;
    for (int& v : hinv)
      v = -v;
    CHECK((h * x).const_term() == x.coeff(hinv));
  }
}

TEST_CASE("pseudosquare") {
  const int g = 1;
  CHECK(GroupRingElem::zero(g).pseudosquare() == GroupRingElem::zero(g));
  CHECK((gen(g, 1) - cst(g, 1)).pseudosquare() ==
        cst(g, 2) - gen(g, 1) - gen(g, 1, -1));
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    GroupRingElem x = random_elem(rng, 2);
    GroupRingElem p = x.pseudosquare();
    Int squares = 0;
    for (const auto& [e, c] : x.terms())
      squares += c * c;
    CHECK(p.const_term() == squares);
    CHECK((p.const_term() == 0) == x.is_zero());
    CHECK(p == p.involute());
  }
}

TEST_CASE("pseudosquare is not linear") {
  std::mt19937 rng(6);
  for (int i = 0; i < 50; ++i) {
    GroupRingElem x = random_elem(rng, 2), y = random_elem(rng, 2);
    CHECK((x + y).pseudosquare() == x.pseudosquare() + y.pseudosquare() +
                                        x * y.involute() + y * x.involute());
  }
}

TEST_CASE("canonical form") {
  const int g = 2;
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    GroupRingElem x = random_elem(rng, g);
    for (const auto& [e, c] : x.terms())
      CHECK(c != 0);
    GroupRingElem rebuilt(g);
    for (const auto& [e, c] : x.terms())
      rebuilt.add_term(e, c);
    CHECK(rebuilt == x);
  }
}

TEST_CASE("augmentation ideal membership") {
  const int g = 2;
  GroupRingElem a1 = gen(g, 1), b1 = gen(g, g + 1);
  CHECK(aug_ideal_member(a1 - cst(g, 1), 1));
  CHECK_FALSE(aug_ideal_member(a1 - cst(g, 1), 2));
  CHECK(aug_ideal_member((a1 - cst(g, 1)) * (b1 - cst(g, 1)), 2));

  // negative exponents expand through the truncated geometric series
  CHECK(aug_ideal_member(gen(g, 1, -1) - cst(g, 1), 1));
  CHECK_FALSE(aug_ideal_member(gen(g, 1, -1) - cst(g, 1), 2));
  CHECK(aug_ideal_member((gen(g, 1, -1) - cst(g, 1)) * (b1 - cst(g, 1)), 2));

  GroupRingElem cube =
      (a1 - cst(g, 1)) * (a1 - cst(g, 1)) * (a1 - cst(g, 1));
  CHECK(aug_ideal_member(cube, 3));
  CHECK_FALSE(aug_ideal_member(cube, 4));

  std::mt19937 rng(8);
  for (int i = 0; i < 50; ++i) {
    GroupRingElem x = random_elem(rng, g);
    CHECK(aug_ideal_member(x, 0));
    CHECK(aug_ideal_member(x, 1) == (x.augmentation() == 0));
  }
}

TEST_CASE("text form") {
  const int g = 1;
  CHECK(GroupRingElem::zero(g).str() == "0");
  CHECK(cst(g, 1).str() == "1");
  CHECK(cst(g, -3).str() == "-3");
  CHECK((gen(g, 1) * gen(g, 2, -1) - cst(g, 2)).str() == "a1*b1^-1 - 2");
  CHECK(GroupRingElem::monomial(2, {2, 0, 0, -1}, 1).str() == "a1^2*b2^-1");
  CHECK((cst(g, 2) - gen(g, 1) - gen(g, 1, -1)).str() == "-a1 + 2 - a1^-1");
}
