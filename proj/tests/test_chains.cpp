#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "magnus/chains.hpp"
#include "magnus/errors.hpp"
#include "magnus/json_io.hpp"
#include "test_util.hpp"

using namespace magnus;
using testutil::random_chain;
using testutil::random_word;

namespace {
Chain delta_lift_g1() {
  // (1 - b1) alpha1 + (a1 - 1) beta1
  std::vector<GroupRingElem> coords = {
      GroupRingElem::constant(1, 1) - GroupRingElem::generator(1, 2),
      GroupRingElem::generator(1, 1) - GroupRingElem::constant(1, 1)};
  return Chain(1, std::move(coords));
}
} // namespace

TEST_CASE("boundary map on basis arcs") {
  const int g = 2;
  CHECK(boundary(Chain::basis(g, 1)) ==
        GroupRingElem::generator(g, 1) - GroupRingElem::constant(g, 1));
  CHECK(boundary(Chain::basis(g, g + 2)) ==
        GroupRingElem::generator(g, g + 2) - GroupRingElem::constant(g, 1));
}

TEST_CASE("boundary is Z[H]-linear") {
  std::mt19937 rng(21);
  const int g = 2;
  for (int i = 0; i < 50; ++i) {
    Chain c = random_chain(rng, g);
    GroupRingElem h = testutil::random_monomial(rng, g);
    CHECK(boundary(c.scaled(h)) == h * boundary(c));
    Chain d = random_chain(rng, g);
    CHECK(boundary(c + d) == boundary(c) + boundary(d));
  }
}

TEST_CASE("curves are the kernel of the boundary") {
  CHECK_FALSE(is_curve(Chain::basis(2, 1)));
  CHECK(is_curve(lift(delta_word(2, 2))));
  CHECK(is_curve(Chain(2)));
  CHECK(boundary(lift(delta_word(1, 1))).is_zero());
}

TEST_CASE("lifts of loops") {
  CHECK(lift(FreeWord::generator(1, 1)) == Chain::basis(1, 1));
  CHECK(lift(delta_word(1, 1)) == delta_lift_g1());
  CHECK(lift(FreeWord(2)).is_zero());
}

TEST_CASE("exactness at the chain level") {
  std::mt19937 rng(22);
  for (int g : {1, 2, 3}) {
    for (int i = 0; i < 60; ++i) {
      FreeWord w = random_word(rng, g, 10);
      GroupRingElem bd = boundary(lift(w));
      CHECK(bd == w.abelianization() - GroupRingElem::constant(g, 1));
      CHECK(bd.augmentation() == 0);
      CHECK(bd.is_zero() == w.is_nullhomologous());
    }
  }
}

TEST_CASE("lifts multiply through based products") {
  std::mt19937 rng(23);
  const int g = 2;
  for (int i = 0; i < 60; ++i) {
    FreeWord u = random_word(rng, g), v = random_word(rng, g);
    CHECK(lift(concat(u, v)) ==
          lift(u) + lift(v).translated(u.abelianization_exps()));
  }
}

TEST_CASE("lifts of the standard separating words are nonzero") {
  for (int g = 1; g <= 4; ++g)
    for (int k = 1; k <= g; ++k)
      CHECK_FALSE(lift(delta_word(g, k)).is_zero());
}

TEST_CASE("deck translation action") {
  std::mt19937 rng(24);
  const int g = 2;
  Chain alpha1 = Chain::basis(g, 1);
  ExpVec zero(2 * g, 0), a1(2 * g, 0);
  a1[0] = 1;
  CHECK(alpha1.translated(zero) == alpha1);
  CHECK(alpha1.translated(a1).coord(1) == GroupRingElem::generator(g, 1));
  for (int i = 0; i < 30; ++i) {
    Chain c = random_chain(rng, g);
    ExpVec h1(2 * g), h2(2 * g), sum(2 * g);
    std::uniform_int_distribution<int> ex(-2, 2);
    for (int k = 0; k < 2 * g; ++k) {
      h1[k] = ex(rng);
      h2[k] = ex(rng);
      sum[k] = h1[k] + h2[k];
    }
    CHECK(c.translated(h1).translated(h2) == c.translated(sum));
  }
}

TEST_CASE("boundary lift") {
  CHECK(boundary_lift(1) == delta_lift_g1());
  for (int g : {1, 2, 3}) {
    CHECK(is_curve(boundary_lift(g)));
    CHECK(boundary(boundary_lift(g)).is_zero());
  }
}

TEST_CASE("matrix action on chains") {
  std::mt19937 rng(25);
  const int g = 2;
  for (int i = 0; i < 20; ++i) {
    Chain c = random_chain(rng, g);
    CHECK(apply(RepMatrix::identity(g), c) == c);
  }
}

TEST_CASE("chain JSON round trip") {
  std::mt19937 rng(26);
  for (int g : {1, 3}) {
    for (int i = 0; i < 20; ++i) {
      Chain c = random_chain(rng, g);
      CHECK(chain_from_json(chain_to_json(c)) == c);
    }
  }
}

TEST_CASE("chain text form") {
  CHECK(lift(delta_word(1, 1)).str() == "alpha1: -b1 + 1 ; beta1: a1 - 1");
}
