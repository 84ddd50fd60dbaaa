#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "magnus/errors.hpp"
#include "magnus/free_group.hpp"
#include "test_util.hpp"

using namespace magnus;
using testutil::random_word;

TEST_CASE("free reduction") {
  const int g = 2;
  CHECK(FreeWord(g, {1, -1}).empty());
  CHECK(FreeWord(g, {1, 3, -3, 2}) == FreeWord(g, {1, 2}));
  // nested cancellation
  CHECK(FreeWord(g, {1, 2, -2, -1}).empty());
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    FreeWord w = random_word(rng, g);
    CHECK(FreeWord(g, w.letters()) == w); // idempotent
    FreeWord u = random_word(rng, g);
    CHECK(concat(w, u).length() <= w.length() + u.length());
  }
}

TEST_CASE("concat, invert, commutator") {
  const int g = 2;
  FreeWord a1 = FreeWord::generator(g, 1), b1 = FreeWord::generator(g, g + 1);
  CHECK(commutator(a1, b1) == FreeWord(g, {1, 3, -1, -3}));
  CHECK(concat(a1, FreeWord::generator(g, 4)).inverse() == FreeWord(g, {-4, -1}));
  std::mt19937 rng(12);
  for (int i = 0; i < 50; ++i) {
    FreeWord w = random_word(rng, g);
    CHECK(concat(w, w.inverse()).empty());
  }
  CHECK_THROWS_AS(concat(FreeWord::generator(1, 1), FreeWord::generator(2, 1)),
                  precondition_error);
}

TEST_CASE("abelianization") {
  const int g = 2;
  FreeWord a1 = FreeWord::generator(g, 1), b1 = FreeWord::generator(g, g + 1);
  CHECK(commutator(a1, b1).abelianization() == GroupRingElem::constant(g, 1));
  FreeWord w(g, {1, 1, -4}); // A1^2 B2^-1
  CHECK(w.abelianization() == GroupRingElem::monomial(g, {2, 0, 0, -1}, 1));
  std::mt19937 rng(13);
  for (int i = 0; i < 50; ++i) {
    FreeWord u = random_word(rng, g), v = random_word(rng, g);
    CHECK(concat(u, v).abelianization() ==
          u.abelianization() * v.abelianization());
  }
}

TEST_CASE("null-homologous words") {
  CHECK(commutator(FreeWord::generator(1, 1), FreeWord::generator(1, 2))
            .is_nullhomologous());
  CHECK_FALSE(FreeWord::generator(1, 1).is_nullhomologous());
  for (int g = 1; g <= 4; ++g)
    for (int k = 1; k <= g; ++k)
      CHECK(delta_word(g, k).is_nullhomologous());
}

TEST_CASE("abelianized fox derivatives") {
  const int g = 1;
  FreeWord a1 = FreeWord::generator(g, 1);
  CHECK(fox_derivative_ab(a1, 1) == GroupRingElem::constant(g, 1));
  CHECK(fox_derivative_ab(a1, 2) == GroupRingElem::zero(g));
  // d[A1,B1]/dA1 = 1 - b1
  CHECK(fox_derivative_ab(delta_word(1, 1), 1) ==
        GroupRingElem::constant(g, 1) - GroupRingElem::generator(g, 2));
  CHECK_THROWS_AS(fox_derivative_ab(a1, 3), precondition_error);
}

TEST_CASE("fundamental fox identity") {
  // abelianize(w) - 1 = sum_j d(w)/dz_j * (z_j - 1)
  std::mt19937 rng(14);
  for (int g : {1, 2, 3}) {
    for (int i = 0; i < 100; ++i) {
      FreeWord w = random_word(rng, g, 10);
      GroupRingElem total(g);
      auto dw = fox_derivatives_ab(w);
      for (int j = 1; j <= 2 * g; ++j)
        total += dw[j - 1] * (GroupRingElem::generator(g, j) -
                              GroupRingElem::constant(g, 1));
      CHECK(total == w.abelianization() - GroupRingElem::constant(g, 1));
    }
  }
}

TEST_CASE("fox product recursion") {
  std::mt19937 rng(15);
  const int g = 2;
  for (int i = 0; i < 50; ++i) {
    FreeWord u = random_word(rng, g), v = random_word(rng, g);
    FreeWord uv = concat(u, v);
    for (int j = 1; j <= 2 * g; ++j)
      CHECK(fox_derivative_ab(uv, j) ==
            fox_derivative_ab(u, j) +
                u.abelianization() * fox_derivative_ab(v, j));
  }
}

TEST_CASE("endomorphism application") {
  const int g = 2;
  FreeEndo id = FreeEndo::identity(g);
  std::mt19937 rng(16);
  for (int i = 0; i < 30; ++i) {
    FreeWord w = random_word(rng, g);
    CHECK(id.apply(w) == w);
    FreeWord u = random_word(rng, g);
    FreeEndo tw = twist_endo(1, 1, g);
    CHECK(tw.apply(concat(w, u)) == concat(tw.apply(w), tw.apply(u)));
  }
  // twist action is conjugation by the separating word on enclosed generators
  FreeWord d = delta_word(g, 1);
  FreeWord expected = concat(concat(d, FreeWord::generator(g, 1)), d.inverse());
  CHECK(twist_endo(1, 1, g).apply(FreeWord::generator(g, 1)) == expected);
}

TEST_CASE("twist endomorphisms") {
  const int g = 2;
  CHECK(twist_endo(1, 0, g) == FreeEndo::identity(g));
  FreeEndo t1 = twist_endo(1, 1, g);
  FreeEndo t1i = twist_endo(1, -1, g);
  CHECK(compose(t1, t1i) == FreeEndo::identity(g));
  CHECK(compose(t1i, t1) == FreeEndo::identity(g));
  for (int k = 1; k <= g; ++k)
    CHECK(twist_endo(k, 2, g).is_torelli());
  CHECK_THROWS_AS(twist_endo(3, 1, g), precondition_error);
  // generators outside the enclosed handles are fixed
  CHECK(t1.image(2) == FreeWord::generator(g, 2));
  CHECK(t1.image(g + 2) == FreeWord::generator(g, g + 2));
}

TEST_CASE("fox route matrices") {
  const int g = 2;
  CHECK(endo_magnus_matrix(FreeEndo::identity(g)) == RepMatrix::identity(g));

  // multiplicative on the Torelli subgroup
  std::mt19937 rng(17);
  std::vector<FreeEndo> pool;
  for (int k = 1; k <= g; ++k) {
    pool.push_back(twist_endo(k, 1, g));
    pool.push_back(twist_endo(k, -1, g));
    pool.push_back(twist_endo(k, 2, g));
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 12; ++i) {
    const FreeEndo& f = pool[pick(rng)];
    const FreeEndo& h = pool[pick(rng)];
    CHECK(endo_magnus_matrix(compose(f, h)) ==
          compose(endo_magnus_matrix(f), endo_magnus_matrix(h)));
  }

  // non-Torelli endomorphisms are rejected
  std::vector<FreeWord> images;
  for (int j = 1; j <= 2 * g; ++j)
    images.push_back(FreeWord::generator(g, j));
  images[0] = FreeWord(g, {1, 1});
  CHECK_THROWS_AS(endo_magnus_matrix(FreeEndo(g, std::move(images))),
                  precondition_error);
}
