#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "magnus/conventions.hpp"
#include "magnus/cover_model.hpp"
#include "magnus/errors.hpp"
#include "magnus/group_ring.hpp"
#include "test_util.hpp"

using namespace magnus;

TEST_CASE("window structure") {
  CoverWindow w1 = build_window(1, 1);
  CHECK(w1.polygon_count() == 9);
  CHECK(w1.side_count() == 4);
  CHECK(w1.polygons().size() == 9);

  CoverWindow w2 = build_window(2, 1);
  CHECK(w2.polygon_count() == 81);
  CHECK(w2.side_count() == 8);

  CHECK(w2.side_label(0) == "A1+");
  CHECK(w2.side_label(1) == "B1-");
  CHECK(w2.side_label(2) == "A1-");
  CHECK(w2.side_label(3) == "B1+");
  CHECK(w2.side_label(4) == "A2+");
  CHECK(w2.side_label(7) == "B2+");
}

TEST_CASE("ribbon pairing is an involution") {
  for (int g : {1, 2}) {
    CoverWindow w = build_window(g, 1);
    for (const LatticePoint& p : w.polygons()) {
      for (int s = 0; s < w.side_count(); ++s) {
        auto [q, sbar] = w.ribbon_partner(p, s);
        auto [p2, s2] = w.ribbon_partner(q, sbar);
        CHECK(p2 == p);
        CHECK(s2 == s);
      }
    }
  }
}

TEST_CASE("embedded basis arcs") {
  CoverWindow w = build_window(2, 2);
  EmbeddedArc a1 = embed_basis_arc(w, 1, lattice_zero(2), Push::none);
  REQUIRE(a1.chords.size() == 2);
  CHECK(a1.chords[0].poly == lattice_zero(2));
  CHECK(a1.chords[0].from == w.hat_tick());
  CHECK(a1.chords[1].poly == lattice_unit(2, 1));
  CHECK(a1.chords[1].to == w.hat_tick());

  // the translate starts at the translated mark
  LatticePoint h = lattice_unit(2, 4);
  EmbeddedArc b2 = embed_basis_arc(w, 4, h, Push::none);
  CHECK(b2.chords[0].poly == h);
  CHECK(b2.endpoints[1].first == lattice_add(h, lattice_unit(2, 4)));

  // pushed arcs end on the pushed marks and stay inside the window
  for (Push p : {Push::plus, Push::minus}) {
    EmbeddedArc pushed = embed_basis_arc(w, 1, lattice_zero(2), p);
    for (const auto& [poly, tick] : pushed.endpoints)
      CHECK(tick == w.hat_prime_tick());
  }
}

TEST_CASE("window overflow reported") {
  CoverWindow w = build_window(2, 1);
  LatticePoint edge(4, 1); // corner of the window; pushed arc walks outside
  Push long_slide =
      conventions::sigma_plus_short_slide ? Push::minus : Push::plus;
  CHECK_THROWS_AS(embed_basis_arc(w, 1, edge, long_slide), window_error);
}

TEST_CASE("intersection numbers") {
  CoverWindow w = build_window(2, 3);
  EmbeddedArc a1 = embed_basis_arc(w, 1, lattice_zero(2), Push::none);

  // arcs through disjoint polygons do not meet
  EmbeddedArc far = embed_basis_arc(w, 2, lattice_unit(2, 4), Push::none);
  CHECK(intersection_number(a1, far) == 0);

  // unpushed arcs sharing a basepoint are rejected
  EmbeddedArc b1 = embed_basis_arc(w, 3, lattice_zero(2), Push::none);
  CHECK_THROWS_AS(intersection_number(a1, b1), precondition_error);

  // a single transverse crossing flips sign under exchange
  EmbeddedArc b1p = embed_basis_arc(w, 3, lattice_zero(2), Push::plus);
  int n = intersection_number(a1, b1p);
  CHECK(n != 0);
  CHECK(intersection_number(b1p, a1) == -n);
}

TEST_CASE("oracle window stability") {
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int sigma : {1, -1})
        CHECK(pairing_oracle(1, i, j, sigma, 2) == pairing_oracle(1, i, j, sigma, 3));
}

TEST_CASE("oracle basics") {
  // self pairing of a basis arc augments to zero, dual pairing to one
  for (int sigma : {1, -1}) {
    CHECK(pairing_oracle(2, 1, 1, sigma, 2).augmentation() == 0);
    CHECK(pairing_oracle(2, 1, 3, sigma, 2).augmentation() == 1);
  }
}

TEST_CASE("negative-direction arc represents a translated negative") {
  // The arc from the basepoint in the negative s_j direction is
  // -(unit_j)^{-1} s_j, so pairing any s_i against it equals
  // -gen_j * <s_i, s_j>_sigma.
  const int g = 2;
  const int radius = 2;
  CoverWindow w = build_window(g, radius + 2);
  for (int i : {1, 3})
    for (int j : {1, 2, 4})
      for (int sigma : {1, -1}) {
        EmbeddedArc x = embed_basis_arc(w, i, lattice_zero(g), Push::none);
        GroupRingElem assembled(g);
        LatticePoint h(2 * g, -radius);
        for (;;) {
          Push push = sigma > 0 ? Push::plus : Push::minus;
          EmbeddedArc y = embed_basis_arc_reversed(w, j, h, push);
          int n = intersection_number(x, y);
          if (n != 0)
            assembled.add_term(h, n);
          int d = 2 * g - 1;
          while (d >= 0 && h[d] == radius)
            h[d--] = -radius;
          if (d < 0)
            break;
          ++h[d];
        }
        GroupRingElem expected =
            -GroupRingElem::generator(g, j) * pairing_oracle(g, i, j, sigma, radius);
        CHECK(assembled == expected);
      }
}

TEST_CASE("window dump") {
  CoverWindow w = build_window(1, 1);
  std::string dump = dump_window_json(w);
  CHECK(dump.find("\"polygon_count\":9") != std::string::npos);
  CHECK(dump.find("A1+") != std::string::npos);
}
