#pragma once

#include <map>
#include <random>
#include <vector>

#include "magnus/chains.hpp"
#include "magnus/free_group.hpp"
#include "magnus/group_ring.hpp"
#include "magnus/pairing.hpp"

namespace magnus::testutil {

inline GroupRingElem random_elem(std::mt19937& rng, int g, int max_terms = 3,
                                 int max_exp = 2, int max_coeff = 3) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<int> ex(-max_exp, max_exp);
  std::uniform_int_distribution<int> co(-max_coeff, max_coeff);
  GroupRingElem x(g);
  const int terms = nt(rng);
  for (int t = 0; t < terms; ++t) {
    ExpVec e(2 * g);
    for (int& v : e)
      v = ex(rng);
    x.add_term(e, co(rng));
  }
  return x;
}

inline GroupRingElem random_monomial(std::mt19937& rng, int g, int max_exp = 2) {
  std::uniform_int_distribution<int> ex(-max_exp, max_exp);
  ExpVec e(2 * g);
  for (int& v : e)
    v = ex(rng);
  return GroupRingElem::monomial(g, e, 1);
}

inline Chain random_chain(std::mt19937& rng, int g) {
  std::vector<GroupRingElem> coords;
  for (int i = 0; i < 2 * g; ++i)
    coords.push_back(random_elem(rng, g));
  return Chain(g, std::move(coords));
}

inline FreeWord random_word(std::mt19937& rng, int g, int max_len = 8) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(1, 2 * g);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> raw;
  const int n = len(rng);
  for (int i = 0; i < n; ++i)
    raw.push_back(letter(rng) * (sign(rng) ? 1 : -1));
  return FreeWord(g, raw);
}

/// Random curve: the lift of a random null-homologous word, scaled by a
/// random ring element and translated.
inline Chain random_curve(std::mt19937& rng, int g) {
  FreeWord u = random_word(rng, g, 4);
  FreeWord v = random_word(rng, g, 4);
  Chain c = lift(commutator(u, v));
  return c.scaled(random_elem(rng, g, 2, 1, 2));
}

/// Shared per-genus pairing tables so each test binary derives them once.
inline const PairingTable& table(int g) {
  static std::map<int, PairingTable> cache;
  auto it = cache.find(g);
  if (it == cache.end())
    it = cache.emplace(g, PairingTable::derive_parallel(g, 2)).first;
  return it->second;
}

/// The canonical genus-2 crossing word: null-homologous, zero self-pairing,
/// nonzero pairing with lift(delta_1).
inline FreeWord crossing_word() {
  FreeWord b2i = FreeWord::generator(2, 4, -1);
  FreeWord a1a2 = concat(FreeWord::generator(2, 1), FreeWord::generator(2, 2));
  return commutator(b2i, a1a2);
}

/// Genus-2 word with nonzero self-pairing (not representable by a simple
/// separating curve).
inline FreeWord nonsimple_word() {
  return commutator(FreeWord::generator(2, 1), FreeWord::generator(2, 4));
}

inline FreeWord conjugate(const FreeWord& u, const FreeWord& w) {
  return concat(concat(u, w), u.inverse());
}

} // namespace magnus::testutil
