#include "magnus/magnus_rep.hpp"

#include "magnus/errors.hpp"

namespace magnus {

RepMatrix twist_matrix(const PairingTable& t, const FreeWord& w, int n) {
  if (w.genus() != t.genus())
    throw precondition_error("genus mismatch between word and table");
  if (!w.is_nullhomologous())
    throw precondition_error(
        "twist formula needs a null-homologous word; its lift is an arc otherwise");
  const int g = t.genus();
  const Chain c = magnus::lift(w);
  RepMatrix m = RepMatrix::identity(g);
  for (int j = 1; j <= 2 * g; ++j) {
    GroupRingElem factor =
        pair_curve(t, Chain::basis(g, j), c) * GroupRingElem::constant(g, n);
    if (factor.is_zero())
      continue;
    for (int i = 1; i <= 2 * g; ++i)
      m.at(i - 1, j - 1) += factor * c.coord(i);
  }
  return m;
}

MultiTwist::MultiTwist(const PairingTable& t,
                       std::vector<std::pair<FreeWord, int>> factors)
    : genus_(t.genus()), factors_(std::move(factors)) {
  if (factors_.empty())
    throw precondition_error("multitwist needs at least one factor");
  for (const auto& [w, n] : factors_) {
    if (w.genus() != genus_)
      throw precondition_error("genus mismatch in multitwist factor");
    if (n < 1)
      throw precondition_error("multitwist multiplicities must be positive");
    if (!w.is_nullhomologous())
      throw precondition_error("multitwist factor word is not null-homologous");
    lifts_.push_back(magnus::lift(w));
  }
  for (std::size_t i = 0; i < lifts_.size(); ++i)
    for (std::size_t j = i; j < lifts_.size(); ++j)
      if (!pair_curve(t, lifts_[i], lifts_[j]).is_zero())
        throw precondition_error(
            "multitwist factors must have vanishing pairwise and self pairings");
}

namespace {

RepMatrix multitwist_displacement(const PairingTable& t, const MultiTwist& tw,
                                  int sign) {
  const int g = tw.genus();
  RepMatrix m = RepMatrix::identity(g);
  for (std::size_t k = 0; k < tw.size(); ++k) {
    const Chain& c = tw.lift(static_cast<int>(k));
    const Int n = sign * tw.factors()[k].second;
    for (int j = 1; j <= 2 * g; ++j) {
      GroupRingElem factor = pair_curve(t, Chain::basis(g, j), c) * n;
      if (factor.is_zero())
        continue;
      for (int i = 1; i <= 2 * g; ++i)
        m.at(i - 1, j - 1) += factor * c.coord(i);
    }
  }
  return m;
}

} // namespace

RepMatrix multitwist_matrix(const PairingTable& t, const MultiTwist& tw) {
  return multitwist_displacement(t, tw, 1);
}

RepMatrix multitwist_matrix_inverse(const PairingTable& t, const MultiTwist& tw) {
  return multitwist_displacement(t, tw, -1);
}

} // namespace magnus
