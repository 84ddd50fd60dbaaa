#pragma once

#include <utility>
#include <vector>

#include "magnus/chains.hpp"
#include "magnus/free_group.hpp"
#include "magnus/pairing.hpp"
#include "magnus/rep_matrix.hpp"

namespace magnus {

/// Representation matrix of the n-th power of the twist about a
/// null-homologous word w: the map d -> d + n <d, c> c with c = lift(w),
/// assembled column by column on the basis arcs.
RepMatrix twist_matrix(const PairingTable& t, const FreeWord& w, int n);

/// A formal product of positive powers of twists about null-homologous words
/// whose lifts pairwise (and self) pair to zero. The vanishing is certified
/// at construction; every downstream formula silently depends on it.
class MultiTwist {
public:
  MultiTwist(const PairingTable& t,
             std::vector<std::pair<FreeWord, int>> factors);

  int genus() const { return genus_; }
  const std::vector<std::pair<FreeWord, int>>& factors() const { return factors_; }
  /// Lift of the i-th factor word (0-based).
  const Chain& lift(int i) const { return lifts_[i]; }
  std::size_t size() const { return factors_.size(); }

private:
  int genus_;
  std::vector<std::pair<FreeWord, int>> factors_;
  std::vector<Chain> lifts_;
};

/// Matrix of d -> d + sum_i n_i <d, c_i> c_i. Under the certification this
/// equals the product of the factor twist matrices in any order.
RepMatrix multitwist_matrix(const PairingTable& t, const MultiTwist& tw);

/// Matrix of the inverse multitwist (negated multiplicities; exact inverse
/// because the displacement squares to zero).
RepMatrix multitwist_matrix_inverse(const PairingTable& t, const MultiTwist& tw);

} // namespace magnus
