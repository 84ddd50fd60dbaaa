#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magnus/free_group.hpp"
#include "magnus/group_ring.hpp"
#include "magnus/magnus_rep.hpp"
#include "magnus/pairing.hpp"

namespace magnus {

/// Closed-form normalized trace of a product of twists about null-homologous
/// words with vanishing self-pairings: the sum over subsequences
/// i_1 < ... < i_m, m >= 2, of n_{i_1}...n_{i_m} *
/// <c_{i_1}, c_{i_m}> <c_{i_m}, c_{i_{m-1}}> ... <c_{i_2}, c_{i_1}>.
/// Multiplicities may be any integers. Throws if a self-pairing is nonzero,
/// since the cancellation deriving the formula breaks there.
GroupRingElem trace_product_formula(
    const PairingTable& t, const std::vector<std::pair<FreeWord, int>>& twists);

/// Normalized trace of the commutator of two twists:
/// <c_1, c_2>^2 <c_2, c_1>^2, cross-checked against trace_product_formula on
/// the four-letter commutator sequence.
GroupRingElem commutator_trace(const PairingTable& t, const FreeWord& w1,
                               const FreeWord& w2);

/// The kernel criterion: the commutator of the two twists maps to the
/// identity exactly when <c_1, c_2> = 0. Both directions are verified against
/// the commutator matrix itself.
bool commutator_in_kernel(const PairingTable& t, const FreeWord& w1,
                          const FreeWord& w2);

/// Outcome of comparing two positive multitwists inside the representation:
/// their images either commute or generate a free group; in the free case a
/// nonzero cross-pairing witnesses it.
struct PairVerdict {
  enum class Kind { commute_in_image, free_in_image };
  struct Witness {
    int i = 0; // 1-based factor indices
    int j = 0;
    GroupRingElem pairing;
  };
  Kind kind = Kind::commute_in_image;
  std::optional<Witness> witness;
  bool trace_identity_checked = false;
};

/// Decide the commute-or-free dichotomy for two certified multitwists, and
/// verify the pseudosquare trace identity
/// t([T_C, T_D]) = sum_{i,i'} n_i n_{i'} ||sum_j m_j <c_i,d_j><d_j,c_{i'}>||
/// against the matrix value.
PairVerdict classify_multitwist_pair(const PairingTable& t, const MultiTwist& tc,
                                     const MultiTwist& td);

/// Result of the bounded relation search between two multitwist images.
struct NoRelationReport {
  long words_checked = 0;
  bool relation_found = false;
  std::string relation; // empty unless a relation was found
  bool displacements_nilpotent = false;   // A^2 = B^2 = 0
  bool trace_ab_matches_formula = false;  // tr AB = sum <c_i,d_j><d_j,c_i>
  bool trace_ab_augmentation_zero = false;
};

/// Enumerate every nontrivial word in the two multitwist letters with
/// alternating syllables of exponent +-1, up to the given syllable count, and
/// check that none maps to the identity. Also checks the nilpotency of the
/// displacements and the trace identity for tr AB. Requires the pair to
/// classify as free_in_image.
NoRelationReport verify_no_relation(const PairingTable& t, const MultiTwist& tc,
                                    const MultiTwist& td, int max_syllables,
                                    bool parallel = false);

/// Sufficient (computable) check that two twists have equal images: their
/// lifts coincide as chains.
bool lifts_equal(const FreeWord& w1, const FreeWord& w2);

} // namespace magnus
