#pragma once

#include <vector>

#include "magnus/chains.hpp"
#include "magnus/group_ring.hpp"

namespace magnus {

/// The two Z[H]-valued higher intersection forms restricted to the 2g basis
/// arcs. The full forms on chains are recovered by sesquilinear extension.
///
/// The table is never hardcoded: it is derived from the cover-model oracle
/// and certified by validate(), which enforces the difference formula, the
/// antisymmetry relation and the lifting property on every entry.
class PairingTable {
public:
  /// Derive the base table by summing oracle intersection numbers over deck
  /// translates within the given window radius. Serial reference.
  static PairingTable derive(int genus, int radius = 2);
  /// Same computation with the (sigma, i, j) grid spread across OpenMP threads.
  static PairingTable derive_parallel(int genus, int radius = 2);

  PairingTable(int genus, int radius, std::vector<GroupRingElem> base);

  int genus() const { return genus_; }
  int radius() const { return radius_; }

  /// Base value <s_i, s_j>_sigma; sigma is +1 or -1, i and j are 1-based.
  const GroupRingElem& base(int sigma, int i, int j) const;

  /// Throws precondition_error if any table invariant fails.
  void validate() const;

  bool operator==(const PairingTable& rhs) const;

private:
  int genus_;
  int radius_;
  std::vector<GroupRingElem> base_; // [sigma][i][j] flattened
};

/// <c, d>_sigma by sesquilinear extension from the base table:
/// sum of c_i * involute(d_j) * <s_i, s_j>_sigma.
GroupRingElem pair(const PairingTable& t, const Chain& c, const Chain& d, int sigma);

/// The common value of the two forms, defined when at least one argument is
/// a curve. Evaluates both forms and insists they agree.
GroupRingElem pair_curve(const PairingTable& t, const Chain& c, const Chain& d);

/// Some j with <c, s_j>_sigma != 0, or 0 exactly when c = 0. Sesquilinearity
/// reduces the existential over all chains to the basis arcs.
int nondegeneracy_witness(const PairingTable& t, const Chain& c, int sigma);

} // namespace magnus
