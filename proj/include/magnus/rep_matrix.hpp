#pragma once

#include <string>
#include <vector>

#include "magnus/group_ring.hpp"

namespace magnus {

/// A 2g x 2g matrix over Z[H] representing a Z[H]-linear endomorphism of the
/// chain module. Column j holds the coordinates of the image of the j-th
/// basis arc, so matrices act on coordinate columns from the left and the
/// matrix of "f followed by g" is M(g-after-f) = M(g)*M(f) read as standard
/// function composition; a product of mapping classes written left to right
/// multiplies in the same order.
class RepMatrix {
public:
  explicit RepMatrix(int genus);

  static RepMatrix identity(int genus);

  int genus() const { return genus_; }
  int size() const { return 2 * genus_; }

  GroupRingElem& at(int i, int j);
  const GroupRingElem& at(int i, int j) const;

  bool operator==(const RepMatrix& rhs) const;
  bool operator!=(const RepMatrix& rhs) const { return !(*this == rhs); }

  bool is_identity() const;
  /// Sum of diagonal entries.
  GroupRingElem trace() const;
  /// trace - 2g, the normalized trace used throughout.
  GroupRingElem t_value() const;

  RepMatrix operator+(const RepMatrix& rhs) const;
  RepMatrix operator-(const RepMatrix& rhs) const;

  /// Text rendering as a 2g x 2g grid of polynomial strings.
  std::string str() const;

private:
  int genus_;
  std::vector<GroupRingElem> entries_; // row-major
};

/// Matrix product M*N. compose(M, N) applied to a chain equals
/// apply(M, apply(N, c)).
RepMatrix compose(const RepMatrix& m, const RepMatrix& n);

/// Same product with the entry grid evaluated across OpenMP threads.
RepMatrix compose_parallel(const RepMatrix& m, const RepMatrix& n);

} // namespace magnus
