#pragma once

#include <vector>

#include "magnus/free_group.hpp"
#include "magnus/group_ring.hpp"
#include "magnus/rep_matrix.hpp"

namespace magnus {

/// An element of the relative homology module of the universal abelian cover,
/// a free Z[H]-module of rank 2g with basis the lifted arcs
/// alpha_1..alpha_g, beta_1..beta_g.
class Chain {
public:
  explicit Chain(int genus);
  Chain(int genus, std::vector<GroupRingElem> coords);

  /// The basis arc s_j (1..g are alpha, g+1..2g are beta).
  static Chain basis(int genus, int j);

  int genus() const { return genus_; }
  const GroupRingElem& coord(int j) const { return coords_[j - 1]; } // 1-based
  const std::vector<GroupRingElem>& coords() const { return coords_; }

  bool is_zero() const;

  Chain operator+(const Chain& rhs) const;
  Chain operator-(const Chain& rhs) const;
  Chain operator-() const;
  /// Scale every coordinate by a ring element (module action).
  Chain scaled(const GroupRingElem& r) const;
  /// Act by the deck transformation h: multiply every coordinate by the
  /// monomial with exponent vector h.
  Chain translated(const ExpVec& h) const;

  bool operator==(const Chain& rhs) const;
  bool operator!=(const Chain& rhs) const { return !(*this == rhs); }

  std::string str() const;

private:
  int genus_;
  std::vector<GroupRingElem> coords_;
};

/// Boundary map: sum of coord(alpha_i)*(a_i - 1) + coord(beta_i)*(b_i - 1).
GroupRingElem boundary(const Chain& c);

/// True iff the chain lies in the kernel of the boundary map ("curves", the
/// image of the absolute homology of the cover).
bool is_curve(const Chain& c);

/// The lift of a based loop, anchored at the preferred basepoint lift:
/// coordinates are the abelianized Fox derivatives. Satisfies
/// boundary(lift(w)) = abelianize(w) - 1, and produces a curve exactly when
/// w is null-homologous.
Chain lift(const FreeWord& w);

/// Lift of the full boundary word [A_1,B_1]...[A_g,B_g].
Chain boundary_lift(int genus);

/// Matrix acting on a coordinate column: result_i = sum_j M(i,j) * c_j.
Chain apply(const RepMatrix& m, const Chain& c);

/// Coordinate-wise augmentation, as the exponent vector of the projected
/// class in H (alpha_i projects to a_i, beta_i to b_i).
std::vector<Int> project_to_h(const Chain& c);

/// Algebraic (symplectic) intersection form on H in the basis
/// a_1..a_g, b_1..b_g: (a_i, b_i) = 1, (b_i, a_i) = -1, all else 0.
Int symplectic_form(const std::vector<Int>& x, const std::vector<Int>& y);

} // namespace magnus
