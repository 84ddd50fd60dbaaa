#pragma once

#include <string>
#include <utility>
#include <vector>

#include "magnus/group_ring.hpp"

namespace magnus {

/// A lattice point of Z^{2g}, the deck group of the universal abelian cover.
using LatticePoint = std::vector<int>;

LatticePoint lattice_zero(int genus);
LatticePoint lattice_unit(int genus, int j); // direction of basis arc j, 1-based
LatticePoint lattice_add(const LatticePoint& a, const LatticePoint& b);
LatticePoint lattice_sub(const LatticePoint& a, const LatticePoint& b);
int lattice_linf(const LatticePoint& a);

/// Finite window of the universal abelian cover: a 4g-gon at every lattice
/// point of [-R, R]^{2g}, ribbons joining side X+ of polygon p to side X- of
/// polygon p + direction(X). Sides are attached in the cyclic order
/// A1+, B1-, A1-, B1+, ..., Ag+, Bg-, Ag-, Bg+.
///
/// Positions on a polygon's boundary circle are integer ticks: side s
/// occupies ticks (120s, 120s+60), the boundary corner after side s occupies
/// (120s+60, 120s+120), so a full circle is 480g ticks. The basepoint mark
/// and its pushed companion sit on the corner between Bg+ and A1+.
class CoverWindow {
public:
  CoverWindow(int genus, int radius);

  int genus() const { return genus_; }
  int radius() const { return radius_; }
  int side_count() const { return 4 * genus_; }
  long circle_ticks() const { return 480L * genus_; }

  bool contains(const LatticePoint& p) const;
  long polygon_count() const;
  /// All lattice points of the window, lexicographically ordered.
  std::vector<LatticePoint> polygons() const;

  /// The ribbon attached at side s of polygon p leads to this (polygon, side).
  /// The result may lie outside the window.
  std::pair<LatticePoint, int> ribbon_partner(const LatticePoint& p, int side) const;

  /// Side label in cyclic order, e.g. "A1+", "B2-".
  std::string side_label(int side) const;

  /// Tick of the basepoint mark on the marked corner.
  long hat_tick() const { return circle_ticks() - 40; }
  /// Tick of the pushed basepoint mark.
  long hat_prime_tick() const { return circle_ticks() - 20; }

private:
  int genus_;
  int radius_;
};

CoverWindow build_window(int genus, int radius);

/// Debug dump of the window structure (no stability guarantee).
std::string dump_window_json(const CoverWindow& w);

/// One transverse segment of an embedded arc: a directed chord of the polygon
/// at `poly` from boundary tick `from` to boundary tick `to`.
struct ArcChord {
  LatticePoint poly;
  long from = 0;
  long to = 0;
};

/// How the endpoints of an embedded arc are slid off the basepoint fiber.
/// `none` keeps them on the basepoint marks; `plus` and `minus` slide both
/// endpoints along the boundary to the pushed marks, in the two boundary
/// directions (the minus slide travels around the whole boundary circle).
enum class Push { none, plus, minus };

/// Combinatorial representative of a (translated, optionally pushed) basis
/// arc: a chain of directed chords linked through ribbons, with endpoints on
/// marked boundary points.
struct EmbeddedArc {
  int genus = 0;
  std::vector<ArcChord> chords;
  /// (polygon, tick) of the two endpoint marks.
  std::vector<std::pair<LatticePoint, long>> endpoints;
};

/// Representative of the translate h * s_i of the basis arc s_i.
EmbeddedArc embed_basis_arc(const CoverWindow& w, int i, const LatticePoint& h,
                            Push push);

/// The arc leaving the basepoint in the negative s_i direction; as a chain it
/// is -(unit_i)^{-1} * s_i rather than -s_i. Test oracle for that identity.
EmbeddedArc embed_basis_arc_reversed(const CoverWindow& w, int i,
                                     const LatticePoint& h, Push push);

/// Signed count of transverse crossings: two chords of the same polygon cross
/// exactly when their endpoint ticks interleave in the cyclic boundary order,
/// with sign induced by the surface orientation. Throws if the arcs share an
/// endpoint mark or any chord endpoint position (non-generic configuration).
int intersection_number(const EmbeddedArc& x, const EmbeddedArc& y);

/// The Z[H]-valued pairing <s_i, s_j>_sigma assembled from the oracle:
/// sum over all window translates h of (s_i, h * pushed s_j) * h, with the
/// outermost shell verified to contribute nothing. sigma is +1 or -1.
GroupRingElem pairing_oracle(int genus, int i, int j, int sigma, int radius);

} // namespace magnus
