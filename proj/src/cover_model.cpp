#include "magnus/cover_model.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "magnus/conventions.hpp"
#include "magnus/errors.hpp"

namespace magnus {

LatticePoint lattice_zero(int genus) { return LatticePoint(2 * genus, 0); }

LatticePoint lattice_unit(int genus, int j) {
  LatticePoint p(2 * genus, 0);
  if (j < 1 || j > 2 * genus)
    throw precondition_error("lattice direction out of range");
  p[j - 1] = 1;
  return p;
}

LatticePoint lattice_add(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

LatticePoint lattice_sub(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] - b[i];
  return out;
}

int lattice_linf(const LatticePoint& a) {
  int m = 0;
  for (int x : a)
    m = std::max(m, std::abs(x));
  return m;
}

namespace {

// Tick offsets within a 60-tick interval. Chosen pairwise distinct so that
// an unpushed arc and a pushed arc are automatically in generic position.
constexpr long kSideCrossPlain = 30;
constexpr long kSideCrossPushed = 24;  // appears as 36 across the ribbon
constexpr long kTailNearStart = 6;     // eta and 1 - eta track of tail chords
constexpr long kTailNearEnd = 54;
constexpr long kMarkHat = 20;          // within the marked corner interval
constexpr long kMarkHatPrime = 40;
constexpr long kJunction = 15;         // pushed-arc junction, short of the mark

long side_tick(int side, long offset) { return 120L * side + offset; }
long corner_tick(int corner, long offset) { return 120L * corner + 60 + offset; }

// Basis arc j exits its polygon through X+ and enters the neighbor through X-.
int side_plus(int genus, int j) {
  return j <= genus ? 4 * (j - 1) : 4 * (j - genus - 1) + 3;
}
int side_minus(int genus, int j) {
  return j <= genus ? 4 * (j - 1) + 2 : 4 * (j - genus - 1) + 1;
}

} // namespace

CoverWindow::CoverWindow(int genus, int radius) : genus_(genus), radius_(radius) {
  if (genus < 1 || radius < 1)
    throw precondition_error("window needs genus >= 1 and radius >= 1");
}

CoverWindow build_window(int genus, int radius) { return CoverWindow(genus, radius); }

bool CoverWindow::contains(const LatticePoint& p) const {
  return static_cast<int>(p.size()) == 2 * genus_ && lattice_linf(p) <= radius_;
}

long CoverWindow::polygon_count() const {
  long n = 1;
  for (int i = 0; i < 2 * genus_; ++i)
    n *= 2 * radius_ + 1;
  return n;
}

std::vector<LatticePoint> CoverWindow::polygons() const {
  std::vector<LatticePoint> out;
  out.reserve(polygon_count());
  LatticePoint p(2 * genus_, -radius_);
  for (;;) {
    out.push_back(p);
    int i = 2 * genus_ - 1;
    while (i >= 0 && p[i] == radius_)
      p[i--] = -radius_;
    if (i < 0)
      break;
    ++p[i];
  }
  return out;
}

std::pair<LatticePoint, int> CoverWindow::ribbon_partner(const LatticePoint& p,
                                                         int side) const {
  if (side < 0 || side >= side_count())
    throw precondition_error("side index out of range");
  int block = side / 4;
  int r = side % 4;
  int j = (r == 0 || r == 2) ? block + 1 : genus_ + block + 1;
  LatticePoint e = lattice_unit(genus_, j);
  switch (r) {
  case 0: return {lattice_add(p, e), side + 2}; // A+ -> A-
  case 2: return {lattice_sub(p, e), side - 2}; // A- -> A+
  case 3: return {lattice_add(p, e), side - 2}; // B+ -> B-
  default: return {lattice_sub(p, e), side + 2}; // B- -> B+
  }
}

std::string CoverWindow::side_label(int side) const {
  int block = side / 4;
  int r = side % 4;
  static const char* suffix[4] = {"+", "-", "-", "+"};
  char gen = (r == 0 || r == 2) ? 'A' : 'B';
  return std::string(1, gen) + std::to_string(block + 1) + suffix[r];
}

std::string dump_window_json(const CoverWindow& w) {
  std::ostringstream os;
  os << "{\"genus\":" << w.genus() << ",\"radius\":" << w.radius()
     << ",\"polygon_count\":" << w.polygon_count() << ",\"sides\":[";
  for (int s = 0; s < w.side_count(); ++s)
    os << (s ? "," : "") << "\"" << w.side_label(s) << "\"";
  os << "]}";
  return os.str();
}

namespace {

struct WalkState {
  LatticePoint poly;
  int corner;
};

// Forward boundary walk from the pushed mark of `anchor` around its boundary
// circle to the junction just short of the basepoint mark. Emits one chord
// per polygon corner hugged.
std::vector<ArcChord> forward_tail(const CoverWindow& w, const LatticePoint& anchor) {
  const int n = w.side_count();
  const int marked = n - 1;
  std::vector<ArcChord> chords;
  chords.push_back({anchor, w.hat_prime_tick(), side_tick(0, kTailNearStart)});
  WalkState s{anchor, marked};
  for (int guard = 0; guard <= n; ++guard) {
    int exit_side = (s.corner + 1) % n;
    auto [q, sbar] = w.ribbon_partner(s.poly, exit_side);
    if (sbar == marked) {
      if (q != anchor)
        throw window_error("boundary walk did not close up");
      chords.push_back({q, side_tick(sbar, kTailNearEnd),
                        corner_tick(marked, kJunction)});
      return chords;
    }
    chords.push_back({q, side_tick(sbar, kTailNearEnd),
                      side_tick(sbar + 1, kTailNearStart)});
    s = {q, sbar};
  }
  throw window_error("boundary walk failed to terminate");
}

// Backward boundary walk from the junction near the basepoint mark of
// `anchor` around its boundary circle to the pushed mark.
std::vector<ArcChord> backward_tail(const CoverWindow& w, const LatticePoint& anchor) {
  const int n = w.side_count();
  const int marked = n - 1;
  std::vector<ArcChord> chords;
  chords.push_back({anchor, corner_tick(marked, kJunction),
                    side_tick(marked, kTailNearEnd)});
  WalkState s{anchor, marked};
  for (int guard = 0; guard <= n; ++guard) {
    auto [q, sbar] = w.ribbon_partner(s.poly, s.corner);
    int corner = (sbar + n - 1) % n;
    if (corner == marked) {
      if (q != anchor)
        throw window_error("boundary walk did not close up");
      chords.push_back({q, side_tick(sbar, kTailNearStart), w.hat_prime_tick()});
      return chords;
    }
    chords.push_back({q, side_tick(sbar, kTailNearStart),
                      side_tick(corner, kTailNearEnd)});
    s = {q, corner};
  }
  throw window_error("boundary walk failed to terminate");
}

void require_inside(const CoverWindow& w, const std::vector<ArcChord>& chords) {
  for (const ArcChord& c : chords)
    if (!w.contains(c.poly))
      throw window_error("embedded arc leaves the window; enlarge the radius");
}

// Push::none keeps spec sigma semantics out of this layer; `slide_forward`
// says whether the endpoints slide by the short forward path or around the
// whole boundary circle.
EmbeddedArc embed_arc(const CoverWindow& w, int i, const LatticePoint& h,
                      Push push, bool reversed) {
  const int g = w.genus();
  if (i < 1 || i > 2 * g)
    throw precondition_error("basis arc index out of range");
  if (static_cast<int>(h.size()) != 2 * g)
    throw precondition_error("translate has wrong rank");

  const LatticePoint head =
      reversed ? lattice_sub(h, lattice_unit(g, i)) : lattice_add(h, lattice_unit(g, i));
  const int exit_side = reversed ? side_minus(g, i) : side_plus(g, i);
  const int enter_side = reversed ? side_plus(g, i) : side_minus(g, i);

  EmbeddedArc arc;
  arc.genus = g;
  const long cross = push == Push::none ? kSideCrossPlain : kSideCrossPushed;
  const long start_tick = push == Push::none ? w.hat_tick()
                          : push == Push::plus ? w.hat_prime_tick()
                                               : corner_tick(4 * g - 1, kJunction);
  const long end_tick = start_tick;

  if (push == Push::minus)
    arc.chords = forward_tail(w, h);
  arc.chords.push_back({h, start_tick, side_tick(exit_side, cross)});
  arc.chords.push_back({head, side_tick(enter_side, 60 - cross), end_tick});
  if (push == Push::minus) {
    auto tail = backward_tail(w, head);
    arc.chords.insert(arc.chords.end(), tail.begin(), tail.end());
  }

  const long mark = push == Push::none ? w.hat_tick() : w.hat_prime_tick();
  arc.endpoints = {{h, mark}, {head, mark}};
  require_inside(w, arc.chords);
  return arc;
}

int chord_cross(const ArcChord& x, const ArcChord& y, long ticks) {
  auto strictly_inside = [ticks](long a, long from, long to) {
    long da = ((a - from) % ticks + ticks) % ticks;
    long dt = ((to - from) % ticks + ticks) % ticks;
    return da > 0 && da < dt;
  };
  bool from_in = strictly_inside(y.from, x.from, x.to);
  bool to_in = strictly_inside(y.to, x.from, x.to);
  if (from_in == to_in)
    return 0;
  // Cyclic order (x.from, y.from, x.to, y.to) is a positively oriented
  // crossing on a counter-clockwise polygon.
  return from_in ? 1 : -1;
}

} // namespace

namespace {

// The sigma label names a boundary direction; which direction is the short
// slide is part of the orientation convention.
Push resolve_push(Push push) {
  if (conventions::sigma_plus_short_slide || push == Push::none)
    return push;
  return push == Push::plus ? Push::minus : Push::plus;
}

} // namespace

EmbeddedArc embed_basis_arc(const CoverWindow& w, int i, const LatticePoint& h,
                            Push push) {
  return embed_arc(w, i, h, resolve_push(push), false);
}

EmbeddedArc embed_basis_arc_reversed(const CoverWindow& w, int i,
                                     const LatticePoint& h, Push push) {
  return embed_arc(w, i, h, resolve_push(push), true);
}

int intersection_number(const EmbeddedArc& x, const EmbeddedArc& y) {
  if (x.genus != y.genus)
    throw precondition_error("genus mismatch between embedded arcs");
  for (const auto& [pp, tp] : x.endpoints)
    for (const auto& [qq, tq] : y.endpoints)
      if (pp == qq && tp == tq)
        throw precondition_error("arcs share an endpoint mark; push one first");
  const long ticks = 480L * x.genus;
  int total = 0;
  for (const ArcChord& cx : x.chords)
    for (const ArcChord& cy : y.chords) {
      if (cx.poly != cy.poly)
        continue;
      if (cx.from == cy.from || cx.from == cy.to || cx.to == cy.from ||
          cx.to == cy.to)
        throw precondition_error("chord endpoints collide; configuration not generic");
      total += chord_cross(cx, cy, ticks);
    }
  return conventions::intersection_sign * total;
}

GroupRingElem pairing_oracle(int genus, int i, int j, int sigma, int radius) {
  if (radius < 2)
    throw precondition_error("oracle radius must be >= 2");
  if (sigma != 1 && sigma != -1)
    throw precondition_error("sigma must be +1 or -1");
  // Embedded arcs reach at most two lattice steps from their translate.
  CoverWindow w(genus, radius + 2);
  const EmbeddedArc x = embed_basis_arc(w, i, lattice_zero(genus), Push::none);
  const EmbeddedArc y0 =
      embed_basis_arc(w, j, lattice_zero(genus), sigma > 0 ? Push::plus : Push::minus);

  // Group the chords of y by polygon; translating y by h moves each group to
  // poly + h, so the chord pairs meeting an x chord are found by lookup.
  std::map<LatticePoint, std::vector<const ArcChord*>> groups;
  for (const ArcChord& c : y0.chords)
    groups[c.poly].push_back(&c);

  const long ticks = 480L * genus;
  GroupRingElem result(genus);
  LatticePoint h(2 * genus, -radius);
  for (;;) {
    int count = 0;
    for (const ArcChord& cx : x.chords) {
      auto it = groups.find(lattice_sub(cx.poly, h));
      if (it == groups.end())
        continue;
      for (const ArcChord* cy : it->second)
        count += chord_cross(cx, *cy, ticks);
    }
    count *= conventions::intersection_sign;
    if (count != 0) {
      if (lattice_linf(h) == radius)
        throw window_error("outermost shell carries intersections; enlarge the radius");
      result.add_term(h, count);
    }
    int d = 2 * genus - 1;
    while (d >= 0 && h[d] == radius)
      h[d--] = -radius;
    if (d < 0)
      break;
    ++h[d];
  }
  return result;
}

} // namespace magnus
