#include "magnus/chains.hpp"

#include <sstream>

#include "magnus/errors.hpp"

namespace magnus {

Chain::Chain(int genus) : genus_(genus), coords_(2 * genus, GroupRingElem(genus)) {
  if (genus < 1)
    throw precondition_error("genus must be >= 1");
}

Chain::Chain(int genus, std::vector<GroupRingElem> coords)
    : genus_(genus), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != 2 * genus)
    throw precondition_error("chain needs 2g coordinates");
  for (const auto& c : coords_)
    if (c.genus() != genus)
      throw precondition_error("genus mismatch in chain coordinates");
}

Chain Chain::basis(int genus, int j) {
  Chain c(genus);
  if (j < 1 || j > 2 * genus)
    throw precondition_error("basis index out of range");
  c.coords_[j - 1] = GroupRingElem::constant(genus, 1);
  return c;
}

bool Chain::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero())
      return false;
  return true;
}

Chain Chain::operator+(const Chain& rhs) const {
  if (genus_ != rhs.genus_)
    throw precondition_error("genus mismatch between chains");
  Chain out(genus_);
  for (int i = 0; i < 2 * genus_; ++i)
    out.coords_[i] = coords_[i] + rhs.coords_[i];
  return out;
}

Chain Chain::operator-(const Chain& rhs) const {
  if (genus_ != rhs.genus_)
    throw precondition_error("genus mismatch between chains");
  Chain out(genus_);
  for (int i = 0; i < 2 * genus_; ++i)
    out.coords_[i] = coords_[i] - rhs.coords_[i];
  return out;
}

Chain Chain::operator-() const {
  Chain out(genus_);
  for (int i = 0; i < 2 * genus_; ++i)
    out.coords_[i] = -coords_[i];
  return out;
}

Chain Chain::scaled(const GroupRingElem& r) const {
  Chain out(genus_);
  for (int i = 0; i < 2 * genus_; ++i)
    out.coords_[i] = r * coords_[i];
  return out;
}

Chain Chain::translated(const ExpVec& h) const {
  Chain out(genus_);
  for (int i = 0; i < 2 * genus_; ++i)
    out.coords_[i] = coords_[i].translated(h);
  return out;
}

bool Chain::operator==(const Chain& rhs) const {
  return genus_ == rhs.genus_ && coords_ == rhs.coords_;
}

std::string Chain::str() const {
  std::ostringstream os;
  for (int i = 0; i < 2 * genus_; ++i) {
    if (i)
      os << " ; ";
    os << (i < genus_ ? "alpha" : "beta") << (i < genus_ ? i + 1 : i - genus_ + 1)
       << ": " << coords_[i].str();
  }
  return os.str();
}

GroupRingElem boundary(const Chain& c) {
  const int g = c.genus();
  GroupRingElem out(g);
  for (int j = 1; j <= 2 * g; ++j) {
    GroupRingElem gen = GroupRingElem::generator(g, j) - GroupRingElem::constant(g, 1);
    out += c.coord(j) * gen;
  }
  return out;
}

bool is_curve(const Chain& c) {
  return boundary(c).is_zero();
}

Chain lift(const FreeWord& w) {
  return Chain(w.genus(), fox_derivatives_ab(w));
}

Chain boundary_lift(int genus) {
  return lift(delta_word(genus, genus));
}

Chain apply(const RepMatrix& m, const Chain& c) {
  if (m.genus() != c.genus())
    throw precondition_error("genus mismatch between matrix and chain");
  const int d = m.size();
  std::vector<GroupRingElem> out(d, GroupRingElem(m.genus()));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      out[i] += m.at(i, j) * c.coord(j + 1);
  return Chain(m.genus(), std::move(out));
}

std::vector<Int> project_to_h(const Chain& c) {
  std::vector<Int> out;
  out.reserve(2 * c.genus());
  for (const auto& coord : c.coords())
    out.push_back(coord.augmentation());
  return out;
}

Int symplectic_form(const std::vector<Int>& x, const std::vector<Int>& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw precondition_error("symplectic form needs equal even-length vectors");
  const int g = static_cast<int>(x.size()) / 2;
  Int s = 0;
  for (int i = 0; i < g; ++i)
    s += x[i] * y[g + i] - x[g + i] * y[i];
  return s;
}

} // namespace magnus
