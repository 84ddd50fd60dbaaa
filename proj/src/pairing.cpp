#include "magnus/pairing.hpp"

#include "magnus/cover_model.hpp"
#include "magnus/errors.hpp"

namespace magnus {

namespace {

std::size_t table_index(int genus, int sigma, int i, int j) {
  const int n = 2 * genus;
  std::size_t s = sigma > 0 ? 0 : 1;
  return (s * n + (i - 1)) * n + (j - 1);
}

struct Cell {
  int sigma;
  int i;
  int j;
};

std::vector<Cell> table_cells(int genus) {
  std::vector<Cell> cells;
  for (int sigma : {1, -1})
    for (int i = 1; i <= 2 * genus; ++i)
      for (int j = 1; j <= 2 * genus; ++j)
        cells.push_back({sigma, i, j});
  return cells;
}

} // namespace

PairingTable::PairingTable(int genus, int radius, std::vector<GroupRingElem> base)
    : genus_(genus), radius_(radius), base_(std::move(base)) {
  if (base_.size() != static_cast<std::size_t>(8 * genus * genus))
    throw precondition_error("pairing table has wrong size");
}

PairingTable PairingTable::derive(int genus, int radius) {
  std::vector<GroupRingElem> base(8 * genus * genus, GroupRingElem(genus));
  for (const Cell& c : table_cells(genus))
    base[table_index(genus, c.sigma, c.i, c.j)] =
        pairing_oracle(genus, c.i, c.j, c.sigma, radius);
  PairingTable t(genus, radius, std::move(base));
  t.validate();
  return t;
}

PairingTable PairingTable::derive_parallel(int genus, int radius) {
  std::vector<GroupRingElem> base(8 * genus * genus, GroupRingElem(genus));
  const std::vector<Cell> cells = table_cells(genus);
  const int n = static_cast<int>(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < n; ++k) {
    const Cell& c = cells[k];
    base[table_index(genus, c.sigma, c.i, c.j)] =
        pairing_oracle(genus, c.i, c.j, c.sigma, radius);
  }
  PairingTable t(genus, radius, std::move(base));
  t.validate();
  return t;
}

const GroupRingElem& PairingTable::base(int sigma, int i, int j) const {
  if ((sigma != 1 && sigma != -1) || i < 1 || i > 2 * genus_ || j < 1 ||
      j > 2 * genus_)
    throw precondition_error("pairing table index out of range");
  return base_[table_index(genus_, sigma, i, j)];
}

void PairingTable::validate() const {
  const int n = 2 * genus_;
  for (int i = 1; i <= n; ++i) {
    GroupRingElem di =
        GroupRingElem::generator(genus_, i) - GroupRingElem::constant(genus_, 1);
    for (int j = 1; j <= n; ++j) {
      GroupRingElem dj =
          GroupRingElem::generator(genus_, j) - GroupRingElem::constant(genus_, 1);
      if (base(1, i, j) - base(-1, i, j) != di * dj.involute())
        throw precondition_error("pairing table violates the difference formula");
      for (int sigma : {1, -1}) {
        if (base(sigma, j, i) != -base(-sigma, i, j).involute())
          throw precondition_error("pairing table violates antisymmetry");
        Int expected = 0;
        if (j == i + genus_)
          expected = 1;
        else if (i == j + genus_)
          expected = -1;
        if (base(sigma, i, j).augmentation() != expected)
          throw precondition_error("pairing table violates the lifting property");
      }
    }
  }
}

bool PairingTable::operator==(const PairingTable& rhs) const {
  return genus_ == rhs.genus_ && base_ == rhs.base_;
}

GroupRingElem pair(const PairingTable& t, const Chain& c, const Chain& d, int sigma) {
  if (t.genus() != c.genus() || t.genus() != d.genus())
    throw precondition_error("genus mismatch in pairing");
  GroupRingElem out(t.genus());
  for (int i = 1; i <= 2 * t.genus(); ++i) {
    if (c.coord(i).is_zero())
      continue;
    for (int j = 1; j <= 2 * t.genus(); ++j) {
      if (d.coord(j).is_zero())
        continue;
      out += c.coord(i) * d.coord(j).involute() * t.base(sigma, i, j);
    }
  }
  return out;
}

GroupRingElem pair_curve(const PairingTable& t, const Chain& c, const Chain& d) {
  if (!is_curve(c) && !is_curve(d))
    throw precondition_error(
        "pair_curve needs a curve argument; choose a sign for arc pairs");
  GroupRingElem plus = pair(t, c, d, 1);
  if (plus != pair(t, c, d, -1))
    throw std::logic_error("forms disagree on a curve pair; table is corrupt");
  return plus;
}

int nondegeneracy_witness(const PairingTable& t, const Chain& c, int sigma) {
  if (c.is_zero())
    return 0;
  for (int j = 1; j <= 2 * t.genus(); ++j)
    if (!pair(t, c, Chain::basis(t.genus(), j), sigma).is_zero())
      return j;
  throw std::logic_error("nonzero chain pairs trivially with every basis arc");
}

} // namespace magnus
