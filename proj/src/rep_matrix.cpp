#include "magnus/rep_matrix.hpp"

#include <sstream>

#include "magnus/errors.hpp"

namespace magnus {

RepMatrix::RepMatrix(int genus)
    : genus_(genus), entries_(4 * genus * genus, GroupRingElem(genus)) {
  if (genus < 1)
    throw precondition_error("genus must be >= 1");
}

RepMatrix RepMatrix::identity(int genus) {
  RepMatrix m(genus);
  for (int i = 0; i < 2 * genus; ++i)
    m.at(i, i) = GroupRingElem::constant(genus, 1);
  return m;
}

GroupRingElem& RepMatrix::at(int i, int j) {
  return entries_[static_cast<std::size_t>(i) * size() + j];
}

const GroupRingElem& RepMatrix::at(int i, int j) const {
  return entries_[static_cast<std::size_t>(i) * size() + j];
}

bool RepMatrix::operator==(const RepMatrix& rhs) const {
  return genus_ == rhs.genus_ && entries_ == rhs.entries_;
}

bool RepMatrix::is_identity() const {
  return *this == identity(genus_);
}

GroupRingElem RepMatrix::trace() const {
  GroupRingElem t(genus_);
  for (int i = 0; i < size(); ++i)
    t += at(i, i);
  return t;
}

GroupRingElem RepMatrix::t_value() const {
  return trace() - GroupRingElem::constant(genus_, 2 * genus_);
}

RepMatrix RepMatrix::operator+(const RepMatrix& rhs) const {
  if (genus_ != rhs.genus_)
    throw precondition_error("genus mismatch between matrices");
  RepMatrix out(genus_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    out.entries_[k] = entries_[k] + rhs.entries_[k];
  return out;
}

RepMatrix RepMatrix::operator-(const RepMatrix& rhs) const {
  if (genus_ != rhs.genus_)
    throw precondition_error("genus mismatch between matrices");
  RepMatrix out(genus_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    out.entries_[k] = entries_[k] - rhs.entries_[k];
  return out;
}

std::string RepMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    os << "[ ";
    for (int j = 0; j < size(); ++j) {
      if (j)
        os << " | ";
      os << at(i, j).str();
    }
    os << " ]\n";
  }
  return os.str();
}

RepMatrix compose(const RepMatrix& m, const RepMatrix& n) {
  if (m.genus() != n.genus())
    throw precondition_error("genus mismatch between matrices");
  const int d = m.size();
  RepMatrix out(m.genus());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      GroupRingElem s(m.genus());
      for (int k = 0; k < d; ++k)
        s += m.at(i, k) * n.at(k, j);
      out.at(i, j) = s;
    }
  return out;
}

RepMatrix compose_parallel(const RepMatrix& m, const RepMatrix& n) {
  if (m.genus() != n.genus())
    throw precondition_error("genus mismatch between matrices");
  const int d = m.size();
  RepMatrix out(m.genus());
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      GroupRingElem s(m.genus());
      for (int k = 0; k < d; ++k)
        s += m.at(i, k) * n.at(k, j);
      out.at(i, j) = s;
    }
  return out;
}

} // namespace magnus
