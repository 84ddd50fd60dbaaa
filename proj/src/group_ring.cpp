#include "magnus/group_ring.hpp"

#include <sstream>
#include <stdexcept>

#include "magnus/errors.hpp"

namespace magnus {

GroupRingElem::GroupRingElem(int genus) : genus_(genus) {
  if (genus < 1)
    throw precondition_error("genus must be >= 1");
}

GroupRingElem GroupRingElem::constant(int genus, const Int& c) {
  GroupRingElem x(genus);
  if (c != 0)
    x.terms_.emplace(ExpVec(2 * genus, 0), c);
  return x;
}

GroupRingElem GroupRingElem::generator(int genus, int j, int exponent) {
  if (j < 1 || j > 2 * genus)
    throw precondition_error("generator index out of range");
  ExpVec e(2 * genus, 0);
  e[j - 1] = exponent;
  return monomial(genus, e, 1);
}

GroupRingElem GroupRingElem::monomial(int genus, const ExpVec& exps, const Int& coeff) {
  if (static_cast<int>(exps.size()) != 2 * genus)
    throw precondition_error("exponent vector has wrong length");
  GroupRingElem x(genus);
  if (coeff != 0)
    x.terms_.emplace(exps, coeff);
  return x;
}

Int GroupRingElem::coeff(const ExpVec& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Int(0) : it->second;
}

void GroupRingElem::require_same_genus(const GroupRingElem& other) const {
  if (genus_ != other.genus_)
    throw precondition_error("genus mismatch between group ring elements");
}

void GroupRingElem::add_term(const ExpVec& exps, const Int& coeff) {
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& rhs) {
  require_same_genus(rhs);
  for (const auto& [e, c] : rhs.terms_)
    add_term(e, c);
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& rhs) {
  require_same_genus(rhs);
  for (const auto& [e, c] : rhs.terms_)
    add_term(e, -c);
  return *this;
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& rhs) const {
  GroupRingElem out = *this;
  out += rhs;
  return out;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& rhs) const {
  GroupRingElem out = *this;
  out -= rhs;
  return out;
}

GroupRingElem GroupRingElem::operator-() const {
  GroupRingElem out(genus_);
  for (const auto& [e, c] : terms_)
    out.terms_.emplace(e, -c);
  return out;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& rhs) const {
  require_same_genus(rhs);
  GroupRingElem out(genus_);
  ExpVec e(2 * genus_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int i = 0; i < 2 * genus_; ++i)
        e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

GroupRingElem& GroupRingElem::operator*=(const GroupRingElem& rhs) {
  *this = *this * rhs;
  return *this;
}

GroupRingElem GroupRingElem::operator*(const Int& scalar) const {
  GroupRingElem out(genus_);
  if (scalar == 0)
    return out;
  for (const auto& [e, c] : terms_)
    out.terms_.emplace(e, c * scalar);
  return out;
}

bool GroupRingElem::operator==(const GroupRingElem& rhs) const {
  return genus_ == rhs.genus_ && terms_ == rhs.terms_;
}

GroupRingElem GroupRingElem::involute() const {
  GroupRingElem out(genus_);
  ExpVec e(2 * genus_);
  for (const auto& [ea, c] : terms_) {
    for (int i = 0; i < 2 * genus_; ++i)
      e[i] = -ea[i];
    out.terms_.emplace(e, c);
  }
  return out;
}

Int GroupRingElem::augmentation() const {
  Int s = 0;
  for (const auto& [e, c] : terms_)
    s += c;
  return s;
}

Int GroupRingElem::const_term() const {
  return coeff(ExpVec(2 * genus_, 0));
}

GroupRingElem GroupRingElem::pseudosquare() const {
  return *this * involute();
}

GroupRingElem GroupRingElem::translated(const ExpVec& h) const {
  if (static_cast<int>(h.size()) != 2 * genus_)
    throw precondition_error("translation vector has wrong length");
  GroupRingElem out(genus_);
  ExpVec e(2 * genus_);
  for (const auto& [ea, c] : terms_) {
    for (int i = 0; i < 2 * genus_; ++i)
      e[i] = ea[i] + h[i];
    out.terms_.emplace(e, c);
  }
  return out;
}

std::string generator_name(int genus, int j) {
  if (j <= genus)
    return "a" + std::to_string(j);
  return "b" + std::to_string(j - genus);
}

namespace {

std::string monomial_str(int genus, const ExpVec& e) {
  std::string out;
  for (int i = 0; i < 2 * genus; ++i) {
    if (e[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += generator_name(genus, i + 1);
    if (e[i] != 1)
      out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

} // namespace

std::string GroupRingElem::str() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  // std::map iterates ascending; we emit leading terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& c = it->second;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0)
        os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono = monomial_str(genus_, it->first);
    if (a != 1) {
      os << a.str();
      if (mono != "1")
        os << "*" << mono;
    } else {
      os << mono;
    }
  }
  return os.str();
}

namespace {

// Truncated polynomial ring Z[t_1..t_2g] / (total degree >= n).
// Keys are nonnegative exponent vectors of total degree < n.
using TruncPoly = std::map<ExpVec, Int>;

int total_degree(const ExpVec& e) {
  int d = 0;
  for (int x : e)
    d += x;
  return d;
}

void trunc_add(TruncPoly& acc, const ExpVec& e, const Int& c) {
  if (c == 0)
    return;
  auto [it, inserted] = acc.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      acc.erase(it);
  }
}

// (1 + t_var)^e truncated to degree < n, multiplied into p.
TruncPoly trunc_mul_power(const TruncPoly& p, int var, int e, int n, int rank) {
  // Binomial coefficients of (1+t)^e for k = 0..n-1; for e < 0 these are
  // C(e, k) = (-1)^k C(-e+k-1, k), the geometric-series expansion.
  std::vector<Int> binom(n);
  binom[0] = 1;
  for (int k = 1; k < n; ++k) {
    // C(e, k) = C(e, k-1) * (e - k + 1) / k, exact at every step.
    binom[k] = binom[k - 1] * (Int(e) - (k - 1)) / k;
  }
  TruncPoly out;
  ExpVec key(rank);
  for (const auto& [exps, c] : p) {
    int room = n - 1 - total_degree(exps);
    for (int k = 0; k <= room; ++k) {
      if (binom[k] == 0)
        continue;
      key = exps;
      key[var] += k;
      trunc_add(out, key, c * binom[k]);
    }
  }
  return out;
}

} // namespace

bool aug_ideal_member(const GroupRingElem& x, int n) {
  if (n < 0)
    throw precondition_error("ideal power must be nonnegative");
  if (n == 0)
    return true;
  if (n == 1)
    return x.augmentation() == 0;
  const int rank = x.rank();
  TruncPoly image;
  for (const auto& [exps, c] : x.terms()) {
    TruncPoly term;
    term.emplace(ExpVec(rank, 0), c);
    for (int i = 0; i < rank; ++i) {
      if (exps[i] != 0)
        term = trunc_mul_power(term, i, exps[i], n, rank);
    }
    for (const auto& [e, tc] : term)
      trunc_add(image, e, tc);
  }
  return image.empty();
}

} // namespace magnus
