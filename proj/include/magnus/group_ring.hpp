#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace magnus {

/// Coefficients are arbitrary-precision: trace formulas multiply long chains
/// of pairings and must never overflow silently.
using Int = boost::multiprecision::cpp_int;

/// Exponent vector of a monomial in H ~ Z^{2g}: entries are the exponents of
/// a_1..a_g, b_1..b_g in that order.
using ExpVec = std::vector<int>;

/// An element of the commutative group ring Z[H], H free abelian of rank 2g:
/// a finite formal sum of monomials with nonzero integer coefficients.
///
/// Canonical form is maintained as an invariant: no zero coefficients, no
/// duplicate exponent vectors. Equality is term-set equality. Values are
/// immutable in spirit; all operations return fresh elements.
class GroupRingElem {
public:
  explicit GroupRingElem(int genus);

  static GroupRingElem zero(int genus) { return GroupRingElem(genus); }
  static GroupRingElem constant(int genus, const Int& c);
  /// The group element a_j (j in 1..g) or b_{j-g} (j in g+1..2g).
  static GroupRingElem generator(int genus, int j, int exponent = 1);
  static GroupRingElem monomial(int genus, const ExpVec& exps, const Int& coeff = 1);

  int genus() const { return genus_; }
  int rank() const { return 2 * genus_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, Int>& terms() const { return terms_; }

  /// Coefficient of the given monomial (0 if absent).
  Int coeff(const ExpVec& exps) const;

  GroupRingElem operator+(const GroupRingElem& rhs) const;
  GroupRingElem operator-(const GroupRingElem& rhs) const;
  GroupRingElem operator-() const;
  GroupRingElem operator*(const GroupRingElem& rhs) const;
  GroupRingElem& operator+=(const GroupRingElem& rhs);
  GroupRingElem& operator-=(const GroupRingElem& rhs);
  GroupRingElem& operator*=(const GroupRingElem& rhs);
  GroupRingElem operator*(const Int& scalar) const;

  bool operator==(const GroupRingElem& rhs) const;
  bool operator!=(const GroupRingElem& rhs) const { return !(*this == rhs); }

  /// The ring involution induced by h -> h^{-1}: negates every exponent vector.
  GroupRingElem involute() const;
  /// Augmentation: sum of all coefficients (the ring map killing H).
  Int augmentation() const;
  /// Coefficient of the identity monomial.
  Int const_term() const;
  /// x * involute(x). Its constant term is the sum of squared coefficients.
  GroupRingElem pseudosquare() const;
  /// Multiply by a single group element given as an exponent vector.
  GroupRingElem translated(const ExpVec& h) const;

  /// Canonical text form, e.g. "a1*b1^-1 - 2"; zero prints "0".
  /// Terms are emitted in descending lexicographic order of exponent vectors.
  std::string str() const;

  /// Used by construction paths that may produce zero coefficients.
  void add_term(const ExpVec& exps, const Int& coeff);

private:
  void require_same_genus(const GroupRingElem& other) const;

  int genus_;
  std::map<ExpVec, Int> terms_;
};

inline GroupRingElem operator*(const Int& scalar, const GroupRingElem& x) {
  return x * scalar;
}

/// True iff x lies in the n-th power of the augmentation ideal ker(eps).
/// Decided by mapping each generator to 1 + t and expanding negative powers
/// as geometric series truncated at total degree n: membership holds iff
/// every term of total degree < n vanishes.
bool aug_ideal_member(const GroupRingElem& x, int n);

/// Name of generator j (1-based): "a1".."ag", "b1".."bg".
std::string generator_name(int genus, int j);

} // namespace magnus
