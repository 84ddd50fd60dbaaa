#pragma once

#include <string>
#include <vector>

#include "magnus/group_ring.hpp"
#include "magnus/rep_matrix.hpp"

namespace magnus {

/// A letter is a signed generator index: +j for the generator z_j, -j for its
/// inverse (1 <= j <= 2g). Generators 1..g are A_1..A_g, g+1..2g are B_1..B_g.
using Letter = int;

/// A freely reduced word in the free group on 2g generators.
class FreeWord {
public:
  explicit FreeWord(int genus) : genus_(genus) {}
  /// Reduces the raw letter sequence (iterated cancellation of adjacent
  /// inverse pairs).
  FreeWord(int genus, const std::vector<Letter>& raw);

  static FreeWord generator(int genus, int j, int sign = 1);

  int genus() const { return genus_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  bool operator==(const FreeWord& rhs) const {
    return genus_ == rhs.genus_ && letters_ == rhs.letters_;
  }
  bool operator!=(const FreeWord& rhs) const { return !(*this == rhs); }

  FreeWord inverse() const;
  FreeWord pow(int n) const;

  /// Signed letter counts, as an element of H inside Z[H] (a single monomial).
  GroupRingElem abelianization() const;
  /// The exponent vector of the abelianization.
  ExpVec abelianization_exps() const;
  bool is_nullhomologous() const;

  std::string str() const;

private:
  int genus_;
  std::vector<Letter> letters_;
};

FreeWord concat(const FreeWord& u, const FreeWord& v);
/// u v u^{-1} v^{-1}
FreeWord commutator(const FreeWord& u, const FreeWord& v);

/// delta_k = [A_1,B_1]...[A_k,B_k], the standard genus-k separating word.
FreeWord delta_word(int genus, int k);

/// Abelianized Fox derivative d(w)/d(z_j) pushed to Z[H], 1-based j.
GroupRingElem fox_derivative_ab(const FreeWord& w, int j);
/// All 2g abelianized Fox derivatives in one pass.
std::vector<GroupRingElem> fox_derivatives_ab(const FreeWord& w);

/// An endomorphism of the free group given by the images of the generators.
class FreeEndo {
public:
  explicit FreeEndo(int genus, std::vector<FreeWord> images);

  static FreeEndo identity(int genus);

  int genus() const { return genus_; }
  const FreeWord& image(int j) const { return images_[j - 1]; }

  FreeWord apply(const FreeWord& w) const;

  /// True iff the endomorphism acts trivially on H (abelianization of every
  /// image equals the generator).
  bool is_torelli() const;

  bool operator==(const FreeEndo& rhs) const {
    return genus_ == rhs.genus_ && images_ == rhs.images_;
  }

private:
  int genus_;
  std::vector<FreeWord> images_;
};

/// Standard function composition: compose(f, g)(w) = f(g(w)), g applied first.
FreeEndo compose(const FreeEndo& f, const FreeEndo& g);

/// The model of the n-th power of the twist about delta_k: conjugates
/// A_i, B_i for i <= k by delta_k^n and fixes the rest.
FreeEndo twist_endo(int k, int n, int genus);

/// The Fox-calculus route to the representation matrix of a Torelli
/// endomorphism: column j holds the abelianized Fox derivatives of the image
/// of z_j, so the matrix acts on chain coordinate columns. Throws if f does
/// not act trivially on H (the projection is not a homomorphism there).
RepMatrix endo_magnus_matrix(const FreeEndo& f);

} // namespace magnus
