#include "magnus/free_group.hpp"

#include <cstdlib>
#include <sstream>

#include "magnus/conventions.hpp"
#include "magnus/errors.hpp"

namespace magnus {

FreeWord::FreeWord(int genus, const std::vector<Letter>& raw) : genus_(genus) {
  if (genus < 1)
    throw precondition_error("genus must be >= 1");
  letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0 || std::abs(l) > 2 * genus)
      throw precondition_error("letter index out of range");
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FreeWord FreeWord::generator(int genus, int j, int sign) {
  return FreeWord(genus, {sign >= 0 ? j : -j});
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  for (Letter& l : rev)
    l = -l;
  FreeWord out(genus_);
  out.letters_ = std::move(rev); // inverse of a reduced word is reduced
  return out;
}

FreeWord FreeWord::pow(int n) const {
  FreeWord base = n >= 0 ? *this : inverse();
  FreeWord out(genus_);
  for (int i = 0; i < std::abs(n); ++i)
    out = concat(out, base);
  return out;
}

GroupRingElem FreeWord::abelianization() const {
  return GroupRingElem::monomial(genus_, abelianization_exps(), 1);
}

ExpVec FreeWord::abelianization_exps() const {
  ExpVec e(2 * genus_, 0);
  for (Letter l : letters_)
    e[std::abs(l) - 1] += l > 0 ? 1 : -1;
  return e;
}

bool FreeWord::is_nullhomologous() const {
  ExpVec e = abelianization_exps();
  for (int x : e)
    if (x != 0)
      return false;
  return true;
}

std::string FreeWord::str() const {
  if (letters_.empty())
    return "1";
  std::ostringstream os;
  bool first = true;
  for (Letter l : letters_) {
    if (!first)
      os << "*";
    first = false;
    int j = std::abs(l);
    os << (j <= genus_ ? "A" : "B") << (j <= genus_ ? j : j - genus_);
    if (l < 0)
      os << "^-1";
  }
  return os.str();
}

FreeWord concat(const FreeWord& u, const FreeWord& v) {
  if (u.genus() != v.genus())
    throw precondition_error("genus mismatch between words");
  std::vector<Letter> raw = u.letters();
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return FreeWord(u.genus(), raw);
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  return concat(concat(u, v), concat(u.inverse(), v.inverse()));
}

FreeWord delta_word(int genus, int k) {
  if (k < 1 || k > genus)
    throw precondition_error("delta index out of range");
  FreeWord w(genus);
  for (int i = 1; i <= k; ++i)
    w = concat(w, commutator(FreeWord::generator(genus, i),
                             FreeWord::generator(genus, genus + i)));
  return w;
}

std::vector<GroupRingElem> fox_derivatives_ab(const FreeWord& w) {
  const int g = w.genus();
  std::vector<GroupRingElem> out(2 * g, GroupRingElem(g));
  ExpVec prefix(2 * g, 0);
  for (Letter l : w.letters()) {
    int j = std::abs(l) - 1;
    if (l > 0) {
      // d(z_j)/dz_j = 1, at the current prefix translate
      out[j].add_term(prefix, 1);
      prefix[j] += 1;
    } else {
      // d(z_j^{-1})/dz_j = -z_j^{-1}, abelianized
      prefix[j] -= 1;
      out[j].add_term(prefix, -1);
    }
  }
  return out;
}

GroupRingElem fox_derivative_ab(const FreeWord& w, int j) {
  if (j < 1 || j > 2 * w.genus())
    throw precondition_error("fox derivative index out of range");
  return fox_derivatives_ab(w)[j - 1];
}

FreeEndo::FreeEndo(int genus, std::vector<FreeWord> images)
    : genus_(genus), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != 2 * genus)
    throw precondition_error("endomorphism needs one image per generator");
  for (const FreeWord& w : images_)
    if (w.genus() != genus)
      throw precondition_error("genus mismatch in endomorphism images");
}

FreeEndo FreeEndo::identity(int genus) {
  std::vector<FreeWord> images;
  for (int j = 1; j <= 2 * genus; ++j)
    images.push_back(FreeWord::generator(genus, j));
  return FreeEndo(genus, std::move(images));
}

FreeWord FreeEndo::apply(const FreeWord& w) const {
  if (w.genus() != genus_)
    throw precondition_error("genus mismatch between endomorphism and word");
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    const FreeWord& img = l > 0 ? images_[l - 1] : images_[-l - 1];
    if (l > 0) {
      raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        raw.push_back(-*it);
    }
  }
  return FreeWord(genus_, raw);
}

bool FreeEndo::is_torelli() const {
  for (int j = 1; j <= 2 * genus_; ++j) {
    ExpVec e = images_[j - 1].abelianization_exps();
    for (int i = 0; i < 2 * genus_; ++i)
      if (e[i] != (i == j - 1 ? 1 : 0))
        return false;
  }
  return true;
}

FreeEndo compose(const FreeEndo& f, const FreeEndo& g) {
  if (f.genus() != g.genus())
    throw precondition_error("genus mismatch between endomorphisms");
  std::vector<FreeWord> images;
  for (int j = 1; j <= 2 * f.genus(); ++j)
    images.push_back(f.apply(g.image(j)));
  return FreeEndo(f.genus(), std::move(images));
}

FreeEndo twist_endo(int k, int n, int genus) {
  if (k < 1 || k > genus)
    throw precondition_error("twist index out of range");
  FreeWord d = delta_word(genus, k).pow(conventions::twist_conjugation_sign * n);
  FreeWord dinv = d.inverse();
  std::vector<FreeWord> images;
  for (int j = 1; j <= 2 * genus; ++j) {
    int handle = j <= genus ? j : j - genus;
    FreeWord z = FreeWord::generator(genus, j);
    images.push_back(handle <= k ? concat(concat(d, z), dinv) : z);
  }
  return FreeEndo(genus, std::move(images));
}

RepMatrix endo_magnus_matrix(const FreeEndo& f) {
  if (!f.is_torelli())
    throw precondition_error(
        "endomorphism does not act trivially on homology; "
        "the Z[H]-projection is only a homomorphism on that subgroup");
  const int g = f.genus();
  RepMatrix m(g);
  for (int j = 1; j <= 2 * g; ++j) {
    std::vector<GroupRingElem> col = fox_derivatives_ab(f.image(j));
    for (int i = 0; i < 2 * g; ++i)
      m.at(i, j - 1) = col[i];
  }
  return m;
}

} // namespace magnus
