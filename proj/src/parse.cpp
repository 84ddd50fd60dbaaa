#include "magnus/parse.hpp"

#include <cctype>

#include "magnus/errors.hpp"

namespace magnus {

namespace {

class Cursor {
public:
  Cursor(const std::string& src, int genus) : src_(src), genus_(genus) {}

  void skip_separators() {
    while (pos_ < src_.size() && (std::isspace(static_cast<unsigned char>(src_[pos_])) ||
                                  src_[pos_] == '*'))
      ++pos_;
  }

  bool done() {
    skip_separators();
    return pos_ >= src_.size();
  }

  char peek() {
    skip_separators();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  char take() {
    skip_separators();
    if (pos_ >= src_.size())
      throw parse_error("unexpected end of input", pos_);
    return src_[pos_++];
  }

  void expect(char c) {
    std::size_t at = pos_;
    if (take() != c)
      throw parse_error(std::string("expected '") + c + "'", at);
  }

  std::size_t position() const { return pos_; }

  int parse_int() {
    skip_separators();
    std::size_t at = pos_;
    bool neg = false;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
      neg = src_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      throw parse_error("expected an integer", at);
    long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + (src_[pos_] - '0');
      if (v > 1000000)
        throw parse_error("exponent too large", at);
      ++pos_;
    }
    return static_cast<int>(neg ? -v : v);
  }

  /// Optional `^n` suffix; defaults to 1.
  int parse_power() {
    skip_separators();
    if (pos_ < src_.size() && src_[pos_] == '^') {
      ++pos_;
      return parse_int();
    }
    return 1;
  }

  int genus() const { return genus_; }

private:
  const std::string& src_;
  int genus_;
  std::size_t pos_ = 0;
};

FreeWord parse_word_expr(Cursor& cur, bool stop_at_comma);

FreeWord parse_atom(Cursor& cur) {
  std::size_t at = cur.position();
  char c = cur.take();
  if (c == 'A' || c == 'B') {
    int idx = cur.parse_int();
    if (idx < 1 || idx > cur.genus())
      throw parse_error("generator index exceeds the genus", at);
    return FreeWord::generator(cur.genus(), c == 'A' ? idx : cur.genus() + idx);
  }
  if (c == '[') {
    FreeWord u = parse_word_expr(cur, true);
    cur.expect(',');
    FreeWord v = parse_word_expr(cur, true);
    cur.expect(']');
    return commutator(u, v);
  }
  if (c == '(') {
    FreeWord u = parse_word_expr(cur, false);
    cur.expect(')');
    return u;
  }
  throw parse_error("expected a generator, '[' or '('", at);
}

FreeWord parse_word_expr(Cursor& cur, bool stop_at_comma) {
  FreeWord out(cur.genus());
  for (;;) {
    char c = cur.peek();
    if (c == '\0' || c == ')' || c == ']' || (stop_at_comma && c == ','))
      break;
    FreeWord atom = parse_atom(cur);
    out = concat(out, atom.pow(cur.parse_power()));
  }
  return out;
}

} // namespace

FreeWord parse_word(const std::string& src, int genus) {
  Cursor cur(src, genus);
  FreeWord w = parse_word_expr(cur, false);
  if (!cur.done())
    throw parse_error("trailing input after word", cur.position());
  return w;
}

std::vector<TwistFactor> parse_twist_expression(const std::string& src, int genus) {
  Cursor cur(src, genus);
  std::vector<TwistFactor> out;
  while (!cur.done()) {
    std::size_t at = cur.position();
    char c = cur.take();
    if (c == 'T') {
      cur.expect('[');
      FreeWord w = parse_word_expr(cur, false);
      cur.expect(']');
      int n = cur.parse_power();
      out.push_back({false, {{w, n}}});
    } else if (c == 'M') {
      cur.expect('[');
      TwistFactor factor;
      factor.is_multi = true;
      for (;;) {
        FreeWord w = parse_word_expr(cur, true);
        if (w.empty())
          throw parse_error("empty multitwist factor", cur.position());
        factor.twists.emplace_back(w, cur.parse_power());
        char next = cur.take();
        if (next == ']')
          break;
        if (next != ',')
          throw parse_error("expected ',' or ']' in multitwist", cur.position() - 1);
      }
      out.push_back(std::move(factor));
    } else {
      throw parse_error("expected a twist factor 'T[...]' or 'M[...]'", at);
    }
  }
  if (out.empty())
    throw parse_error("empty twist expression", 0);
  return out;
}

std::vector<std::pair<FreeWord, int>> flatten_twists(
    const std::vector<TwistFactor>& factors) {
  std::vector<std::pair<FreeWord, int>> out;
  for (const TwistFactor& f : factors)
    out.insert(out.end(), f.twists.begin(), f.twists.end());
  return out;
}

} // namespace magnus
