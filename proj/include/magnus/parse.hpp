#pragma once

#include <string>
#include <utility>
#include <vector>

#include "magnus/free_group.hpp"

namespace magnus {

/// Parse a word in the shared grammar: generators A1..Ag, B1..Bg, inverse and
/// power suffix `^n`, juxtaposition by whitespace or `*`, commutator sugar
/// `[x,y]`, grouping `(expr)^n`. Throws parse_error with the offending
/// position.
FreeWord parse_word(const std::string& src, int genus);

/// One factor of a twist expression.
struct TwistFactor {
  bool is_multi = false;                          // M[...] vs T[...]
  std::vector<std::pair<FreeWord, int>> twists;   // expanded (word, power) list
};

/// Parse a product of `T[word]^n` and `M[word^n, ...]` factors.
std::vector<TwistFactor> parse_twist_expression(const std::string& src, int genus);

/// Flatten a twist expression into a single (word, power) sequence.
std::vector<std::pair<FreeWord, int>> flatten_twists(
    const std::vector<TwistFactor>& factors);

} // namespace magnus
