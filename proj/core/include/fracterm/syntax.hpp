#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "fracterm/term.hpp"

namespace fracterm {

/// Operator format used for division when reading and writing terms.
///   inline_slash: 1/2      colon: 1:2      fraction: frac(1, 2)
/// Decorated divisions are written "/ft", ":fv", "frac_ft(..)" and so on.
enum class Notation { inline_slash, colon, fraction };

/// "inline", "colon", "frac" (also accepts "latex-fraction").
Notation parse_notation(std::string_view name);
std::string_view to_string(Notation notation);

/// Parses a whole term; trailing input is a syntax error.
Term parse(std::string_view text, Notation notation = Notation::inline_slash);

struct PrefixParse {
  Term term;
  std::size_t end;  // offset just past the term (trailing spaces not consumed)
};

/// Parses the longest term starting at `pos` and stops at the first character
/// that cannot continue it. Used to embed terms in larger line formats.
PrefixParse parse_prefix(std::string_view text, std::size_t pos,
                         Notation notation = Notation::inline_slash);

/// Prints `t` so that parse(format(t, n), n) == t.
std::string format(const Term& t, Notation notation = Notation::inline_slash);

}  // namespace fracterm
