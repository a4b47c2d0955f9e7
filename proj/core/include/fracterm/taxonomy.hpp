#pragma once

#include <optional>
#include <string_view>

#include "fracterm/term.hpp"

namespace fracterm {

/// Syntactic classification of a term. Implications hold by construction:
/// simplified => simple => flat => is_fracterm, safe => simple, and proper is
/// engaged exactly when simple is true.
struct TaxonomyFlags {
  bool is_fracterm = false;
  bool closed = false;
  bool flat = false;
  bool simple = false;
  bool safe = false;
  bool simplified = false;
  std::optional<bool> proper;

  friend bool operator==(const TaxonomyFlags&, const TaxonomyFlags&) = default;
};

/// True iff the root of `t` is a division.
bool is_fracterm(const Term& t);

/// Decorations are ignored.
TaxonomyFlags classify(const Term& t);

/// Term-level numerator and denominator (with decorations erased).
/// Throw Error(not_a_fracterm) unless the root is a division.
Term numerator(const Term& t);
Term denominator(const Term& t);

/// Abstraction levels for fracsign occurrences, from concrete to abstract.
/// Fraxion is the unresolved union of the sign, term and value readings.
enum class Level { fracsign_occurrence, fracsign, fracterm, fracvalue, fraxion };

/// Position on the chain occurrence < sign < term < value; fraxion has no rank.
std::optional<int> abstraction_rank(Level level);

/// Short tags: "fso", "fs", "ft", "fv", "fx".
std::string_view to_string(Level level);
std::string_view long_name(Level level);
std::optional<Level> parse_level(std::string_view tag);

}  // namespace fracterm
