#include "fracterm/taxonomy.hpp"

#include "fracterm/error.hpp"

namespace fracterm {

bool is_fracterm(const Term& t) { return t.is_division(); }

TaxonomyFlags classify(const Term& t) {
  TaxonomyFlags flags;
  flags.closed = !contains_variable(t);
  flags.is_fracterm = is_fracterm(t);
  if (!flags.is_fracterm) return flags;

  const Term& top = t.lhs();
  const Term& bottom = t.rhs();
  flags.flat = !contains_division(top) && !contains_division(bottom);
  flags.simple = flags.flat && top.is_literal() && bottom.is_literal();
  if (!flags.simple) return flags;

  const Integer a = literal_value(top);
  const Integer b = literal_value(bottom);
  flags.safe = b != 0;
  flags.proper = abs(a) < abs(b);
  flags.simplified = flags.safe && b > 0 && gcd(a, b) == 1 && is_canonical_literal(top) &&
                     is_canonical_literal(bottom);
  return flags;
}

Term numerator(const Term& t) {
  if (!t.is_division()) {
    throw Error(ErrorKind::not_a_fracterm, "numerator: leading operator is not division");
  }
  return erase_decorations(t.lhs());
}

Term denominator(const Term& t) {
  if (!t.is_division()) {
    throw Error(ErrorKind::not_a_fracterm, "denominator: leading operator is not division");
  }
  return erase_decorations(t.rhs());
}

std::optional<int> abstraction_rank(Level level) {
  switch (level) {
    case Level::fracsign_occurrence: return 0;
    case Level::fracsign: return 1;
    case Level::fracterm: return 2;
    case Level::fracvalue: return 3;
    case Level::fraxion: return std::nullopt;
  }
  return std::nullopt;
}

std::string_view to_string(Level level) {
  switch (level) {
    case Level::fracsign_occurrence: return "fso";
    case Level::fracsign: return "fs";
    case Level::fracterm: return "ft";
    case Level::fracvalue: return "fv";
    case Level::fraxion: return "fx";
  }
  return "fx";
}

std::string_view long_name(Level level) {
  switch (level) {
    case Level::fracsign_occurrence: return "fracsign occurrence";
    case Level::fracsign: return "fracsign";
    case Level::fracterm: return "fracterm";
    case Level::fracvalue: return "fracvalue";
    case Level::fraxion: return "fraxion";
  }
  return "fraxion";
}

std::optional<Level> parse_level(std::string_view tag) {
  if (tag == "fso") return Level::fracsign_occurrence;
  if (tag == "fs") return Level::fracsign;
  if (tag == "ft") return Level::fracterm;
  if (tag == "fv") return Level::fracvalue;
  if (tag == "fx") return Level::fraxion;
  return std::nullopt;
}

}  // namespace fracterm
