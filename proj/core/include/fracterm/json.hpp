#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fracterm/error.hpp"
#include "fracterm/fractalk.hpp"
#include "fracterm/normality.hpp"
#include "fracterm/rewrite.hpp"
#include "fracterm/semantics.hpp"
#include "fracterm/shape.hpp"
#include "fracterm/taxonomy.hpp"

// Stable JSON and plain-text renderings shared by the CLI and the tests. Keys
// keep insertion order.
namespace fracterm::json {

using Json = nlohmann::ordered_json;

/// Von Neumann numerals above this value are elided instead of expanded.
inline constexpr unsigned kMaxRenderedVonNeumann = 12;
/// Zermelo numerals above this depth are elided.
inline constexpr unsigned kMaxRenderedZermelo = 256;

Json to_json(const Integer& value);  // number when it fits in int64, else string
/// Syntax tree: {"node": "div", "decoration": "ft", "lhs": ..., "rhs": ...}.
Json to_json(const Term& term);
Json to_json(const TaxonomyFlags& flags);
Json to_json(const Instance& instance);
Json to_json(const Fracvalue& value);
Json to_json(const RewriteTrace& trace);
Json to_json(const fractalk::Verdict& verdict);
Json to_json(const NormalityReport& report, ShapeId shape, unsigned bound);
Json to_json(const Error& error);

std::string to_text(const Instance& instance);
std::string to_text(const Fracvalue& value);

/// Reads an instance of `shape` from user input. JSON is tried first (numbers,
/// strings, nested arrays, pairs); anything else is taken as a raw string, so
/// "007" and "2/3" work unquoted. Dedekind numerals accept "S^k(0)" and
/// "S(S(0))". Throws Error(invalid_instance).
Instance parse_instance(std::string_view text, ShapeId shape);

}  // namespace fracterm::json
