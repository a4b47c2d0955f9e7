#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracterm/integer.hpp"
#include "fracterm/shape_id.hpp"
#include "fracterm/taxonomy.hpp"
#include "fracterm/term.hpp"

namespace fracterm::fractalk {

enum class ClaimKind {
  has_numerator,               // num(t) = n
  has_denominator,             // denom(t) = n
  numerator_parity,            // num(t) is even|odd
  denominator_parity,          // denom(t) is even|odd
  unique_numerator,            // unique numerator
  equals,                      // t == r
  compares,                    // t < r, t > r, t <= r, t >= r
  is_rational,                 // t is [not] rational
  may_be_rational,             // t may be rational
  is_fracterm,                 // t is fracterm
  is_fraxion,                  // t is fraxion
  fracterm_and_fracvalue,      // t is fracterm and fracvalue
  taxonomy,                    // t is [not] flat|simple|... [and ...]
  can_be_simplified,           // t can be simplified
  is_integer,                  // t is integer | t is even [integer]
  written_as,                  // t can be written as r
  contradicts,                 // t contradicts k
  not_all_fracterms_rational,  // not all fracterms are rational [: t]
  rationals_not_fracterms,     // rationals are not fracterms
  rationals_are_fraxions,      // rationals are fraxions
  not_all_fraxions_rational,   // not all fraxions are rational
  level_directive,             // level(k) = lvl
  conclude,                    // conclude n = m
  definitional,                // def: fraction is <word>
};

std::string_view to_string(ClaimKind kind);

struct Claim {
  ClaimKind kind;
  /// Fracsign occurrences in order of appearance, decorations kept.
  std::vector<Term> terms;
  Integer lhs_numeral = 0;  // n in num(t) = n, conclude n = m
  Integer rhs_numeral = 0;  // m in conclude n = m
  bool positive = true;     // false for "is not ..."
  bool even = true;         // parity claims and "is even"
  bool require_even = false;
  std::vector<std::string> flags;  // taxonomy flags, all asserted together
  std::string relation;     // "<", ">", "<=" or ">="
  std::size_t target = 0;   // referenced assertion index
  Level level = Level::fracvalue;  // directive level / definitional reading
  std::string word;         // definitional word
};

struct Line {
  std::size_t index;        // assertion number as written
  std::size_t line_number;  // 1-based line in the source text
  std::string text;         // claim text without index and annotation
  Claim claim;
  std::optional<Level> annotation;
};

struct Script {
  std::vector<Line> lines;
  /// Set by a "%shape <id>" pragma.
  std::optional<ShapeId> shape;
};

/// Line grammar: "<index>: <claim> [@fso|@fs|@ft|@fv|@fx]". Blank lines and
/// lines starting with '#' are ignored; "%shape <id>" selects the rational shape.
/// Throws Error(syntax) with the line number, and Error(dangling_reference) for
/// level(k) / contradicts k naming a missing assertion.
Script parse_script(std::string_view text);

/// Where an occurrence got its level, strongest first.
enum class LevelSource { annotation, decoration, directive, definitional, claim, fallback };

std::string_view to_string(LevelSource source);

struct Occurrence {
  std::size_t step;      // assertion index
  std::size_t position;  // 1-based within the assertion
  Term fracsign;         // decorations erased
  Level level;
  LevelSource source;
};

struct LevelConflict {
  std::size_t step;
  std::size_t position;  // 0 when the conflict concerns the whole assertion
  Level expected;
  Level found;
  std::string detail;
};

struct LeveledLine {
  Level level;  // level of the assertion itself
  LevelSource source;
  std::vector<Occurrence> occurrences;
  std::optional<LevelConflict> conflict;
};

struct LeveledScript {
  Script script;
  std::vector<LeveledLine> lines;  // parallel to script.lines
};

/// Level inference. Priority: annotation or decoration, then level(k) directives,
/// then the latest definitional claim, then the level the claim forces, then
/// fracvalue. Fraxion readings of claims that force a level are refined to it.
/// Conflicting explicit sources are recorded per line.
LeveledScript assign_levels(const Script& script);

/// As assign_levels, but throws Error(level_conflict) on the first conflict.
LeveledScript infer_levels(const Script& script);

struct CheckConfig {
  /// Overrides the script's %shape pragma; defaults to rat.pcs.
  std::optional<ShapeId> shape;
  /// Whether fracterms and fracvalues are disjoint collections. Defaults to
  /// true except under rat.ssft.
  std::optional<bool> disjoint;
};

enum class StepStatus { valid, invalid, level_conflict };

std::string_view to_string(StepStatus status);

struct StepVerdict {
  std::size_t index;
  std::string text;
  Level level;
  StepStatus status;
  std::string reason;  // empty when valid
  std::vector<Occurrence> occurrences;
  std::optional<LevelConflict> conflict;
};

struct Verdict {
  std::vector<StepVerdict> steps;
  bool sound = true;
  std::optional<std::size_t> blocked_step;
  std::string explanation;
  ShapeId shape = ShapeId::rat_pcs;
  bool disjoint = true;
};

/// Checks each claim at its assigned level against the term taxonomy and
/// common-meadow evaluation. The verdict is sound when every step is valid,
/// and paradox-blocked at the first step that is not.
Verdict check(const Script& script, const CheckConfig& config = {});
Verdict check_text(std::string_view text, const CheckConfig& config = {});

}  // namespace fracterm::fractalk
