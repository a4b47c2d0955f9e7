#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracterm/integer.hpp"
#include "fracterm/term.hpp"

namespace fracterm {

struct RewriteStep {
  std::string rule;
  Term before;  // whole term before the step
  Term after;   // whole term after the step
};

using RewriteTrace = std::vector<RewriteStep>;

struct FlattenOptions {
  /// Finish by evaluating the division-free numerator and denominator to
  /// numerals, so 5/(1+3) becomes 5/4.
  bool fold_numerals = false;
};

struct FlattenResult {
  Term term;
  RewriteTrace trace;
};

/// Rewrites a closed term into a flat fracterm (or leaves a division-free term
/// alone), one leftmost-innermost step at a time. Rules:
///   sign-lift          -(a/b)           => (-a)/b
///   sum-lift           a/b + c/d        => (a*d + b*c)/(b*d), and the mixed forms
///   difference-lift    a/b - c/d        => (a*d - b*c)/(b*d), and the mixed forms
///   product-lift       a/b * c/d        => (a*c)/(b*d), and the mixed forms
///   nested-quotient    (a/b)/(c/d)      => (a*d)/(b*c)        when d is nonzero
///                                       => (a*d*d)/(b*c*d)    otherwise
///   quotient-lift-left (a/b)/c          => a/(b*c)
///   quotient-lift-right c/(a/b)         => (c*b)/a            when b is nonzero
///                                       => (c*b*b)/(a*b)      otherwise
/// Every step preserves the common-meadow value, including ⊥. Decorations are
/// erased first. Throws Error(open_term) on variables and
/// Error(unsupported_operator) on Num / Denom.
FlattenResult flatten(const Term& t, const FlattenOptions& options = {});

/// Replaces the numerator and denominator of a closed flat fracterm by their
/// integer values; a division-free term becomes a single numeral.
Term fold_numerals(const Term& t);

/// Value of a closed division-free term.
Integer evaluate_integer(const Term& t);

/// Simplified simple fracterm for a simple fracterm: sign on the numerator,
/// gcd 1, integer values as n/1. Throws Error(not_simple) and, for a zero
/// denominator, Error(undefined).
Term simplify(const Term& t);

/// n/1 => n; other terms are returned unchanged.
Term demote(const Term& t);

/// The components of the addition family +_add.
enum class AddStrategy { cross, same_denom, numeral, trivial };

/// "cross", "same-denom", "numeral", "trivial".
AddStrategy parse_strategy(std::string_view name);
std::string_view to_string(AddStrategy strategy);

/// cross:      flat a/b, c/d => (a*d + b*c)/(b*d)
/// same-denom: flat a/b, c/b => (a + c)/b; falls through to cross otherwise
/// numeral:    simple a/b, c/d => e/f with e = ad + bc and f = bd as numerals
/// trivial:    non-fracterms P, Q => P + Q
/// Throws Error(strategy_inapplicable) when the operands do not fit.
Term add_family(const Term& lhs, const Term& rhs, AddStrategy strategy);

/// Every applicable strategy with its result, in enumeration order.
std::vector<std::pair<AddStrategy, Term>> add_family_all(const Term& lhs, const Term& rhs);

/// (b = 0 and d = 0) or (b != 0 and d != 0 and a*d = b*c). Throws
/// Error(not_simple) unless both operands are simple fracterms.
bool simple_fracterm_eq(const Term& lhs, const Term& rhs);

}  // namespace fracterm
