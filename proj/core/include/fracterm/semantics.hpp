#pragma once

#include <string_view>
#include <variant>

#include "fracterm/ratio_number.hpp"
#include "fracterm/shape.hpp"
#include "fracterm/term.hpp"

namespace fracterm {

/// Division-by-zero convention.
///   partial:       x/0 is an error
///   suppes_ono:    x/0 = 0
///   common_meadow: x/0 = ⊥, and ⊥ absorbs every operation
enum class Policy { partial, suppes_ono, common_meadow };

/// "partial", "suppes-ono", "common-meadow".
Policy parse_policy(std::string_view name);
std::string_view to_string(Policy policy);

/// Non-number values adjoined to a number system. Only bottom is ever produced.
enum class Peripheral { bottom, infinity, plus_infinity, minus_infinity, nan };

std::string_view to_string(Peripheral p);

/// A number in a rational shape, or a peripheral.
class Fracvalue {
 public:
  Fracvalue(Instance number);
  Fracvalue(Peripheral peripheral);

  static Fracvalue bottom() { return Fracvalue(Peripheral::bottom); }

  bool is_number() const noexcept { return std::holds_alternative<Instance>(value_); }
  bool is_bottom() const noexcept;
  const Instance& number() const;
  Peripheral peripheral() const;

 private:
  std::variant<Instance, Peripheral> value_;
};

struct EvalConfig {
  Policy policy = Policy::common_meadow;
  /// Must be a rat shape.
  ShapeId shape = ShapeId::rat_pcs;
  /// Used only when shape is rat.rns.
  RnConfig rns;
};

/// Evaluates a closed term. Num and Denom evaluate to ⊥ outside rat.rns. On
/// rat.rns the term goes through rn_eval and a pair with zero second component
/// is then read according to the policy (⊥, zero, or DivisionByZero).
/// Throws Error(open_term), Error(division_by_zero) under partial, and
/// Error(unsupported_shape) for non-rational shapes.
Fracvalue eval(const Term& t, const EvalConfig& config = {});

/// ≡_L on numbers; peripherals equal only themselves. Throws on shape mismatch.
bool value_eq(const Fracvalue& v, const Fracvalue& w);

/// Fracvalues do not split into numerator and denominator: always ⊥.
Fracvalue value_num(const Fracvalue& v);
Fracvalue value_denom(const Fracvalue& v);

}  // namespace fracterm
