#pragma once

#include "fracterm/integers.hpp"
#include "fracterm/term.hpp"

namespace fracterm {

/// A ratio-number (a, b) over a fixed integer shape. The pair itself is the
/// number: nothing is ever reduced, so (1,2) and (2,4) are different instances
/// that are merely label-equal.
struct RatioNumber {
  IntInstance first;
  IntInstance second;
};

/// Addition rule. cross_multiply is (a*d + b*c, b*d); verbatim is the literal
/// (a*c + b*d, b*d) rule kept for comparison experiments.
enum class RnAddition { cross_multiply, verbatim };

struct RnConfig {
  ShapeId int_shape = ShapeId::int_signed;
  RnAddition addition = RnAddition::cross_multiply;
};

RatioNumber rn_make(const Integer& a, const Integer& b, ShapeId int_shape = ShapeId::int_signed);

RatioNumber rn_zero(ShapeId int_shape = ShapeId::int_signed);  // (0,1)
RatioNumber rn_one(ShapeId int_shape = ShapeId::int_signed);   // (1,1)

RatioNumber rn_neg(const RatioNumber& x);                          // (-a, b)
RatioNumber rn_mul(const RatioNumber& x, const RatioNumber& y);    // (a*c, b*d)
RatioNumber rn_inv(const RatioNumber& x);                          // (b, a*s(b)^2)
RatioNumber rn_div(const RatioNumber& x, const RatioNumber& y);    // x * inv(y)
RatioNumber rn_add(const RatioNumber& x, const RatioNumber& y,
                   RnAddition rule = RnAddition::cross_multiply);
RatioNumber rn_num(const RatioNumber& x);    // (a, 1)
RatioNumber rn_denom(const RatioNumber& x);  // (b, 1)

/// (a,b) =_RN (c,d) iff a =_S c and b =_S d.
bool rn_instance_eq(const RatioNumber& x, const RatioNumber& y);
/// (b = 0 and d = 0) or (b != 0 and d != 0 and a*d = b*c).
bool rn_label_eq(const RatioNumber& x, const RatioNumber& y);

/// Interprets a closed term, including Num and Denom, in the ratio-number
/// algebra. Subtraction is addition of the negation. Throws Error(open_term) on
/// variables.
RatioNumber rn_eval(const Term& t, const RnConfig& config = {});

}  // namespace fracterm
