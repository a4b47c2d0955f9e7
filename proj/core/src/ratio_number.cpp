#include "fracterm/ratio_number.hpp"

#include "fracterm/error.hpp"

namespace fracterm {

namespace {

bool is_zero(const IntInstance& x) { return int_sign(x) == 0; }

IntInstance one_like(const IntInstance& x) { return int_encode(1, int_shape_of(x)); }

}  // namespace

RatioNumber rn_make(const Integer& a, const Integer& b, ShapeId int_shape) {
  return {int_encode(a, int_shape), int_encode(b, int_shape)};
}

RatioNumber rn_zero(ShapeId int_shape) { return rn_make(0, 1, int_shape); }
RatioNumber rn_one(ShapeId int_shape) { return rn_make(1, 1, int_shape); }

RatioNumber rn_neg(const RatioNumber& x) { return {int_neg(x.first), x.second}; }

RatioNumber rn_mul(const RatioNumber& x, const RatioNumber& y) {
  return {int_mul(x.first, y.first), int_mul(x.second, y.second)};
}

RatioNumber rn_inv(const RatioNumber& x) {
  const int s = int_sign(x.second);
  const IntInstance s2 = int_encode(s * s, int_shape_of(x.second));
  return {x.second, int_mul(x.first, s2)};
}

RatioNumber rn_div(const RatioNumber& x, const RatioNumber& y) { return rn_mul(x, rn_inv(y)); }

RatioNumber rn_add(const RatioNumber& x, const RatioNumber& y, RnAddition rule) {
  const IntInstance bd = int_mul(x.second, y.second);
  if (rule == RnAddition::verbatim) {
    return {int_add(int_mul(x.first, y.first), bd), bd};
  }
  return {int_add(int_mul(x.first, y.second), int_mul(x.second, y.first)), bd};
}

RatioNumber rn_num(const RatioNumber& x) { return {x.first, one_like(x.first)}; }
RatioNumber rn_denom(const RatioNumber& x) { return {x.second, one_like(x.second)}; }

bool rn_instance_eq(const RatioNumber& x, const RatioNumber& y) {
  return int_instance_eq(x.first, y.first) && int_instance_eq(x.second, y.second);
}

bool rn_label_eq(const RatioNumber& x, const RatioNumber& y) {
  const bool bz = is_zero(x.second);
  const bool dz = is_zero(y.second);
  if (bz || dz) return bz && dz;
  return int_label_eq(int_mul(x.first, y.second), int_mul(x.second, y.first));
}

RatioNumber rn_eval(const Term& t, const RnConfig& config) {
  switch (t.kind()) {
    case NodeKind::literal:
      return rn_make(literal_value(t), 1, config.int_shape);
    case NodeKind::variable:
      throw Error(ErrorKind::open_term, "cannot evaluate variable '" + t.text() + "'");
    case NodeKind::negate:
      return rn_neg(rn_eval(t.operand(), config));
    case NodeKind::add:
      return rn_add(rn_eval(t.lhs(), config), rn_eval(t.rhs(), config), config.addition);
    case NodeKind::subtract:
      return rn_add(rn_eval(t.lhs(), config), rn_neg(rn_eval(t.rhs(), config)), config.addition);
    case NodeKind::multiply:
      return rn_mul(rn_eval(t.lhs(), config), rn_eval(t.rhs(), config));
    case NodeKind::divide:
      return rn_div(rn_eval(t.lhs(), config), rn_eval(t.rhs(), config));
    case NodeKind::numerator:
      return rn_num(rn_eval(t.operand(), config));
    case NodeKind::denominator:
      return rn_denom(rn_eval(t.operand(), config));
  }
  throw Error(ErrorKind::unsupported_operator, "unknown term node");
}

}  // namespace fracterm
