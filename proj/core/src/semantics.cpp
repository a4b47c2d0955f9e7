#include "fracterm/semantics.hpp"

#include <string>

#include "fracterm/error.hpp"

namespace fracterm {

Policy parse_policy(std::string_view name) {
  if (name == "partial") return Policy::partial;
  if (name == "suppes-ono") return Policy::suppes_ono;
  if (name == "common-meadow") return Policy::common_meadow;
  throw Error(ErrorKind::unsupported_operation, "unknown policy '" + std::string(name) + "'");
}

std::string_view to_string(Policy policy) {
  switch (policy) {
    case Policy::partial: return "partial";
    case Policy::suppes_ono: return "suppes-ono";
    case Policy::common_meadow: return "common-meadow";
  }
  return "?";
}

std::string_view to_string(Peripheral p) {
  switch (p) {
    case Peripheral::bottom: return "bot";
    case Peripheral::infinity: return "inf";
    case Peripheral::plus_infinity: return "+inf";
    case Peripheral::minus_infinity: return "-inf";
    case Peripheral::nan: return "nan";
  }
  return "?";
}

Fracvalue::Fracvalue(Instance number) : value_(std::move(number)) {}
Fracvalue::Fracvalue(Peripheral peripheral) : value_(peripheral) {}

bool Fracvalue::is_bottom() const noexcept {
  const auto* p = std::get_if<Peripheral>(&value_);
  return p && *p == Peripheral::bottom;
}

const Instance& Fracvalue::number() const {
  if (!is_number()) throw Error(ErrorKind::unsupported_peripheral, "fracvalue is peripheral");
  return std::get<Instance>(value_);
}

Peripheral Fracvalue::peripheral() const {
  if (is_number()) throw Error(ErrorKind::invalid_instance, "fracvalue is a number");
  return std::get<Peripheral>(value_);
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const EvalConfig& config) : config_(config) {}

  Fracvalue run(const Term& t) {
    switch (t.kind()) {
      case NodeKind::literal:
        return encode(literal_value(t), config_.shape);
      case NodeKind::variable:
        throw Error(ErrorKind::open_term, "cannot evaluate variable '" + t.text() + "'");
      case NodeKind::negate: {
        Fracvalue v = run(t.operand());
        if (!numeric(v)) return v;
        return shape_neg(v.number());
      }
      case NodeKind::add:
      case NodeKind::subtract:
      case NodeKind::multiply:
      case NodeKind::divide: {
        Fracvalue l = run(t.lhs());
        Fracvalue r = run(t.rhs());
        if (!numeric(l)) return l;
        if (!numeric(r)) return r;
        return combine(t.kind(), l.number(), r.number());
      }
      case NodeKind::numerator:
        return value_num(run(t.operand()));
      case NodeKind::denominator:
        return value_denom(run(t.operand()));
    }
    throw Error(ErrorKind::unsupported_operator, "unknown term node");
  }

 private:
  static bool numeric(const Fracvalue& v) {
    if (v.is_number() || v.is_bottom()) return v.is_number();
    throw Error(ErrorKind::unsupported_peripheral,
                "no arithmetic is defined on " + std::string(to_string(v.peripheral())));
  }

  Fracvalue combine(NodeKind op, const Instance& l, const Instance& r) {
    switch (op) {
      case NodeKind::add: return shape_add(l, r);
      case NodeKind::subtract: return shape_add(l, shape_neg(r));
      case NodeKind::multiply: return shape_mul(l, r);
      default: break;
    }
    if (is_zero(r)) {
      switch (config_.policy) {
        case Policy::partial:
          throw Error(ErrorKind::division_by_zero, "division by zero");
        case Policy::suppes_ono:
          return encode(0, config_.shape);
        case Policy::common_meadow:
          return Fracvalue::bottom();
      }
    }
    auto q = shape_div(l, r);
    if (!q || is_bottom_class(*q)) return Fracvalue::bottom();
    return *q;
  }

  const EvalConfig& config_;
};

Fracvalue eval_rns(const Term& t, const EvalConfig& config) {
  RnConfig rns = config.rns;
  const RatioNumber pair = rn_eval(t, rns);
  if (int_sign(pair.second) != 0) return Instance(pair);
  switch (config.policy) {
    case Policy::partial:
      throw Error(ErrorKind::division_by_zero, "ratio-number with zero second component");
    case Policy::suppes_ono:
      return Instance(rn_zero(rns.int_shape));
    case Policy::common_meadow:
      break;
  }
  return Fracvalue::bottom();
}

}  // namespace

Fracvalue eval(const Term& t, const EvalConfig& config) {
  if (label_of(config.shape) != Label::rat) {
    throw Error(ErrorKind::unsupported_shape, "evaluation needs a rat shape, got " +
                                                  std::string(to_string(config.shape)));
  }
  if (config.shape == ShapeId::rat_rns) return eval_rns(t, config);
  return Evaluator(config).run(t);
}

bool value_eq(const Fracvalue& v, const Fracvalue& w) {
  if (v.is_number() && w.is_number()) return label_eq(v.number(), w.number());
  if (v.is_number() || w.is_number()) return false;
  return v.peripheral() == w.peripheral();
}

Fracvalue value_num(const Fracvalue&) { return Fracvalue::bottom(); }
Fracvalue value_denom(const Fracvalue&) { return Fracvalue::bottom(); }

}  // namespace fracterm
