#include "fracterm/rewrite.hpp"

#include <optional>
#include <string>

#include "fracterm/error.hpp"
#include "fracterm/syntax.hpp"
#include "fracterm/taxonomy.hpp"

namespace fracterm {

namespace {

using Rewrite = std::optional<std::pair<std::string, Term>>;

Term mul(Term a, Term b) { return Term::multiply(std::move(a), std::move(b)); }

bool nonzero(const Term& t) { return evaluate_integer(t) != 0; }

Rewrite rewrite_root(const Term& t) {
  switch (t.kind()) {
    case NodeKind::negate: {
      const Term& x = t.operand();
      if (!x.is_division()) return std::nullopt;
      return std::pair{std::string("sign-lift"), Term::divide(Term::negate(x.lhs()), x.rhs())};
    }
    case NodeKind::add:
    case NodeKind::subtract: {
      const Term& x = t.lhs();
      const Term& y = t.rhs();
      const std::string rule = t.kind() == NodeKind::add ? "sum-lift" : "difference-lift";
      auto join = [&](Term l, Term r) { return Term::binary(t.kind(), std::move(l), std::move(r)); };
      if (x.is_division() && y.is_division()) {
        const Term &a = x.lhs(), &b = x.rhs(), &c = y.lhs(), &d = y.rhs();
        return std::pair{rule, Term::divide(join(mul(a, d), mul(b, c)), mul(b, d))};
      }
      if (x.is_division()) {
        const Term &a = x.lhs(), &b = x.rhs();
        return std::pair{rule, Term::divide(join(a, mul(b, y)), b)};
      }
      if (y.is_division()) {
        const Term &a = y.lhs(), &b = y.rhs();
        return std::pair{rule, Term::divide(join(mul(x, b), a), b)};
      }
      return std::nullopt;
    }
    case NodeKind::multiply: {
      const Term& x = t.lhs();
      const Term& y = t.rhs();
      if (x.is_division() && y.is_division()) {
        return std::pair{std::string("product-lift"),
                         Term::divide(mul(x.lhs(), y.lhs()), mul(x.rhs(), y.rhs()))};
      }
      if (x.is_division()) {
        return std::pair{std::string("product-lift"), Term::divide(mul(x.lhs(), y), x.rhs())};
      }
      if (y.is_division()) {
        return std::pair{std::string("product-lift"), Term::divide(mul(x, y.lhs()), y.rhs())};
      }
      return std::nullopt;
    }
    case NodeKind::divide: {
      const Term& x = t.lhs();
      const Term& y = t.rhs();
      if (x.is_division() && y.is_division()) {
        const Term &a = x.lhs(), &b = x.rhs(), &c = y.lhs(), &d = y.rhs();
        if (nonzero(d)) {
          return std::pair{std::string("nested-quotient"), Term::divide(mul(a, d), mul(b, c))};
        }
        return std::pair{std::string("nested-quotient"),
                         Term::divide(mul(mul(a, d), d), mul(mul(b, c), d))};
      }
      if (x.is_division()) {
        return std::pair{std::string("quotient-lift-left"),
                         Term::divide(x.lhs(), mul(x.rhs(), y))};
      }
      if (y.is_division()) {
        const Term &a = y.lhs(), &b = y.rhs();
        if (nonzero(b)) {
          return std::pair{std::string("quotient-lift-right"), Term::divide(mul(x, b), a)};
        }
        return std::pair{std::string("quotient-lift-right"),
                         Term::divide(mul(mul(x, b), b), mul(a, b))};
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

// One leftmost-innermost step.
Rewrite step(const Term& t) {
  switch (t.kind()) {
    case NodeKind::literal:
      return std::nullopt;
    case NodeKind::variable:
      throw Error(ErrorKind::open_term, "flatten needs a closed term, found '" + t.text() + "'");
    case NodeKind::numerator:
    case NodeKind::denominator:
      throw Error(ErrorKind::unsupported_operator, "flatten is not defined on Num / Denom");
    case NodeKind::negate:
      if (auto inner = step(t.operand())) {
        return std::pair{inner->first, Term::negate(inner->second)};
      }
      return rewrite_root(t);
    default:
      break;
  }
  if (auto inner = step(t.lhs())) {
    return std::pair{inner->first, Term::binary(t.kind(), inner->second, t.rhs())};
  }
  if (auto inner = step(t.rhs())) {
    return std::pair{inner->first, Term::binary(t.kind(), t.lhs(), inner->second)};
  }
  return rewrite_root(t);
}

void require_simple(const Term& t) {
  if (!classify(t).simple) {
    throw Error(ErrorKind::not_simple, "'" + format(t) + "' is not a simple fracterm");
  }
}

bool is_flat_fracterm(const Term& t) { return classify(t).flat; }

}  // namespace

FlattenResult flatten(const Term& t, const FlattenOptions& options) {
  FlattenResult result{erase_decorations(t), {}};
  while (auto next = step(result.term)) {
    result.trace.push_back({next->first, result.term, next->second});
    result.term = next->second;
  }
  if (options.fold_numerals) {
    Term folded = fold_numerals(result.term);
    if (!(folded == result.term)) {
      result.trace.push_back({"fold-numerals", result.term, folded});
      result.term = folded;
    }
  }
  return result;
}

Integer evaluate_integer(const Term& t) {
  switch (t.kind()) {
    case NodeKind::literal: return literal_value(t);
    case NodeKind::variable:
      throw Error(ErrorKind::open_term, "cannot evaluate variable '" + t.text() + "'");
    case NodeKind::negate: return -evaluate_integer(t.operand());
    case NodeKind::add: return evaluate_integer(t.lhs()) + evaluate_integer(t.rhs());
    case NodeKind::subtract: return evaluate_integer(t.lhs()) - evaluate_integer(t.rhs());
    case NodeKind::multiply: return evaluate_integer(t.lhs()) * evaluate_integer(t.rhs());
    default:
      throw Error(ErrorKind::unsupported_operator,
                  "'" + format(t) + "' is not a division-free term");
  }
}

Term fold_numerals(const Term& t) {
  if (t.is_division()) {
    return Term::divide(Term::literal(evaluate_integer(t.lhs())),
                        Term::literal(evaluate_integer(t.rhs())), t.decoration());
  }
  return Term::literal(evaluate_integer(t));
}

Term simplify(const Term& t) {
  require_simple(t);
  const Integer a = literal_value(t.lhs());
  const Integer b = literal_value(t.rhs());
  if (b == 0) {
    throw Error(ErrorKind::undefined, "'" + format(t) + "' has a zero denominator");
  }
  Integer g = gcd(a, b);
  Integer x = a / g;
  Integer y = b / g;
  if (y < 0) {
    x = -x;
    y = -y;
  }
  return Term::divide(Term::literal(x), Term::literal(y));
}

Term demote(const Term& t) {
  if (t.is_division() && t.rhs().is_literal() && t.lhs().is_literal() &&
      literal_value(t.rhs()) == 1) {
    return t.lhs();
  }
  return t;
}

AddStrategy parse_strategy(std::string_view name) {
  if (name == "cross") return AddStrategy::cross;
  if (name == "same-denom") return AddStrategy::same_denom;
  if (name == "numeral") return AddStrategy::numeral;
  if (name == "trivial") return AddStrategy::trivial;
  throw Error(ErrorKind::strategy_inapplicable, "unknown strategy '" + std::string(name) + "'");
}

std::string_view to_string(AddStrategy strategy) {
  switch (strategy) {
    case AddStrategy::cross: return "cross";
    case AddStrategy::same_denom: return "same-denom";
    case AddStrategy::numeral: return "numeral";
    case AddStrategy::trivial: return "trivial";
  }
  return "?";
}

Term add_family(const Term& lhs, const Term& rhs, AddStrategy strategy) {
  const Term p = erase_decorations(lhs);
  const Term q = erase_decorations(rhs);
  auto inapplicable = [&](const char* need) {
    return Error(ErrorKind::strategy_inapplicable,
                 std::string(to_string(strategy)) + " needs " + need + " operands");
  };
  switch (strategy) {
    case AddStrategy::same_denom:
      if (!is_flat_fracterm(p) || !is_flat_fracterm(q)) throw inapplicable("flat fracterm");
      if (p.rhs() == q.rhs()) return Term::divide(Term::add(p.lhs(), q.lhs()), p.rhs());
      [[fallthrough]];
    case AddStrategy::cross: {
      if (!is_flat_fracterm(p) || !is_flat_fracterm(q)) throw inapplicable("flat fracterm");
      const Term &a = p.lhs(), &b = p.rhs(), &c = q.lhs(), &d = q.rhs();
      return Term::divide(Term::add(mul(a, d), mul(b, c)), mul(b, d));
    }
    case AddStrategy::numeral: {
      if (!classify(p).simple || !classify(q).simple) throw inapplicable("simple fracterm");
      const Integer a = literal_value(p.lhs()), b = literal_value(p.rhs());
      const Integer c = literal_value(q.lhs()), d = literal_value(q.rhs());
      return Term::divide(Term::literal(a * d + b * c), Term::literal(b * d));
    }
    case AddStrategy::trivial:
      if (is_fracterm(p) || is_fracterm(q)) throw inapplicable("non-fracterm");
      return Term::add(p, q);
  }
  throw inapplicable("known");
}

std::vector<std::pair<AddStrategy, Term>> add_family_all(const Term& lhs, const Term& rhs) {
  std::vector<std::pair<AddStrategy, Term>> out;
  for (AddStrategy s : {AddStrategy::cross, AddStrategy::same_denom, AddStrategy::numeral,
                        AddStrategy::trivial}) {
    try {
      out.emplace_back(s, add_family(lhs, rhs, s));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::strategy_inapplicable) throw;
    }
  }
  return out;
}

bool simple_fracterm_eq(const Term& lhs, const Term& rhs) {
  require_simple(lhs);
  require_simple(rhs);
  const Integer a = literal_value(lhs.lhs()), b = literal_value(lhs.rhs());
  const Integer c = literal_value(rhs.lhs()), d = literal_value(rhs.rhs());
  if (b == 0 || d == 0) return b == 0 && d == 0;
  return a * d == b * c;
}

}  // namespace fracterm
