#include "fracterm/json.hpp"

#include <algorithm>
#include <limits>

#include "fracterm/detail/decimal.hpp"
#include "fracterm/detail/decode.hpp"
#include "fracterm/syntax.hpp"

namespace fracterm::json {

namespace {

Json set_to_json(const FiniteSet& s) {
  Json out = Json::array();
  auto elements = s.elements();
  std::reverse(elements.begin(), elements.end());
  for (const FiniteSet& e : elements) out.push_back(set_to_json(e));
  return out;
}

std::string set_to_text(const FiniteSet& s) {
  if (s.empty()) return "∅";
  auto elements = s.elements();
  std::reverse(elements.begin(), elements.end());
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ", ";
    out += set_to_text(elements[i]);
  }
  return out + "}";
}

std::string dedekind_text(const Integer& k) { return "S^" + to_decimal(k) + "(0)"; }

Json elided(ShapeId shape, const Integer& value) {
  return Json{{"elided", std::string(to_string(shape))}, {"value", to_json(value)}};
}

std::string int_text(const IntInstance& x) {
  if (const auto* s = std::get_if<SignedInt>(&x)) {
    return (s->sign < 0 ? "-" : "") + s->magnitude;
  }
  const auto& p = std::get<DiffPairInt>(x);
  return "(" + p.plus.digits + "," + p.minus.digits + ")";
}

Json int_json(const IntInstance& x) {
  if (const auto* s = std::get_if<SignedInt>(&x)) return to_json(detail::decode_int(*s));
  const auto& p = std::get<DiffPairInt>(x);
  return Json::array({to_json(parse_integer(p.plus.digits)), to_json(parse_integer(p.minus.digits))});
}

Json step_json(const fractalk::StepVerdict& s) {
  Json step{{"index", s.index},
            {"claim", s.text},
            {"level", std::string(to_string(s.level))},
            {"status", std::string(fractalk::to_string(s.status))}};
  if (!s.reason.empty()) step["reason"] = s.reason;
  Json occs = Json::array();
  for (const auto& o : s.occurrences) {
    occs.push_back({{"position", o.position},
                    {"fracsign", format(o.fracsign)},
                    {"level", std::string(to_string(o.level))},
                    {"source", std::string(fractalk::to_string(o.source))}});
  }
  step["occurrences"] = occs;
  if (s.conflict) {
    step["conflict"] = {{"position", s.conflict->position},
                        {"expected", std::string(to_string(s.conflict->expected))},
                        {"found", std::string(to_string(s.conflict->found))}};
  }
  return step;
}

[[noreturn]] void bad(ShapeId shape, const std::string& what) {
  throw Error(ErrorKind::invalid_instance,
              "invalid " + std::string(to_string(shape)) + " instance: " + what);
}

Integer integer_of(const Json& j, ShapeId shape) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const Error&) {
    }
  }
  bad(shape, "expected an integer, got " + j.dump());
}

std::string digits_of(const Json& j, ShapeId shape) {
  const std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  if (!detail::decimal::is_digits(s)) bad(shape, "expected a digit string, got " + j.dump());
  return s;
}

FiniteSet set_of(const Json& j, ShapeId shape) {
  if (!j.is_array()) bad(shape, "expected nested arrays");
  std::vector<FiniteSet> elements;
  for (const Json& e : j) elements.push_back(set_of(e, shape));
  return FiniteSet::of(std::move(elements));
}

std::pair<Integer, Integer> pair_of(const Json& j, ShapeId shape) {
  if (!j.is_array() || j.size() != 2) bad(shape, "expected a pair [a, b]");
  return {integer_of(j[0], shape), integer_of(j[1], shape)};
}

Integer dedekind_of(const Json& j) {
  if (!j.is_string()) return integer_of(j, ShapeId::nat_dedekind);
  const std::string s = j.get<std::string>();
  if (s.rfind("S^", 0) == 0) {
    const auto open = s.find('(');
    if (open != std::string::npos && s.substr(open) == "(0)") {
      return parse_integer(s.substr(2, open - 2));
    }
  }
  Integer k = 0;
  std::string_view rest = s;
  while (rest.rfind("S(", 0) == 0 && rest.back() == ')') {
    rest = rest.substr(2, rest.size() - 3);
    ++k;
  }
  if (rest != "0") bad(ShapeId::nat_dedekind, "expected S^k(0) or S(...S(0)...)");
  return k;
}

}  // namespace

Json to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return to_decimal(value);
}

Json to_json(const Term& t) {
  static constexpr const char* kNames[] = {"lit", "var", "neg", "add", "sub", "mul",
                                           "div", "num", "denom"};
  Json out{{"node", kNames[static_cast<int>(t.kind())]}};
  switch (t.kind()) {
    case NodeKind::literal:
    case NodeKind::variable:
      out["text"] = t.text();
      break;
    case NodeKind::negate:
    case NodeKind::numerator:
    case NodeKind::denominator:
      out["operand"] = to_json(t.operand());
      break;
    default:
      if (t.is_division() && t.decoration() != Decoration::none) {
        out["decoration"] = t.decoration() == Decoration::fracterm ? "ft" : "fv";
      }
      out["lhs"] = to_json(t.lhs());
      out["rhs"] = to_json(t.rhs());
  }
  return out;
}

Json to_json(const TaxonomyFlags& f) {
  return Json{{"is_fracterm", f.is_fracterm}, {"closed", f.closed},   {"flat", f.flat},
              {"simple", f.simple},           {"safe", f.safe},       {"simplified", f.simplified},
              {"proper", f.proper ? Json(*f.proper) : Json(nullptr)}};
}

Json to_json(const Instance& instance) {
  return std::visit(
      [&](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DecimalNat> || std::is_same_v<T, StrictDecimalNat>) {
          return x.digits;
        } else if constexpr (std::is_same_v<T, DedekindNat>) {
          return dedekind_text(x.successors);
        } else if constexpr (std::is_same_v<T, VonNeumannNat>) {
          const auto v = detail::decode_integer(instance);
          if (v > kMaxRenderedVonNeumann) return elided(ShapeId::nat_vn, v);
          return set_to_json(x.set);
        } else if constexpr (std::is_same_v<T, ZermeloNat>) {
          const auto v = detail::decode_integer(instance);
          if (v > kMaxRenderedZermelo) return elided(ShapeId::nat_zermelo, v);
          return set_to_json(x.set);
        } else if constexpr (std::is_same_v<T, SignedInt> || std::is_same_v<T, DiffPairInt>) {
          return int_json(x);
        } else if constexpr (std::is_same_v<T, PairClass>) {
          return Json::array({to_json(x.a), to_json(x.b)});
        } else if constexpr (std::is_same_v<T, SsftRational>) {
          return format(x.term());
        } else {
          return Json::array({int_json(x.first), int_json(x.second)});
        }
      },
      instance);
}

std::string to_text(const Instance& instance) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DecimalNat> || std::is_same_v<T, StrictDecimalNat>) {
          return x.digits;
        } else if constexpr (std::is_same_v<T, DedekindNat>) {
          return dedekind_text(x.successors);
        } else if constexpr (std::is_same_v<T, VonNeumannNat> || std::is_same_v<T, ZermeloNat>) {
          const auto v = detail::decode_integer(instance);
          const unsigned cap = std::is_same_v<T, VonNeumannNat> ? kMaxRenderedVonNeumann
                                                                : kMaxRenderedZermelo;
          if (v > cap) return std::string(to_string(shape_of(instance))) + "(" + to_decimal(v) + ")";
          return set_to_text(x.set);
        } else if constexpr (std::is_same_v<T, SignedInt> || std::is_same_v<T, DiffPairInt>) {
          return int_text(x);
        } else if constexpr (std::is_same_v<T, PairClass>) {
          return "[(" + to_decimal(x.a) + "," + to_decimal(x.b) + ")]";
        } else if constexpr (std::is_same_v<T, SsftRational>) {
          return format(x.term());
        } else {
          return "(" + int_text(x.first) + "," + int_text(x.second) + ")";
        }
      },
      instance);
}

Json to_json(const Fracvalue& value) {
  if (value.is_number()) {
    return Json{{"kind", "number"},
                {"shape", std::string(to_string(shape_of(value.number())))},
                {"value", to_json(value.number())}};
  }
  return Json{{"kind", "peripheral"}, {"value", std::string(to_string(value.peripheral()))}};
}

std::string to_text(const Fracvalue& value) {
  if (value.is_number()) return to_text(value.number());
  return std::string(to_string(value.peripheral()));
}

Json to_json(const RewriteTrace& trace) {
  Json out = Json::array();
  for (const RewriteStep& s : trace) {
    out.push_back({{"rule", s.rule}, {"before", format(s.before)}, {"after", format(s.after)}});
  }
  return out;
}

Json to_json(const fractalk::Verdict& verdict) {
  Json overall;
  if (verdict.sound) {
    overall = {{"status", "sound"}};
  } else {
    overall = {{"status", "paradox-blocked"},
               {"step", *verdict.blocked_step},
               {"explanation", verdict.explanation}};
  }
  Json steps = Json::array();
  for (const auto& s : verdict.steps) steps.push_back(step_json(s));
  return Json{{"shape", std::string(to_string(verdict.shape))},
              {"disjoint", verdict.disjoint},
              {"overall", overall},
              {"steps", steps}};
}

Json to_json(const NormalityReport& report, ShapeId shape, unsigned bound) {
  Json out{{"shape", std::string(to_string(shape))},
           {"bound", bound},
           {"normal", report.normal},
           {"instances", report.instances}};
  if (report.witness) {
    out["witness"] = Json::array({to_json(report.witness->first), to_json(report.witness->second)});
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const Error& error) {
  Json e{{"kind", std::string(to_string(error.kind()))}, {"message", error.what()}};
  if (error.position()) e["position"] = *error.position();
  return Json{{"error", e}};
}

Instance parse_instance(std::string_view text, ShapeId shape) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) j = std::string(text);
  switch (shape) {
    case ShapeId::nat_dec:
      return make_decimal_nat(digits_of(j, shape));
    case ShapeId::nat_sdn:
      return make_strict_decimal_nat(digits_of(j, shape));
    case ShapeId::nat_dedekind: {
      const Integer k = dedekind_of(j);
      if (k < 0) bad(shape, "negative successor count");
      return DedekindNat{k};
    }
    case ShapeId::nat_vn:
    case ShapeId::nat_zermelo: {
      if (!j.is_array()) return encode(integer_of(j, shape), shape);
      const FiniteSet s = set_of(j, shape);
      if (shape == ShapeId::nat_vn) {
        if (!vn_value(s)) bad(shape, "not a von Neumann numeral");
        return VonNeumannNat{s};
      }
      if (!zermelo_value(s)) bad(shape, "not a Zermelo numeral");
      return ZermeloNat{s};
    }
    case ShapeId::int_signed:
      return encode(integer_of(j, shape), shape);
    case ShapeId::int_diffpair: {
      if (!j.is_array()) return encode(integer_of(j, shape), shape);
      if (j.size() != 2) bad(shape, "expected a pair [plus, minus]");
      return make_diff_pair(digits_of(j[0], shape), digits_of(j[1], shape));
    }
    case ShapeId::rat_pcs:
    case ShapeId::rat_rns: {
      if (j.is_array()) {
        const auto [a, b] = pair_of(j, shape);
        return encode_ratio(a, b, shape);
      }
      if (j.is_string() && j.get<std::string>().find('/') != std::string::npos) {
        const Term t = parse(j.get<std::string>());
        if (!t.is_division() || !t.lhs().is_literal() || !t.rhs().is_literal()) {
          bad(shape, "expected a simple fracterm a/b");
        }
        return encode_ratio(literal_value(t.lhs()), literal_value(t.rhs()), shape);
      }
      return encode(integer_of(j, shape), shape);
    }
    case ShapeId::rat_ssft: {
      if (j.is_string()) return SsftRational(parse(j.get<std::string>()));
      return encode(integer_of(j, shape), shape);
    }
  }
  bad(shape, "unknown shape");
}

}  // namespace fracterm::json
