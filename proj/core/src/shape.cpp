#include "fracterm/shape.hpp"

#include <string>

#include "fracterm/detail/decimal.hpp"
#include "fracterm/detail/decode.hpp"
#include "fracterm/error.hpp"
#include "fracterm/taxonomy.hpp"

namespace fracterm {

namespace dec = detail::decimal;

PairClass make_pair_class(const Integer& a, const Integer& b) {
  if (b == 0) return {0, 0};
  Integer g = gcd(a, b);
  Integer x = a / g;
  Integer y = b / g;
  if (y < 0) {
    x = -x;
    y = -y;
  }
  return {x, y};
}

SsftRational::SsftRational(Term t) : term_(std::move(t)) {
  if (!classify(term_).simplified) {
    throw Error(ErrorKind::invalid_instance,
                "rat.ssft instances must be simplified simple fracterms");
  }
  numerator_ = literal_value(term_.lhs());
  denominator_ = literal_value(term_.rhs());
}

SsftRational SsftRational::from_pair(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(ErrorKind::undefined, "rat.ssft has no instance for a zero denominator");
  const PairClass p = make_pair_class(a, b);
  return SsftRational(Term::divide(Term::literal(p.a), Term::literal(p.b)));
}

namespace {

constexpr ShapeId kShapeOrder[] = {
    ShapeId::nat_dec,      ShapeId::nat_sdn, ShapeId::nat_dedekind, ShapeId::nat_vn,
    ShapeId::nat_zermelo,  ShapeId::int_signed, ShapeId::int_diffpair, ShapeId::rat_pcs,
    ShapeId::rat_ssft,     ShapeId::rat_rns};

void require_same_shape(const Instance& i, const Instance& j) {
  if (i.index() != j.index()) {
    throw Error(ErrorKind::shape_mismatch, "cannot combine " + std::string(to_string(shape_of(i))) +
                                               " and " + std::string(to_string(shape_of(j))));
  }
}

unsigned long long set_index(const Integer& k) {
  if (k > kSetNatCapacity) {
    throw Error(ErrorKind::capacity, "set-theoretic numerals are capped at " +
                                         std::to_string(kSetNatCapacity) + ", requested " +
                                         to_decimal(k));
  }
  return static_cast<unsigned long long>(k);
}

[[noreturn]] void unsupported(const Instance& i, const char* op) {
  throw Error(ErrorKind::unsupported_operation,
              std::string(op) + " is not defined on " + std::string(to_string(shape_of(i))));
}

}  // namespace

ShapeId shape_of(const Instance& i) { return kShapeOrder[i.index()]; }

Label label_of(const Instance& i) { return label_of(shape_of(i)); }

Instance encode(const Integer& k, ShapeId shape) {
  if (label_of(shape) == Label::nat && k < 0) {
    throw Error(ErrorKind::negative_into_nat,
                "cannot encode " + to_decimal(k) + " in " + std::string(to_string(shape)));
  }
  switch (shape) {
    case ShapeId::nat_dec: return DecimalNat{to_decimal(k)};
    case ShapeId::nat_sdn: return StrictDecimalNat{to_decimal(k)};
    case ShapeId::nat_dedekind: return DedekindNat{k};
    case ShapeId::nat_vn: return vn_encode(set_index(k));
    case ShapeId::nat_zermelo: return zermelo_encode(set_index(k));
    case ShapeId::int_signed:
      return std::get<SignedInt>(int_encode(k, shape));
    case ShapeId::int_diffpair:
      return std::get<DiffPairInt>(int_encode(k, shape));
    case ShapeId::rat_pcs:
    case ShapeId::rat_ssft:
    case ShapeId::rat_rns:
      return encode_ratio(k, 1, shape);
  }
  throw Error(ErrorKind::unsupported_shape, "unknown shape");
}

Instance encode_ratio(const Integer& a, const Integer& b, ShapeId shape) {
  switch (shape) {
    case ShapeId::rat_pcs: return make_pair_class(a, b);
    case ShapeId::rat_ssft: return SsftRational::from_pair(a, b);
    case ShapeId::rat_rns: return rn_make(a, b);
    default:
      throw Error(ErrorKind::unsupported_shape,
                  std::string(to_string(shape)) + " is not a rational shape");
  }
}

bool instance_eq(const Instance& i, const Instance& j) {
  require_same_shape(i, j);
  if (const auto* x = std::get_if<SsftRational>(&i)) {
    return x->term() == std::get<SsftRational>(j).term();
  }
  if (const auto* x = std::get_if<RatioNumber>(&i)) {
    return rn_instance_eq(*x, std::get<RatioNumber>(j));
  }
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SsftRational> || std::is_same_v<T, RatioNumber>) {
          return false;
        } else {
          return x == std::get<T>(j);
        }
      },
      i);
}

bool label_eq(const Instance& i, const Instance& j) {
  require_same_shape(i, j);
  if (const auto* x = std::get_if<DecimalNat>(&i)) {
    return dec::compare(x->digits, std::get<DecimalNat>(j).digits) == 0;
  }
  if (const auto* x = std::get_if<DiffPairInt>(&i)) {
    return int_label_eq(*x, std::get<DiffPairInt>(j));
  }
  if (const auto* x = std::get_if<RatioNumber>(&i)) {
    return rn_label_eq(*x, std::get<RatioNumber>(j));
  }
  return instance_eq(i, j);
}

Instance shape_add(const Instance& i, const Instance& j) {
  require_same_shape(i, j);
  return std::visit(
      [&](const auto& x) -> Instance {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(j);
        if constexpr (std::is_same_v<T, SignedInt> || std::is_same_v<T, DiffPairInt>) {
          return std::visit([](const auto& r) -> Instance { return r; },
                            int_add(IntInstance(x), IntInstance(y)));
        } else if constexpr (std::is_same_v<T, PairClass>) {
          return make_pair_class(x.a * y.b + x.b * y.a, x.b * y.b);
        } else if constexpr (std::is_same_v<T, SsftRational>) {
          return SsftRational::from_pair(
              x.numerator() * y.denominator() + x.denominator() * y.numerator(),
              x.denominator() * y.denominator());
        } else if constexpr (std::is_same_v<T, RatioNumber>) {
          return rn_add(x, y);
        } else {
          return nat_add(x, y);
        }
      },
      i);
}

Instance shape_mul(const Instance& i, const Instance& j) {
  require_same_shape(i, j);
  return std::visit(
      [&](const auto& x) -> Instance {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(j);
        if constexpr (std::is_same_v<T, SignedInt> || std::is_same_v<T, DiffPairInt>) {
          return std::visit([](const auto& r) -> Instance { return r; },
                            int_mul(IntInstance(x), IntInstance(y)));
        } else if constexpr (std::is_same_v<T, PairClass>) {
          return make_pair_class(x.a * y.a, x.b * y.b);
        } else if constexpr (std::is_same_v<T, SsftRational>) {
          return SsftRational::from_pair(x.numerator() * y.numerator(),
                                         x.denominator() * y.denominator());
        } else if constexpr (std::is_same_v<T, RatioNumber>) {
          return rn_mul(x, y);
        } else {
          return nat_mul(x, y);
        }
      },
      i);
}

Instance shape_neg(const Instance& i) {
  if (const auto* x = std::get_if<SignedInt>(&i)) return std::get<SignedInt>(int_neg(*x));
  if (const auto* x = std::get_if<DiffPairInt>(&i)) return std::get<DiffPairInt>(int_neg(*x));
  if (const auto* x = std::get_if<PairClass>(&i)) return PairClass{-x->a, x->b};
  if (const auto* x = std::get_if<SsftRational>(&i)) {
    return SsftRational::from_pair(-x->numerator(), x->denominator());
  }
  if (const auto* x = std::get_if<RatioNumber>(&i)) return rn_neg(*x);
  unsupported(i, "negation");
}

std::optional<Instance> shape_div(const Instance& i, const Instance& j) {
  require_same_shape(i, j);
  if (const auto* x = std::get_if<PairClass>(&i)) {
    const auto& y = std::get<PairClass>(j);
    if (x->b == 0 || y.b == 0 || y.a == 0) return PairClass{0, 0};
    return make_pair_class(x->a * y.b, x->b * y.a);
  }
  if (const auto* x = std::get_if<SsftRational>(&i)) {
    const auto& y = std::get<SsftRational>(j);
    if (y.numerator() == 0) return std::nullopt;
    return SsftRational::from_pair(x->numerator() * y.denominator(),
                                   x->denominator() * y.numerator());
  }
  if (const auto* x = std::get_if<RatioNumber>(&i)) return rn_div(*x, std::get<RatioNumber>(j));
  unsupported(i, "division");
}

bool is_zero(const Instance& i) {
  if (const auto* x = std::get_if<PairClass>(&i)) return x->a == 0 && x->b != 0;
  if (const auto* x = std::get_if<SsftRational>(&i)) return x->numerator() == 0;
  if (const auto* x = std::get_if<RatioNumber>(&i)) {
    return int_sign(x->first) == 0 && int_sign(x->second) != 0;
  }
  return detail::decode_integer(i) == 0;
}

bool is_bottom_class(const Instance& i) {
  if (const auto* x = std::get_if<PairClass>(&i)) return x->b == 0;
  if (const auto* x = std::get_if<RatioNumber>(&i)) return int_sign(x->second) == 0;
  return false;
}

Instance convert(const Instance& i, ShapeId target) {
  if (label_of(i) != label_of(target)) {
    throw Error(ErrorKind::label_mismatch, "cannot convert " + std::string(to_string(shape_of(i))) +
                                               " to " + std::string(to_string(target)));
  }
  if (shape_of(i) == target) return i;
  if (label_of(target) != Label::rat) return encode(detail::decode_integer(i), target);
  const auto value = detail::decode(i);
  if (!value) {
    if (target == ShapeId::rat_ssft) {
      throw Error(ErrorKind::undefined, "rat.ssft has no representative for the bottom class");
    }
    return encode_ratio(0, 0, target);
  }
  return encode_ratio(boost::multiprecision::numerator(*value),
                      boost::multiprecision::denominator(*value), target);
}

namespace detail {

Integer decode_int(const IntInstance& x) {
  if (const auto* s = std::get_if<SignedInt>(&x)) {
    return s->sign * parse_integer(s->magnitude);
  }
  const auto& p = std::get<DiffPairInt>(x);
  return parse_integer(p.plus.digits) - parse_integer(p.minus.digits);
}

Integer decode_integer(const Instance& i) {
  if (const auto* x = std::get_if<DecimalNat>(&i)) return parse_integer(x->digits);
  if (const auto* x = std::get_if<StrictDecimalNat>(&i)) return parse_integer(x->digits);
  if (const auto* x = std::get_if<DedekindNat>(&i)) return x->successors;
  if (const auto* x = std::get_if<VonNeumannNat>(&i)) {
    const auto v = vn_value(x->set);
    if (!v) throw Error(ErrorKind::invalid_instance, "not a von Neumann numeral");
    return Integer(*v);
  }
  if (const auto* x = std::get_if<ZermeloNat>(&i)) {
    const auto v = zermelo_value(x->set);
    if (!v) throw Error(ErrorKind::invalid_instance, "not a Zermelo numeral");
    return Integer(*v);
  }
  if (const auto* x = std::get_if<SignedInt>(&i)) return decode_int(*x);
  if (const auto* x = std::get_if<DiffPairInt>(&i)) return decode_int(*x);
  throw Error(ErrorKind::unsupported_operation,
              std::string(to_string(shape_of(i))) + " instances are not integers");
}

std::optional<Rational> decode(const Instance& i) {
  if (const auto* x = std::get_if<PairClass>(&i)) {
    if (x->b == 0) return std::nullopt;
    return Rational(x->a, x->b);
  }
  if (const auto* x = std::get_if<SsftRational>(&i)) {
    return Rational(x->numerator(), x->denominator());
  }
  if (const auto* x = std::get_if<RatioNumber>(&i)) {
    const Integer b = decode_int(x->second);
    if (b == 0) return std::nullopt;
    // Boost 1.74 rejects a negative denominator in the two-argument constructor.
    return Rational(decode_int(x->first)) / Rational(b);
  }
  return Rational(decode_integer(i));
}

}  // namespace detail

}  // namespace fracterm
