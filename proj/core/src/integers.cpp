#include "fracterm/integers.hpp"

#include "fracterm/detail/decimal.hpp"
#include "fracterm/error.hpp"

namespace fracterm {

namespace dec = detail::decimal;

SignedInt make_signed_int(int sign, std::string magnitude) {
  if (!dec::is_digits(magnitude) || (magnitude.size() > 1 && magnitude.front() == '0')) {
    throw Error(ErrorKind::invalid_instance, "int.signed magnitude must be a strict decimal");
  }
  const bool zero = magnitude == "0";
  if (sign < -1 || sign > 1 || zero != (sign == 0)) {
    throw Error(ErrorKind::invalid_instance,
                "int.signed has a single zero and no signed zero magnitudes");
  }
  return SignedInt{sign, std::move(magnitude)};
}

DiffPairInt make_diff_pair(std::string plus, std::string minus) {
  return DiffPairInt{make_strict_decimal_nat(std::move(plus)),
                     make_strict_decimal_nat(std::move(minus))};
}

IntInstance int_encode(const Integer& value, ShapeId shape) {
  const std::string magnitude = to_decimal(abs(value));
  switch (shape) {
    case ShapeId::int_signed:
      return SignedInt{sign(value), magnitude};
    case ShapeId::int_diffpair:
      return value >= 0 ? DiffPairInt{{magnitude}, {"0"}} : DiffPairInt{{"0"}, {magnitude}};
    default:
      throw Error(ErrorKind::unsupported_shape,
                  std::string(to_string(shape)) + " is not an integer shape");
  }
}

ShapeId int_shape_of(const IntInstance& x) {
  return std::holds_alternative<SignedInt>(x) ? ShapeId::int_signed : ShapeId::int_diffpair;
}

namespace {

void require_same_shape(const IntInstance& a, const IntInstance& b) {
  if (a.index() != b.index()) {
    throw Error(ErrorKind::shape_mismatch, std::string("cannot combine ") +
                                               std::string(to_string(int_shape_of(a))) + " and " +
                                               std::string(to_string(int_shape_of(b))));
  }
}

SignedInt signed_make(int s, std::string magnitude) {
  if (magnitude == "0") return SignedInt{0, "0"};
  return SignedInt{s, std::move(magnitude)};
}

SignedInt signed_add(const SignedInt& a, const SignedInt& b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  if (a.sign == b.sign) return signed_make(a.sign, dec::add(a.magnitude, b.magnitude));
  const int c = dec::compare(a.magnitude, b.magnitude);
  if (c == 0) return SignedInt{};
  if (c > 0) return signed_make(a.sign, dec::subtract(a.magnitude, b.magnitude));
  return signed_make(b.sign, dec::subtract(b.magnitude, a.magnitude));
}

SignedInt signed_mul(const SignedInt& a, const SignedInt& b) {
  return signed_make(a.sign * b.sign, dec::multiply(a.magnitude, b.magnitude));
}

DiffPairInt pair_add(const DiffPairInt& x, const DiffPairInt& y) {
  return {{dec::add(x.plus.digits, y.plus.digits)}, {dec::add(x.minus.digits, y.minus.digits)}};
}

DiffPairInt pair_mul(const DiffPairInt& x, const DiffPairInt& y) {
  // (a - b)(c - d) = (ac + bd) - (ad + bc)
  const auto& a = x.plus.digits;
  const auto& b = x.minus.digits;
  const auto& c = y.plus.digits;
  const auto& d = y.minus.digits;
  return {{dec::add(dec::multiply(a, c), dec::multiply(b, d))},
          {dec::add(dec::multiply(a, d), dec::multiply(b, c))}};
}

}  // namespace

IntInstance int_add(const IntInstance& a, const IntInstance& b) {
  require_same_shape(a, b);
  if (const auto* x = std::get_if<SignedInt>(&a)) return signed_add(*x, std::get<SignedInt>(b));
  return pair_add(std::get<DiffPairInt>(a), std::get<DiffPairInt>(b));
}

IntInstance int_mul(const IntInstance& a, const IntInstance& b) {
  require_same_shape(a, b);
  if (const auto* x = std::get_if<SignedInt>(&a)) return signed_mul(*x, std::get<SignedInt>(b));
  return pair_mul(std::get<DiffPairInt>(a), std::get<DiffPairInt>(b));
}

IntInstance int_neg(const IntInstance& a) {
  if (const auto* x = std::get_if<SignedInt>(&a)) return SignedInt{-x->sign, x->magnitude};
  const auto& p = std::get<DiffPairInt>(a);
  return DiffPairInt{p.minus, p.plus};
}

int int_sign(const IntInstance& a) {
  if (const auto* x = std::get_if<SignedInt>(&a)) return x->sign;
  const auto& p = std::get<DiffPairInt>(a);
  return dec::compare(p.plus.digits, p.minus.digits);
}

bool int_instance_eq(const IntInstance& a, const IntInstance& b) {
  require_same_shape(a, b);
  return a == b;
}

bool int_label_eq(const IntInstance& a, const IntInstance& b) {
  require_same_shape(a, b);
  if (const auto* x = std::get_if<SignedInt>(&a)) return *x == std::get<SignedInt>(b);
  const auto& p = std::get<DiffPairInt>(a);
  const auto& q = std::get<DiffPairInt>(b);
  return dec::compare(dec::add(p.plus.digits, q.minus.digits),
                      dec::add(q.plus.digits, p.minus.digits)) == 0;
}

}  // namespace fracterm
