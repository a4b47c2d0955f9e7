#pragma once

#include <string>
#include <variant>

#include "fracterm/integer.hpp"
#include "fracterm/naturals.hpp"
#include "fracterm/shape_id.hpp"

namespace fracterm {

/// int.signed: a sign and a strict decimal magnitude; there is exactly one zero
/// (sign 0, magnitude "0").
struct SignedInt {
  int sign = 0;
  std::string magnitude = "0";
  friend bool operator==(const SignedInt&, const SignedInt&) = default;
};

/// int.diffpair: the raw pair (plus, minus) standing for plus - minus. Pairs are
/// not normalised, so (5,2) and (3,0) are different instances of the same integer.
struct DiffPairInt {
  StrictDecimalNat plus;
  StrictDecimalNat minus;
  friend bool operator==(const DiffPairInt&, const DiffPairInt&) = default;
};

using IntInstance = std::variant<SignedInt, DiffPairInt>;

/// Throws Error(invalid_instance) for a zero magnitude with nonzero sign and
/// similar malformed input.
SignedInt make_signed_int(int sign, std::string magnitude);
DiffPairInt make_diff_pair(std::string plus, std::string minus);

/// Canonical instance: signed form, or (k,0) / (0,k) for difference pairs.
IntInstance int_encode(const Integer& value, ShapeId shape);
ShapeId int_shape_of(const IntInstance& x);

// Arithmetic over one integer shape; mixing shapes throws Error(shape_mismatch).
IntInstance int_add(const IntInstance& a, const IntInstance& b);
IntInstance int_mul(const IntInstance& a, const IntInstance& b);
IntInstance int_neg(const IntInstance& a);

/// s(p): 1 for positive, -1 for negative, 0 for zero.
int int_sign(const IntInstance& a);

/// =_S, native equality of the representation.
bool int_instance_eq(const IntInstance& a, const IntInstance& b);
/// ≡_int. For difference pairs (a,b) ≡ (c,d) iff a + d = c + b.
bool int_label_eq(const IntInstance& a, const IntInstance& b);

}  // namespace fracterm
