#pragma once

#include <optional>
#include <variant>

#include "fracterm/integer.hpp"
#include "fracterm/integers.hpp"
#include "fracterm/naturals.hpp"
#include "fracterm/ratio_number.hpp"
#include "fracterm/shape_id.hpp"
#include "fracterm/term.hpp"

namespace fracterm {

/// rat.pcs instance: the class [(a, b)], held by its canonical member. The
/// canonical member has b >= 0; b = 0 forces a = 0 (the single class of all
/// (a, 0), which plays the role of ⊥); otherwise gcd(|a|, b) = 1.
struct PairClass {
  Integer a;
  Integer b;
  friend bool operator==(const PairClass&, const PairClass&) = default;
};

/// Canonical member of [(a, b)].
PairClass make_pair_class(const Integer& a, const Integer& b);

/// rat.ssft instance: a simplified simple fracterm such as -3/7 or 0/1.
class SsftRational {
 public:
  /// Throws Error(invalid_instance) unless classify(t).simplified.
  explicit SsftRational(Term t);
  /// Reduces a/b; throws Error(undefined) when b = 0.
  static SsftRational from_pair(const Integer& a, const Integer& b);

  const Term& term() const noexcept { return term_; }
  const Integer& numerator() const noexcept { return numerator_; }
  const Integer& denominator() const noexcept { return denominator_; }

 private:
  Term term_;
  Integer numerator_;
  Integer denominator_;
};

using Instance = std::variant<DecimalNat, StrictDecimalNat, DedekindNat, VonNeumannNat,
                              ZermeloNat, SignedInt, DiffPairInt, PairClass, SsftRational,
                              RatioNumber>;

ShapeId shape_of(const Instance& i);
Label label_of(const Instance& i);

/// Canonical instance of the integer k in `shape` (k/1 for rational shapes).
/// Throws NegativeIntoNat for k < 0 on nat shapes and CapacityError past the
/// set-theoretic cap.
Instance encode(const Integer& k, ShapeId shape);

/// Canonical instance of a/b in a rational shape. b = 0 yields the shape's ⊥
/// representative when it has one (PCS (0,0), RNS (a,0)); SSFT has none and
/// throws Error(undefined).
Instance encode_ratio(const Integer& a, const Integer& b, ShapeId shape);

/// =_S. Throws Error(shape_mismatch) for instances of different shapes.
bool instance_eq(const Instance& i, const Instance& j);
/// ≡_L.
bool label_eq(const Instance& i, const Instance& j);

Instance shape_add(const Instance& i, const Instance& j);
Instance shape_mul(const Instance& i, const Instance& j);
/// int and rat shapes only.
Instance shape_neg(const Instance& i);
/// rat shapes only. A zero or ⊥ divisor (or ⊥ dividend) gives the shape's ⊥
/// representative, or nullopt when the shape has none.
std::optional<Instance> shape_div(const Instance& i, const Instance& j);

/// Label equality with the shape's zero.
bool is_zero(const Instance& i);
/// PCS (0,0) class, or an RNS pair with zero second component.
bool is_bottom_class(const Instance& i);

/// Label-preserving translation. Throws Error(label_mismatch) across labels and
/// Error(undefined) when the target has no representative for ⊥.
Instance convert(const Instance& i, ShapeId target);

}  // namespace fracterm
