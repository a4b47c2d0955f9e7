#pragma once

#include <optional>
#include <string>

#include "fracterm/finite_set.hpp"
#include "fracterm/integer.hpp"

namespace fracterm {

/// nat.dec: any nonempty digit string; "007" and "7" are distinct instances.
struct DecimalNat {
  std::string digits;
  friend bool operator==(const DecimalNat&, const DecimalNat&) = default;
};

/// nat.sdn: digit string without redundant leading zeroes.
struct StrictDecimalNat {
  std::string digits;
  friend bool operator==(const StrictDecimalNat&, const StrictDecimalNat&) = default;
};

/// nat.dedekind: S applied `successors` times to 0. Only the count is stored.
struct DedekindNat {
  Integer successors;
  friend bool operator==(const DedekindNat&, const DedekindNat&) = default;
};

/// nat.vn: 0 = {}, n+1 = n ∪ {n}.
struct VonNeumannNat {
  FiniteSet set;
  friend bool operator==(const VonNeumannNat&, const VonNeumannNat&) = default;
};

/// nat.zermelo: 0 = {}, n+1 = {n}.
struct ZermeloNat {
  FiniteSet set;
  friend bool operator==(const ZermeloNat&, const ZermeloNat&) = default;
};

/// Largest value representable in the set-theoretic shapes.
inline constexpr unsigned kSetNatCapacity = 4096;

/// Throw Error(invalid_instance) on malformed input.
DecimalNat make_decimal_nat(std::string digits);
StrictDecimalNat make_strict_decimal_nat(std::string digits);

VonNeumannNat vn_zero();
VonNeumannNat vn_successor(const VonNeumannNat& n);
/// Throws Error(capacity) beyond kSetNatCapacity.
VonNeumannNat vn_encode(unsigned long long k);
/// Validates the set and returns its value, or nullopt if it is not a von Neumann numeral.
std::optional<unsigned long long> vn_value(const FiniteSet& s);

ZermeloNat zermelo_zero();
ZermeloNat zermelo_successor(const ZermeloNat& n);
ZermeloNat zermelo_encode(unsigned long long k);
std::optional<unsigned long long> zermelo_value(const FiniteSet& s);

// Per-representation arithmetic.
DecimalNat nat_add(const DecimalNat& a, const DecimalNat& b);
DecimalNat nat_mul(const DecimalNat& a, const DecimalNat& b);
StrictDecimalNat nat_add(const StrictDecimalNat& a, const StrictDecimalNat& b);
StrictDecimalNat nat_mul(const StrictDecimalNat& a, const StrictDecimalNat& b);
DedekindNat nat_add(const DedekindNat& a, const DedekindNat& b);
DedekindNat nat_mul(const DedekindNat& a, const DedekindNat& b);
/// Successor iteration: a + b applies S to a once per predecessor step of b.
VonNeumannNat nat_add(const VonNeumannNat& a, const VonNeumannNat& b);
VonNeumannNat nat_mul(const VonNeumannNat& a, const VonNeumannNat& b);
ZermeloNat nat_add(const ZermeloNat& a, const ZermeloNat& b);
ZermeloNat nat_mul(const ZermeloNat& a, const ZermeloNat& b);

}  // namespace fracterm
