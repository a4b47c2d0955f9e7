#include "fracterm/naturals.hpp"

#include "fracterm/detail/decimal.hpp"
#include "fracterm/error.hpp"

namespace fracterm {

namespace dec = detail::decimal;

DecimalNat make_decimal_nat(std::string digits) {
  if (!dec::is_digits(digits)) {
    throw Error(ErrorKind::invalid_instance, "nat.dec expects a digit string, got '" + digits + "'");
  }
  return DecimalNat{std::move(digits)};
}

StrictDecimalNat make_strict_decimal_nat(std::string digits) {
  if (!dec::is_digits(digits) || (digits.size() > 1 && digits.front() == '0')) {
    throw Error(ErrorKind::invalid_instance,
                "nat.sdn expects digits without redundant leading zeroes, got '" + digits + "'");
  }
  return StrictDecimalNat{std::move(digits)};
}

namespace {

void check_capacity(unsigned long long k) {
  if (k > kSetNatCapacity) {
    throw Error(ErrorKind::capacity, "set-theoretic numerals are capped at " +
                                         std::to_string(kSetNatCapacity) + ", requested " +
                                         std::to_string(k));
  }
}

}  // namespace

VonNeumannNat vn_zero() { return {FiniteSet()}; }

VonNeumannNat vn_successor(const VonNeumannNat& n) {
  check_capacity(n.set.cardinality() + 1);
  return {n.set.with_element(n.set)};
}

VonNeumannNat vn_encode(unsigned long long k) {
  check_capacity(k);
  VonNeumannNat n = vn_zero();
  for (unsigned long long i = 0; i < k; ++i) n = {n.set.with_element(n.set)};
  return n;
}

std::optional<unsigned long long> vn_value(const FiniteSet& s) {
  // n = {0, ..., n-1}: the greatest element is n-1 and the rest are its elements.
  const unsigned long long n = s.cardinality();
  FiniteSet cursor = s;
  for (unsigned long long expected = n; expected > 0; --expected) {
    if (cursor.cardinality() != expected || !cursor.is_successor_of_greatest()) {
      return std::nullopt;
    }
    cursor = cursor.greatest();
  }
  if (!cursor.empty()) return std::nullopt;
  return n;
}

ZermeloNat zermelo_zero() { return {FiniteSet()}; }

ZermeloNat zermelo_successor(const ZermeloNat& n) {
  check_capacity(n.set.rank() + 1);
  return {FiniteSet::singleton(n.set)};
}

ZermeloNat zermelo_encode(unsigned long long k) {
  check_capacity(k);
  ZermeloNat n = zermelo_zero();
  for (unsigned long long i = 0; i < k; ++i) n = {FiniteSet::singleton(n.set)};
  return n;
}

std::optional<unsigned long long> zermelo_value(const FiniteSet& s) {
  unsigned long long depth = 0;
  FiniteSet cursor = s;
  while (!cursor.empty()) {
    if (cursor.cardinality() != 1) return std::nullopt;
    cursor = cursor.greatest();
    ++depth;
  }
  return depth;
}

DecimalNat nat_add(const DecimalNat& a, const DecimalNat& b) {
  return {dec::add(a.digits, b.digits)};
}
DecimalNat nat_mul(const DecimalNat& a, const DecimalNat& b) {
  return {dec::multiply(a.digits, b.digits)};
}
StrictDecimalNat nat_add(const StrictDecimalNat& a, const StrictDecimalNat& b) {
  return {dec::add(a.digits, b.digits)};
}
StrictDecimalNat nat_mul(const StrictDecimalNat& a, const StrictDecimalNat& b) {
  return {dec::multiply(a.digits, b.digits)};
}
DedekindNat nat_add(const DedekindNat& a, const DedekindNat& b) {
  return {a.successors + b.successors};
}
DedekindNat nat_mul(const DedekindNat& a, const DedekindNat& b) {
  return {a.successors * b.successors};
}

VonNeumannNat nat_add(const VonNeumannNat& a, const VonNeumannNat& b) {
  // a + 0 = a, a + S(c) = S(a + c); the predecessor of a nonzero von Neumann
  // numeral is its greatest element.
  VonNeumannNat acc = a;
  FiniteSet counter = b.set;
  while (!counter.empty()) {
    acc = vn_successor(acc);
    counter = counter.greatest();
  }
  return acc;
}

VonNeumannNat nat_mul(const VonNeumannNat& a, const VonNeumannNat& b) {
  VonNeumannNat acc = vn_zero();
  FiniteSet counter = b.set;
  while (!counter.empty()) {
    acc = nat_add(acc, a);
    counter = counter.greatest();
  }
  return acc;
}

ZermeloNat nat_add(const ZermeloNat& a, const ZermeloNat& b) {
  ZermeloNat acc = a;
  FiniteSet counter = b.set;
  while (!counter.empty()) {
    acc = zermelo_successor(acc);
    counter = counter.greatest();
  }
  return acc;
}

ZermeloNat nat_mul(const ZermeloNat& a, const ZermeloNat& b) {
  ZermeloNat acc = zermelo_zero();
  FiniteSet counter = b.set;
  while (!counter.empty()) {
    acc = nat_add(acc, a);
    counter = counter.greatest();
  }
  return acc;
}

}  // namespace fracterm
