#pragma once

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "fracterm/integer.hpp"
#include "fracterm/integers.hpp"
#include "fracterm/shape.hpp"

// Reading instances back into plain integers and rationals. Numbers are meant
// to live inside shapes; this view exists for conversion and for tests that
// check shape arithmetic against exact arithmetic.
namespace fracterm::detail {

using Rational = boost::multiprecision::cpp_rational;

Integer decode_int(const IntInstance& x);

/// Value of a nat or int instance. Throws for rational shapes.
Integer decode_integer(const Instance& i);

/// Value of any instance; nullopt for ⊥ representatives.
std::optional<Rational> decode(const Instance& i);

}  // namespace fracterm::detail
