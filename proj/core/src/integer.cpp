#include "fracterm/integer.hpp"

#include <boost/multiprecision/integer.hpp>

#include "fracterm/error.hpp"

namespace fracterm {

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    i = 1;
  }
  if (i == text.size()) {
    throw Error(ErrorKind::syntax, "empty numeral", 0);
  }
  Integer value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::syntax, "invalid digit in numeral '" + std::string(text) + "'", i);
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string to_decimal(const Integer& value) { return value.str(); }

Integer abs(const Integer& value) { return value < 0 ? Integer(-value) : value; }

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

int sign(const Integer& value) { return value.sign(); }

}  // namespace fracterm
