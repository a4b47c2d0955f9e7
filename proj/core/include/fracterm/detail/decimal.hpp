#pragma once

#include <string>
#include <string_view>

// Schoolbook arithmetic on nonnegative decimal digit strings. Inputs may carry
// leading zeroes; outputs never do (except "0").
namespace fracterm::detail::decimal {

bool is_digits(std::string_view s);
std::string strip(std::string_view s);
/// -1, 0, 1 comparing numeric values.
int compare(std::string_view a, std::string_view b);
std::string add(std::string_view a, std::string_view b);
/// Requires a >= b.
std::string subtract(std::string_view a, std::string_view b);
std::string multiply(std::string_view a, std::string_view b);
bool is_zero(std::string_view a);

}  // namespace fracterm::detail::decimal
