#include "fracterm/detail/decimal.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fracterm::detail::decimal {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string strip(std::string_view s) {
  const auto first = s.find_first_not_of('0');
  if (first == std::string_view::npos) return "0";
  return std::string(s.substr(first));
}

bool is_zero(std::string_view a) { return a.find_first_not_of('0') == std::string_view::npos; }

int compare(std::string_view a, std::string_view b) {
  const std::string x = strip(a);
  const std::string y = strip(b);
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  const int c = x.compare(y);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string add(std::string_view a, std::string_view b) {
  std::string out;
  int carry = 0;
  auto i = static_cast<std::ptrdiff_t>(a.size()) - 1;
  auto j = static_cast<std::ptrdiff_t>(b.size()) - 1;
  while (i >= 0 || j >= 0 || carry) {
    int d = carry;
    if (i >= 0) d += a[static_cast<std::size_t>(i--)] - '0';
    if (j >= 0) d += b[static_cast<std::size_t>(j--)] - '0';
    out.push_back(static_cast<char>('0' + d % 10));
    carry = d / 10;
  }
  std::reverse(out.begin(), out.end());
  return strip(out);
}

std::string subtract(std::string_view a, std::string_view b) {
  if (compare(a, b) < 0) throw std::invalid_argument("decimal::subtract: negative result");
  std::string out;
  int borrow = 0;
  auto i = static_cast<std::ptrdiff_t>(a.size()) - 1;
  auto j = static_cast<std::ptrdiff_t>(b.size()) - 1;
  while (i >= 0) {
    int d = (a[static_cast<std::size_t>(i--)] - '0') - borrow;
    if (j >= 0) d -= b[static_cast<std::size_t>(j--)] - '0';
    borrow = d < 0 ? 1 : 0;
    if (d < 0) d += 10;
    out.push_back(static_cast<char>('0' + d));
  }
  std::reverse(out.begin(), out.end());
  return strip(out);
}

std::string multiply(std::string_view a, std::string_view b) {
  std::vector<int> acc(a.size() + b.size(), 0);
  for (std::size_t i = a.size(); i-- > 0;) {
    for (std::size_t j = b.size(); j-- > 0;) {
      acc[i + j + 1] += (a[i] - '0') * (b[j] - '0');
    }
  }
  for (std::size_t k = acc.size(); k-- > 1;) {
    acc[k - 1] += acc[k] / 10;
    acc[k] %= 10;
  }
  std::string out;
  out.reserve(acc.size());
  for (int d : acc) out.push_back(static_cast<char>('0' + d));
  return strip(out);
}

}  // namespace fracterm::detail::decimal
