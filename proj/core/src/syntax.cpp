#include "fracterm/syntax.hpp"

#include <array>

#include "fracterm/error.hpp"

namespace fracterm {

namespace {

constexpr std::array<std::string_view, 5> kReserved = {"ft", "fv", "frac", "num", "denom"};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_word_char(char c) { return is_letter(c) || is_digit(c) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, std::size_t pos, Notation notation)
      : text_(text), pos_(pos), notation_(notation) {}

  Term expression() {
    Term acc = term();
    for (;;) {
      skip_space();
      if (peek() == '+') {
        ++pos_;
        acc = Term::add(acc, term());
      } else if (peek() == '-') {
        ++pos_;
        acc = Term::subtract(acc, term());
      } else {
        return acc;
      }
    }
  }

  std::size_t position() const { return pos_; }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::syntax, what + " at offset " + std::to_string(pos_), pos_);
  }

 private:
  Term term() {
    Term acc = factor();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        acc = Term::multiply(acc, factor());
      } else if (division_sign()) {
        ++pos_;
        const Decoration decoration = decoration_suffix();
        acc = Term::divide(acc, factor(), decoration);
      } else {
        return acc;
      }
    }
  }

  bool division_sign() const {
    switch (notation_) {
      case Notation::inline_slash: return peek() == '/';
      case Notation::colon: return peek() == ':';
      case Notation::fraction: return false;
    }
    return false;
  }

  Decoration decoration_suffix() {
    if (peek() == 'f' && (peek(1) == 't' || peek(1) == 'v') && !is_word_char(peek(2))) {
      const Decoration d = peek(1) == 't' ? Decoration::fracterm : Decoration::fracvalue;
      pos_ += 2;
      return d;
    }
    return Decoration::none;
  }

  Term factor() {
    skip_space();
    const char c = peek();
    if (c == '-') {
      if (is_digit(peek(1))) return numeral();
      ++pos_;
      return Term::negate(factor());
    }
    if (c == '(') {
      ++pos_;
      Term inner = expression();
      expect(')');
      return inner;
    }
    if (is_digit(c)) return numeral();
    if (is_letter(c)) return word();
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  Term numeral() {
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (is_digit(peek())) ++pos_;
    if (is_word_char(peek())) fail("numeral runs into a name");
    return Term::literal(std::string(text_.substr(start, pos_ - start)));
  }

  Term word() {
    const std::size_t start = pos_;
    while (is_word_char(peek())) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    const std::size_t after_name = pos_;
    skip_space();
    const bool call = peek() == '(';
    if (call && (name == "num" || name == "denom")) {
      ++pos_;
      Term inner = expression();
      expect(')');
      return name == "num" ? Term::numerator_of(inner) : Term::denominator_of(inner);
    }
    if (call && notation_ == Notation::fraction &&
        (name == "frac" || name == "frac_ft" || name == "frac_fv")) {
      ++pos_;
      Term top = expression();
      expect(',');
      Term bottom = expression();
      expect(')');
      const Decoration d = name == "frac"      ? Decoration::none
                           : name == "frac_ft" ? Decoration::fracterm
                                               : Decoration::fracvalue;
      return Term::divide(top, bottom, d);
    }
    pos_ = after_name;
    for (std::string_view reserved : kReserved) {
      if (name == reserved) {
        pos_ = start;
        fail("'" + name + "' is reserved and cannot name a variable");
      }
    }
    if (name.find('_') != std::string::npos) {
      pos_ = start;
      fail("variable names consist of letters and digits");
    }
    return Term::variable(name);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_;
  Notation notation_;
};

int precedence(const Term& t) {
  switch (t.kind()) {
    case NodeKind::add:
    case NodeKind::subtract:
      return 1;
    case NodeKind::multiply:
      return 2;
    case NodeKind::divide:
      return 2;
    default:
      return 3;
  }
}

std::string_view decoration_suffix(Decoration d) {
  switch (d) {
    case Decoration::none: return "";
    case Decoration::fracterm: return "ft";
    case Decoration::fracvalue: return "fv";
  }
  return "";
}

class Printer {
 public:
  explicit Printer(Notation notation) : notation_(notation) {}

  std::string print(const Term& t) const {
    switch (t.kind()) {
      case NodeKind::literal:
      case NodeKind::variable:
        return t.text();
      case NodeKind::negate: {
        const Term& x = t.operand();
        if (x.is_literal() || precedence(x) < 3 || (x.is_division() && notation_ != Notation::fraction)) {
          return "-(" + print(x) + ")";
        }
        return "-" + print(x);
      }
      case NodeKind::numerator:
        return "num(" + print(t.operand()) + ")";
      case NodeKind::denominator:
        return "denom(" + print(t.operand()) + ")";
      case NodeKind::divide:
        if (notation_ == Notation::fraction) {
          std::string head = "frac";
          if (t.decoration() != Decoration::none) {
            head += "_";
            head += decoration_suffix(t.decoration());
          }
          return head + "(" + print(t.lhs()) + ", " + print(t.rhs()) + ")";
        }
        return infix(t, division_operator(t.decoration()));
      case NodeKind::add:
        return infix(t, "+");
      case NodeKind::subtract:
        return infix(t, "-");
      case NodeKind::multiply:
        return infix(t, "*");
    }
    return {};
  }

 private:
  std::string division_operator(Decoration d) const {
    const std::string sign = notation_ == Notation::colon ? ":" : "/";
    if (d == Decoration::none) return sign;
    return " " + sign + std::string(decoration_suffix(d)) + " ";
  }

  int effective_precedence(const Term& t) const {
    if (t.is_division() && notation_ == Notation::fraction) return 3;
    return precedence(t);
  }

  std::string infix(const Term& t, const std::string& op) const {
    const int p = precedence(t);
    std::string left = print(t.lhs());
    std::string right = print(t.rhs());
    if (effective_precedence(t.lhs()) < p) left = "(" + left + ")";
    if (effective_precedence(t.rhs()) <= p) right = "(" + right + ")";
    return left + op + right;
  }

  Notation notation_;
};

}  // namespace

Notation parse_notation(std::string_view name) {
  if (name == "inline") return Notation::inline_slash;
  if (name == "colon") return Notation::colon;
  if (name == "frac" || name == "latex-fraction") return Notation::fraction;
  throw Error(ErrorKind::syntax, "unknown format '" + std::string(name) + "'");
}

std::string_view to_string(Notation notation) {
  switch (notation) {
    case Notation::inline_slash: return "inline";
    case Notation::colon: return "colon";
    case Notation::fraction: return "frac";
  }
  return "inline";
}

PrefixParse parse_prefix(std::string_view text, std::size_t pos, Notation notation) {
  Parser parser(text, pos, notation);
  Term t = parser.expression();
  return {std::move(t), parser.position()};
}

Term parse(std::string_view text, Notation notation) {
  Parser parser(text, 0, notation);
  Term t = parser.expression();
  parser.skip_space();
  if (parser.position() != text.size()) parser.fail("unexpected trailing input");
  return t;
}

std::string format(const Term& t, Notation notation) { return Printer(notation).print(t); }

}  // namespace fracterm
