#include "fracterm/term.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fracterm/error.hpp"

namespace fracterm {

struct Term::Node {
  NodeKind kind;
  Decoration decoration = Decoration::none;
  std::string text;
  std::vector<Term> children;
};

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

bool valid_numeral(const std::string& s) {
  std::size_t i = (!s.empty() && s.front() == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!is_digit(s[i])) return false;
  }
  return true;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !is_letter(s.front())) return false;
  for (char c : s) {
    if (!is_letter(c) && !is_digit(c)) return false;
  }
  return true;
}

bool is_binary_kind(NodeKind k) {
  return k == NodeKind::add || k == NodeKind::subtract || k == NodeKind::multiply ||
         k == NodeKind::divide;
}

bool nodes_equal(const Term& a, const Term& b) {
  if (a.kind() != b.kind() || a.decoration() != b.decoration()) return false;
  switch (a.kind()) {
    case NodeKind::literal:
    case NodeKind::variable:
      return a.text() == b.text();
    case NodeKind::negate:
    case NodeKind::numerator:
    case NodeKind::denominator:
      return a.operand() == b.operand();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

}  // namespace

Term Term::literal(std::string digits) {
  if (!valid_numeral(digits)) {
    throw Error(ErrorKind::syntax, "malformed numeral '" + digits + "'");
  }
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::literal;
  node->text = std::move(digits);
  return Term(std::move(node));
}

Term Term::literal(const Integer& value) { return literal(to_decimal(value)); }

Term Term::variable(std::string name) {
  if (!valid_name(name)) {
    throw Error(ErrorKind::syntax, "malformed variable name '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::variable;
  node->text = std::move(name);
  return Term(std::move(node));
}

Term Term::negate(Term operand) { return unary(NodeKind::negate, std::move(operand)); }
Term Term::numerator_of(Term operand) { return unary(NodeKind::numerator, std::move(operand)); }
Term Term::denominator_of(Term operand) {
  return unary(NodeKind::denominator, std::move(operand));
}

Term Term::unary(NodeKind kind, Term operand) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->children.push_back(std::move(operand));
  return Term(std::move(node));
}

Term Term::binary(NodeKind kind, Term lhs, Term rhs, Decoration decoration) {
  if (!is_binary_kind(kind)) {
    throw std::invalid_argument("Term::binary: not a binary node kind");
  }
  if (decoration != Decoration::none && kind != NodeKind::divide) {
    throw std::invalid_argument("Term::binary: decorations only apply to division");
  }
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->decoration = decoration;
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return Term(std::move(node));
}

Term Term::add(Term lhs, Term rhs) { return binary(NodeKind::add, std::move(lhs), std::move(rhs)); }
Term Term::subtract(Term lhs, Term rhs) {
  return binary(NodeKind::subtract, std::move(lhs), std::move(rhs));
}
Term Term::multiply(Term lhs, Term rhs) {
  return binary(NodeKind::multiply, std::move(lhs), std::move(rhs));
}
Term Term::divide(Term lhs, Term rhs, Decoration decoration) {
  return binary(NodeKind::divide, std::move(lhs), std::move(rhs), decoration);
}

NodeKind Term::kind() const noexcept { return node_->kind; }
const std::string& Term::text() const noexcept { return node_->text; }
Decoration Term::decoration() const noexcept { return node_->decoration; }
bool Term::is_binary() const noexcept { return is_binary_kind(node_->kind); }

const Term& Term::operand() const {
  if (is_binary() || is_literal() || kind() == NodeKind::variable) {
    throw std::logic_error("Term::operand on a node without a single operand");
  }
  return node_->children[0];
}

const Term& Term::lhs() const {
  if (!is_binary()) throw std::logic_error("Term::lhs on a non-binary node");
  return node_->children[0];
}

const Term& Term::rhs() const {
  if (!is_binary()) throw std::logic_error("Term::rhs on a non-binary node");
  return node_->children[1];
}

bool operator==(const Term& a, const Term& b) {
  return a.node_ == b.node_ || nodes_equal(a, b);
}

Integer literal_value(const Term& t) {
  if (!t.is_literal()) {
    throw Error(ErrorKind::invalid_instance, "expected a numeral");
  }
  return parse_integer(t.text());
}

bool is_canonical_literal(const Term& t) {
  if (!t.is_literal()) return false;
  const std::string& s = t.text();
  const std::size_t start = s.front() == '-' ? 1 : 0;
  if (s.size() - start > 1 && s[start] == '0') return false;
  return !(start == 1 && s == "-0");
}

Term erase_decorations(const Term& t) {
  switch (t.kind()) {
    case NodeKind::literal:
    case NodeKind::variable:
      return t;
    case NodeKind::negate:
      return Term::negate(erase_decorations(t.operand()));
    case NodeKind::numerator:
      return Term::numerator_of(erase_decorations(t.operand()));
    case NodeKind::denominator:
      return Term::denominator_of(erase_decorations(t.operand()));
    default:
      return Term::binary(t.kind(), erase_decorations(t.lhs()), erase_decorations(t.rhs()));
  }
}

namespace {
template <class Pred>
bool any_node(const Term& t, Pred pred) {
  if (pred(t)) return true;
  switch (t.kind()) {
    case NodeKind::literal:
    case NodeKind::variable:
      return false;
    case NodeKind::negate:
    case NodeKind::numerator:
    case NodeKind::denominator:
      return any_node(t.operand(), pred);
    default:
      return any_node(t.lhs(), pred) || any_node(t.rhs(), pred);
  }
}
}  // namespace

bool contains_division(const Term& t) {
  return any_node(t, [](const Term& n) { return n.is_division(); });
}

bool contains_variable(const Term& t) {
  return any_node(t, [](const Term& n) { return n.kind() == NodeKind::variable; });
}

bool contains_extraction(const Term& t) {
  return any_node(t, [](const Term& n) {
    return n.kind() == NodeKind::numerator || n.kind() == NodeKind::denominator;
  });
}

std::size_t node_count(const Term& t) {
  switch (t.kind()) {
    case NodeKind::literal:
    case NodeKind::variable:
      return 1;
    case NodeKind::negate:
    case NodeKind::numerator:
    case NodeKind::denominator:
      return 1 + node_count(t.operand());
    default:
      return 1 + node_count(t.lhs()) + node_count(t.rhs());
  }
}

namespace {

Term small_constant(int n) {
  // n in [0, 10]
  if (n == 0) return Term::literal("0");
  Term acc = Term::literal("1");
  for (int i = 1; i < n; ++i) acc = Term::add(acc, Term::literal("1"));
  return acc;
}

Term desugar_numeral(const std::string& text) {
  const bool negative = text.front() == '-';
  const std::size_t start = negative ? 1 : 0;
  std::optional<Term> acc;
  const Term ten = small_constant(10);
  for (std::size_t i = start; i < text.size(); ++i) {
    const int digit = text[i] - '0';
    if (!acc) {
      acc = small_constant(digit);
    } else {
      Term scaled = Term::multiply(*acc, ten);
      acc = digit == 0 ? scaled : Term::add(scaled, small_constant(digit));
    }
  }
  return negative ? Term::negate(*acc) : *acc;
}

}  // namespace

Term desugar_literals(const Term& t) {
  switch (t.kind()) {
    case NodeKind::literal:
      if (t.text() == "0" || t.text() == "1") return t;
      return desugar_numeral(t.text());
    case NodeKind::variable:
      return t;
    case NodeKind::negate:
      return Term::negate(desugar_literals(t.operand()));
    case NodeKind::numerator:
      return Term::numerator_of(desugar_literals(t.operand()));
    case NodeKind::denominator:
      return Term::denominator_of(desugar_literals(t.operand()));
    default:
      return Term::binary(t.kind(), desugar_literals(t.lhs()), desugar_literals(t.rhs()),
                          t.decoration());
  }
}

}  // namespace fracterm
