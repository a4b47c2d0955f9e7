#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "fracterm/integer.hpp"

namespace fracterm {

/// Level decoration carried by a division sign: t /ft r or t /fv r.
enum class Decoration : std::uint8_t { none, fracterm, fracvalue };

enum class NodeKind : std::uint8_t {
  literal,
  variable,
  negate,
  add,
  subtract,
  multiply,
  divide,
  numerator,    // Num(t), an extraction operator
  denominator,  // Denom(t)
};

/// Immutable expression tree over 0, 1, +, -, *, / with decimal numerals as
/// atoms. Copies share structure; equality is structural and includes
/// decorations (use erase_decorations to compare modulo decorations).
class Term {
 public:
  /// `digits` is an optionally minus-signed nonempty digit string kept verbatim,
  /// so "007" and "7" are distinct numerals.
  static Term literal(std::string digits);
  static Term literal(const Integer& value);
  static Term variable(std::string name);
  static Term negate(Term operand);
  static Term add(Term lhs, Term rhs);
  static Term subtract(Term lhs, Term rhs);
  static Term multiply(Term lhs, Term rhs);
  static Term divide(Term lhs, Term rhs, Decoration decoration = Decoration::none);
  static Term numerator_of(Term operand);
  static Term denominator_of(Term operand);
  static Term binary(NodeKind kind, Term lhs, Term rhs,
                     Decoration decoration = Decoration::none);

  NodeKind kind() const noexcept;

  /// Digits of a literal or name of a variable; empty otherwise.
  const std::string& text() const noexcept;

  /// Operand of negate / numerator / denominator.
  const Term& operand() const;
  const Term& lhs() const;
  const Term& rhs() const;
  Decoration decoration() const noexcept;

  bool is_literal() const noexcept { return kind() == NodeKind::literal; }
  bool is_division() const noexcept { return kind() == NodeKind::divide; }
  bool is_binary() const noexcept;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  static Term unary(NodeKind kind, Term operand);
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Value of a literal node. Throws Error(invalid) on non-literals.
Integer literal_value(const Term& t);

/// True for literals whose digits have no redundant leading zero and are not "-0".
bool is_canonical_literal(const Term& t);

Term erase_decorations(const Term& t);
bool contains_division(const Term& t);
bool contains_variable(const Term& t);
bool contains_extraction(const Term& t);  // Num / Denom anywhere
std::size_t node_count(const Term& t);

/// Expands every decimal literal into the constants 0 and 1 combined with + and *,
/// using Horner's scheme over a ten built as 1+1+...+1. Negative literals become
/// negations.
Term desugar_literals(const Term& t);

}  // namespace fracterm
