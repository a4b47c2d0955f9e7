#include <gtest/gtest.h>

#include <vector>

#include "fracterm/error.hpp"
#include "fracterm/syntax.hpp"
#include "fracterm/taxonomy.hpp"
#include "fracterm/term.hpp"

using namespace fracterm;

namespace {

Term lit(const char* d) { return Term::literal(std::string(d)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::syntax;
}

// Every term of depth <= `depth` over the given literals and all binary operators.
std::vector<Term> all_terms(int depth, const std::vector<Term>& leaves) {
  if (depth == 0) return leaves;
  std::vector<Term> smaller = all_terms(depth - 1, leaves);
  std::vector<Term> out = leaves;
  for (const Term& a : smaller) {
    for (const Term& b : smaller) {
      for (NodeKind k : {NodeKind::add, NodeKind::subtract, NodeKind::multiply, NodeKind::divide}) {
        out.push_back(Term::binary(k, a, b));
      }
    }
  }
  return out;
}

}  // namespace

TEST(Parse, MinimalDivision) {
  EXPECT_EQ(parse("1/2"), Term::divide(lit("1"), lit("2")));
}

TEST(Parse, NestedNumerator) {
  EXPECT_EQ(parse("(1+2/3)/5"),
            Term::divide(Term::add(lit("1"), Term::divide(lit("2"), lit("3"))), lit("5")));
}

TEST(Parse, NestedDenominator) {
  EXPECT_EQ(parse("2/(4/5)"), Term::divide(lit("2"), Term::divide(lit("4"), lit("5"))));
}

TEST(Parse, PrecedenceAndAssociativity) {
  EXPECT_EQ(parse("1+2*3"), Term::add(lit("1"), Term::multiply(lit("2"), lit("3"))));
  EXPECT_EQ(parse("1-2-3"), Term::subtract(Term::subtract(lit("1"), lit("2")), lit("3")));
  EXPECT_EQ(parse("8/4/2"), Term::divide(Term::divide(lit("8"), lit("4")), lit("2")));
}

TEST(Parse, SignedLiteralBeforeDigits) {
  EXPECT_EQ(parse("-3/7"), Term::divide(lit("-3"), lit("7")));
  EXPECT_EQ(parse("-3/-9"), Term::divide(lit("-3"), lit("-9")));
  EXPECT_EQ(parse("-(1)"), Term::negate(lit("1")));
}

TEST(Parse, LiteralDigitsKeptVerbatim) {
  EXPECT_EQ(parse("007").text(), "007");
  EXPECT_FALSE(parse("007") == parse("7"));
}

TEST(Parse, Decorations) {
  EXPECT_EQ(parse("1/ft 2"), Term::divide(lit("1"), lit("2"), Decoration::fracterm));
  EXPECT_EQ(parse("1/fv(2)"), Term::divide(lit("1"), lit("2"), Decoration::fracvalue));
}

TEST(Parse, Variables) {
  EXPECT_EQ(parse("1/fv2"), Term::divide(lit("1"), Term::variable("fv2")));
  EXPECT_EQ(parse("x/y1"), Term::divide(Term::variable("x"), Term::variable("y1")));
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  for (const char* bad : {"", "1/", "(1+2", "1+*2", "1 2", "1.5", "/3"}) {
    try {
      parse(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::syntax) << bad;
      EXPECT_TRUE(e.position().has_value()) << bad;
    }
  }
}

TEST(Format, Notations) {
  const Term half = Term::divide(lit("1"), lit("2"));
  EXPECT_EQ(format(half), "1/2");
  EXPECT_EQ(format(half, Notation::colon), "1:2");
  EXPECT_EQ(format(half, Notation::fraction), "frac(1, 2)");
  EXPECT_EQ(format(Term::divide(lit("1"), lit("0"))), "1/0");
}

TEST(Format, RoundTripAllNotations) {
  std::vector<Term> leaves = {lit("0"), lit("-3"), lit("12"), Term::negate(lit("2")),
                              Term::variable("x")};
  const auto terms = all_terms(2, leaves);
  for (const Term& t : terms) {
    for (Notation n : {Notation::inline_slash, Notation::colon, Notation::fraction}) {
      EXPECT_EQ(parse(format(t, n), n), t) << format(t);
    }
  }
}

TEST(Format, RoundTripDecorated) {
  for (const char* text : {"1/ft 2", "(1/fv 2)/ft (3/4)", "-(1/fv 0)+2"}) {
    const Term t = parse(text);
    for (Notation n : {Notation::inline_slash, Notation::colon, Notation::fraction}) {
      EXPECT_EQ(parse(format(t, n), n), t) << text;
    }
  }
}

TEST(Taxonomy, IsFracterm) {
  EXPECT_TRUE(is_fracterm(parse("1/2")));
  EXPECT_FALSE(is_fracterm(parse("1+2")));
  EXPECT_TRUE(is_fracterm(parse("(1/0)/0")));
}

TEST(Taxonomy, NotSimpleButFlat) {
  const TaxonomyFlags f = classify(parse("5/(1+3)"));
  EXPECT_TRUE(f.is_fracterm);
  EXPECT_TRUE(f.flat);
  EXPECT_FALSE(f.simple);
  EXPECT_FALSE(f.simplified);
  EXPECT_FALSE(f.proper.has_value());
}

TEST(Taxonomy, NotFlat) {
  EXPECT_FALSE(classify(parse("(1+2/3)/5")).flat);
}

TEST(Taxonomy, SimpleSafeNotSimplified) {
  const TaxonomyFlags f = classify(parse("4/6"));
  EXPECT_TRUE(f.simple);
  EXPECT_TRUE(f.safe);
  EXPECT_FALSE(f.simplified);
}

TEST(Taxonomy, SimplifiedImproper) {
  const TaxonomyFlags f = classify(parse("5/4"));
  EXPECT_TRUE(f.simplified);
  ASSERT_TRUE(f.proper.has_value());
  EXPECT_FALSE(*f.proper);
  EXPECT_TRUE(*classify(parse("3/4")).proper);
}

TEST(Taxonomy, SignNormalization) {
  EXPECT_FALSE(classify(parse("-3/-9")).simplified);
  EXPECT_FALSE(classify(parse("1/-3")).simplified);
  EXPECT_TRUE(classify(parse("-1/3")).simplified);
  EXPECT_FALSE(classify(parse("1/0")).simplified);
  EXPECT_FALSE(classify(parse("1/0")).safe);
  EXPECT_FALSE(classify(parse("02/3")).simplified);
}

TEST(Taxonomy, Closedness) {
  EXPECT_FALSE(classify(parse("x/2")).closed);
  EXPECT_TRUE(classify(parse("1/2")).closed);
}

TEST(Taxonomy, ChainOverDepthThree) {
  std::vector<Term> leaves;
  for (int k = -9; k <= 9; k += 3) leaves.push_back(Term::literal(Integer(k)));
  leaves.push_back(lit("0"));
  // Depth 3 over the full operator set is large; use a literal subset at the top.
  const auto shallow = all_terms(2, {lit("0"), lit("-3"), lit("6")});
  std::vector<Term> terms = all_terms(1, leaves);
  for (const Term& a : shallow) {
    terms.push_back(Term::divide(a, lit("2")));
    terms.push_back(Term::divide(lit("-9"), a));
  }
  for (const Term& t : terms) {
    const TaxonomyFlags f = classify(t);
    if (f.simplified) EXPECT_TRUE(f.simple) << format(t);
    if (f.simple) EXPECT_TRUE(f.flat) << format(t);
    if (f.flat) EXPECT_TRUE(f.is_fracterm) << format(t);
    if (f.safe) EXPECT_TRUE(f.simple) << format(t);
    EXPECT_EQ(f.proper.has_value(), f.simple) << format(t);
  }
}

TEST(Taxonomy, DecorationNeutral) {
  for (const char* text : {"1/ft 2", "(1/fv 2)/ft 3", "4/fv 6"}) {
    const Term t = parse(text);
    EXPECT_EQ(classify(t), classify(erase_decorations(t))) << text;
  }
}

TEST(Extraction, NumeratorDenominator) {
  EXPECT_EQ(numerator(parse("2/(4/5)")), lit("2"));
  EXPECT_EQ(denominator(parse("1/2")), lit("2"));
  EXPECT_EQ(kind_of([] { numerator(parse("1+2")); }), ErrorKind::not_a_fracterm);
}

TEST(Extraction, Reconstruction) {
  for (const char* text : {"1/2", "(1/ft 2)/fv (3+x)", "2/(4/5)"}) {
    const Term t = erase_decorations(parse(text));
    EXPECT_EQ(Term::divide(numerator(t), denominator(t)), t) << text;
  }
}

TEST(Levels, AbstractionOrder) {
  EXPECT_LT(*abstraction_rank(Level::fracsign_occurrence), *abstraction_rank(Level::fracsign));
  EXPECT_LT(*abstraction_rank(Level::fracsign), *abstraction_rank(Level::fracterm));
  EXPECT_LT(*abstraction_rank(Level::fracterm), *abstraction_rank(Level::fracvalue));
  EXPECT_FALSE(abstraction_rank(Level::fraxion).has_value());
}

TEST(Desugar, ExpandsIntoZeroOneSignature) {
  const Term t = desugar_literals(parse("12/-3"));
  std::vector<Term> stack = {t};
  while (!stack.empty()) {
    Term s = stack.back();
    stack.pop_back();
    if (s.is_literal()) {
      EXPECT_TRUE(s.text() == "0" || s.text() == "1") << s.text();
    } else if (s.kind() == NodeKind::negate) {
      stack.push_back(s.operand());
    } else {
      stack.push_back(s.lhs());
      stack.push_back(s.rhs());
    }
  }
}
