#include <gtest/gtest.h>

#include "fracterm/detail/decode.hpp"
#include "fracterm/error.hpp"
#include "fracterm/rewrite.hpp"
#include "fracterm/semantics.hpp"
#include "fracterm/syntax.hpp"
#include "fracterm/taxonomy.hpp"
#include "support/oracle.hpp"
#include "support/term_gen.hpp"

using namespace fracterm;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::syntax;
}

bool same_value(const Term& a, const Term& b) { return value_eq(eval(a), eval(b)); }

}  // namespace

TEST(Flatten, NestedQuotient) {
  const FlattenResult r = flatten(parse("(1/2)/(3/4)"));
  EXPECT_EQ(r.term, parse("(1*4)/(2*3)"));
  EXPECT_EQ(format(r.term), "1*4/(2*3)");
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].rule, "nested-quotient");
}

TEST(Flatten, NotFlatNumerator) {
  const FlattenResult r = flatten(parse("(1+2/3)/5"));
  EXPECT_TRUE(classify(r.term).flat);
  EXPECT_TRUE(same_value(r.term, parse("5/15")));
}

TEST(Flatten, FoldedDenominator) {
  EXPECT_EQ(format(flatten(parse("5/(1+3)"), FlattenOptions{true}).term), "5/4");
  EXPECT_EQ(format(flatten(parse("5/(1+3)")).term), "5/(1+3)");
}

TEST(Flatten, DivisionFreeInputUnchanged) {
  const FlattenResult r = flatten(parse("1+2*3"));
  EXPECT_EQ(format(r.term), "1+2*3");
  EXPECT_TRUE(r.trace.empty());
}

TEST(Flatten, OpenTermRejected) {
  EXPECT_EQ(kind_of([] { flatten(parse("x/2")); }), ErrorKind::open_term);
}

TEST(Flatten, SoundCompleteAndTraceable) {
  testgen::TermGen gen(20240917);
  int bottoms = 0;
  for (int n = 0; n < 1000; ++n) {
    const Term t = gen.term(5);
    const FlattenResult r = flatten(t);
    EXPECT_TRUE(classify(r.term).flat || !contains_division(r.term)) << format(t);
    const Fracvalue before = eval(t);
    EXPECT_TRUE(value_eq(before, eval(r.term))) << format(t) << " => " << format(r.term);
    if (before.is_bottom()) ++bottoms;
    Term cur = t;
    for (const RewriteStep& s : r.trace) {
      EXPECT_EQ(s.before, cur);
      EXPECT_FALSE(s.before == s.after);
      EXPECT_EQ(parse(format(s.after)), s.after);
      cur = s.after;
    }
    EXPECT_EQ(cur, r.term);
  }
  EXPECT_GT(bottoms, 0);
}

TEST(Simplify, GoldenValues) {
  EXPECT_EQ(format(simplify(parse("4/6"))), "2/3");
  EXPECT_EQ(format(simplify(parse("2/4"))), "1/2");
  EXPECT_EQ(format(simplify(parse("-3/-9"))), "1/3");
  EXPECT_EQ(format(simplify(parse("4/2"))), "2/1");
  EXPECT_EQ(format(demote(simplify(parse("4/2")))), "2");
  EXPECT_EQ(format(simplify(parse("0/-5"))), "0/1");
}

TEST(Simplify, Errors) {
  EXPECT_EQ(kind_of([] { simplify(parse("5/(1+3)")); }), ErrorKind::not_simple);
  EXPECT_EQ(kind_of([] { simplify(parse("1/0")); }), ErrorKind::undefined);
}

TEST(Simplify, CanonicalOnClasses) {
  for (int a = -30; a <= 30; ++a) {
    for (int b = -30; b <= 30; ++b) {
      if (b == 0) continue;
      const Term t = Term::divide(Term::literal(Integer(a)), Term::literal(Integer(b)));
      const Term s = simplify(t);
      EXPECT_TRUE(classify(s).simplified);
      EXPECT_EQ(simplify(s), s);
      EXPECT_TRUE(simple_fracterm_eq(s, t));
    }
  }
  for (int a = -12; a <= 12; ++a) {
    for (int b = -12; b <= 12; ++b) {
      if (b == 0) continue;
      const Term t = Term::divide(Term::literal(Integer(a)), Term::literal(Integer(b)));
      for (int c = -12; c <= 12; c += 5) {
        for (int d = -12; d <= 12; ++d) {
          if (d == 0) continue;
          const Term u = Term::divide(Term::literal(Integer(c)), Term::literal(Integer(d)));
          EXPECT_EQ(simplify(t) == simplify(u), simple_fracterm_eq(t, u));
        }
      }
    }
  }
}

TEST(SimpleFractermEq, Examples) {
  EXPECT_TRUE(simple_fracterm_eq(parse("1/2"), parse("2/4")));
  EXPECT_TRUE(simple_fracterm_eq(parse("1/0"), parse("5/0")));
  EXPECT_FALSE(simple_fracterm_eq(parse("1/2"), parse("1/3")));
  EXPECT_FALSE(simple_fracterm_eq(parse("1/0"), parse("0/1")));
  EXPECT_EQ(kind_of([] { simple_fracterm_eq(parse("1/(1+1)"), parse("1/2")); }),
            ErrorKind::not_simple);
}

TEST(AddFamily, Strategies) {
  EXPECT_EQ(format(add_family(parse("1/2"), parse("3/2"), AddStrategy::same_denom)), "(1+3)/2");
  const Term cross = add_family(parse("1/2"), parse("3/2"), AddStrategy::cross);
  EXPECT_EQ(format(cross), "(1*2+2*3)/(2*2)");
  for (const char* allowed : {"4/2", "8/4", "(2+6)/4", "2"}) {
    EXPECT_TRUE(same_value(cross, parse(allowed))) << allowed;
  }
  EXPECT_EQ(format(add_family(parse("1/2"), parse("3/2"), AddStrategy::numeral)), "8/4");
  EXPECT_EQ(format(add_family(parse("1+1"), parse("1"), AddStrategy::trivial)), "1+1+1");
  EXPECT_EQ(add_family(parse("1+1"), parse("1"), AddStrategy::trivial),
            Term::add(parse("1+1"), parse("1")));
}

TEST(AddFamily, Applicability) {
  EXPECT_EQ(kind_of([] { add_family(parse("1"), parse("1/2"), AddStrategy::cross); }),
            ErrorKind::strategy_inapplicable);
  EXPECT_EQ(kind_of([] { add_family(parse("1/(1+1)"), parse("1/2"), AddStrategy::numeral); }),
            ErrorKind::strategy_inapplicable);
  EXPECT_EQ(kind_of([] { add_family(parse("1/2"), parse("1/2"), AddStrategy::trivial); }),
            ErrorKind::strategy_inapplicable);
  EXPECT_EQ(format(add_family(parse("1/2"), parse("1/3"), AddStrategy::same_denom)),
            "(1*3+2*1)/(2*3)");
  EXPECT_EQ(parse_strategy("same-denom"), AddStrategy::same_denom);
  EXPECT_EQ(kind_of([] { parse_strategy("lcm"); }), ErrorKind::strategy_inapplicable);
}

TEST(AddFamily, CoherentWithOracle) {
  testgen::TermGen gen(31337);
  for (int n = 0; n < 500; ++n) {
    const Term x = gen.simple_fracterm(-9, 9);
    const Term y = gen.simple_fracterm(-9, 9);
    const auto expected = *oracle::value(x) + *oracle::value(y);
    const auto all = add_family_all(x, y);
    ASSERT_GE(all.size(), 3u);
    for (const auto& [strategy, result] : all) {
      EXPECT_EQ(oracle::value(result), expected) << to_string(strategy) << " " << format(result);
    }
  }
}
