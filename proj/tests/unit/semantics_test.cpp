#include <gtest/gtest.h>

#include "fracterm/detail/decode.hpp"
#include "fracterm/error.hpp"
#include "fracterm/semantics.hpp"
#include "fracterm/shape.hpp"
#include "fracterm/syntax.hpp"
#include "support/oracle.hpp"
#include "support/term_gen.hpp"

using namespace fracterm;

namespace {

Fracvalue ev(const char* text, Policy p = Policy::common_meadow, ShapeId s = ShapeId::rat_pcs) {
  return eval(parse(text), EvalConfig{p, s, {}});
}

bool is_value(const Fracvalue& v, int a, int b = 1) {
  return v.is_number() && detail::decode(v.number()) == oracle::ratio(a, b);
}

constexpr Policy kPolicies[] = {Policy::partial, Policy::suppes_ono, Policy::common_meadow};
constexpr ShapeId kRatShapes[] = {ShapeId::rat_pcs, ShapeId::rat_ssft, ShapeId::rat_rns};

}  // namespace

TEST(Policies, Names) {
  for (Policy p : kPolicies) EXPECT_EQ(parse_policy(to_string(p)), p);
  EXPECT_EQ(to_string(Policy::suppes_ono), "suppes-ono");
}

TEST(Eval, DivisionByZero) {
  for (ShapeId s : kRatShapes) {
    EXPECT_TRUE(ev("1/0", Policy::common_meadow, s).is_bottom());
    EXPECT_TRUE(is_value(ev("1/0", Policy::suppes_ono, s), 0));
    EXPECT_TRUE(ev("1/0 + 1", Policy::common_meadow, s).is_bottom());
    EXPECT_TRUE(ev("0/0", Policy::common_meadow, s).is_bottom());
    try {
      ev("1/0", Policy::partial, s);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::division_by_zero);
    }
  }
}

TEST(Eval, SuppesOnoIsPointwise) {
  EXPECT_TRUE(is_value(ev("1/0 + 1", Policy::suppes_ono), 1));
  EXPECT_TRUE(is_value(ev("2/(1/0)", Policy::suppes_ono), 0));
  EXPECT_TRUE(is_value(ev("(1/0 + 3)/2", Policy::suppes_ono), 3, 2));
}

TEST(Eval, Errors) {
  try {
    ev("x + 1");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::open_term);
  }
  try {
    ev("1", Policy::common_meadow, ShapeId::int_signed);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_shape);
  }
}

TEST(ValueEq, Examples) {
  EXPECT_TRUE(value_eq(ev("1/2"), ev("2/4")));
  EXPECT_TRUE(value_eq(Fracvalue::bottom(), Fracvalue::bottom()));
  EXPECT_FALSE(value_eq(ev("0/0"), ev("0")));
  EXPECT_FALSE(value_eq(Fracvalue(Peripheral::nan), Fracvalue::bottom()));
  EXPECT_TRUE(value_eq(ev("1/2", Policy::common_meadow, ShapeId::rat_rns),
                       ev("2/4", Policy::common_meadow, ShapeId::rat_rns)));
}

TEST(ValueExtraction, AlwaysBottom) {
  EXPECT_TRUE(value_num(ev("2/(4/5)")).is_bottom());
  EXPECT_TRUE(value_num(Fracvalue::bottom()).is_bottom());
  EXPECT_TRUE(value_denom(ev("1/2")).is_bottom());
  EXPECT_TRUE(ev("num(1/2)").is_bottom());
}

TEST(Eval, NonBottomPeripheralsHaveNoAlgebra) {
  EXPECT_EQ(to_string(Peripheral::plus_infinity), "+inf");
  EXPECT_FALSE(Fracvalue(Peripheral::infinity).is_number());
  EXPECT_FALSE(Fracvalue(Peripheral::infinity).is_bottom());
}

TEST(Eval, RandomTermsAgreeWithOracle) {
  testgen::TermGen gen(0x5eed);
  int checked = 0;
  for (int n = 0; n < 600; ++n) {
    const Term t = gen.term(5);
    const auto expected = oracle::value(t);
    for (ShapeId s : kRatShapes) {
      const Fracvalue cm = eval(t, EvalConfig{Policy::common_meadow, s, {}});
      if (!expected) {
        if (s != ShapeId::rat_rns) EXPECT_TRUE(cm.is_bottom()) << format(t);
        continue;
      }
      for (Policy p : kPolicies) {
        const Fracvalue v = eval(t, EvalConfig{p, s, {}});
        ASSERT_TRUE(v.is_number()) << format(t);
        EXPECT_EQ(detail::decode(v.number()), expected) << format(t) << " " << to_string(s);
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(Eval, BottomAbsorbsInRandomContexts) {
  testgen::TermGen gen(77);
  const Term hole = parse("1/0");
  for (int n = 0; n < 300; ++n) {
    Term ctx = hole;
    const int depth = gen.pick(1, 4);
    for (int d = 0; d < depth; ++d) {
      const Term other = gen.term(2);
      const bool left = gen.pick(0, 1) == 0;
      switch (gen.pick(0, 4)) {
        case 0: ctx = left ? Term::add(ctx, other) : Term::add(other, ctx); break;
        case 1: ctx = left ? Term::subtract(ctx, other) : Term::subtract(other, ctx); break;
        case 2: ctx = left ? Term::multiply(ctx, other) : Term::multiply(other, ctx); break;
        case 3: ctx = left ? Term::divide(ctx, other) : Term::divide(other, ctx); break;
        default: ctx = Term::negate(ctx); break;
      }
    }
    EXPECT_TRUE(eval(ctx).is_bottom()) << format(ctx);
  }
}

TEST(Eval, ShapeIndependence) {
  testgen::TermGen gen(4242);
  for (int n = 0; n < 300; ++n) {
    const Term t = gen.term(4);
    const Fracvalue p = eval(t, EvalConfig{Policy::common_meadow, ShapeId::rat_pcs, {}});
    const Fracvalue q = eval(t, EvalConfig{Policy::common_meadow, ShapeId::rat_ssft, {}});
    ASSERT_EQ(p.is_bottom(), q.is_bottom()) << format(t);
    if (p.is_number()) {
      EXPECT_TRUE(label_eq(convert(q.number(), ShapeId::rat_pcs), p.number())) << format(t);
    }
  }
}

TEST(Eval, SuppesOnoZeroDivisor) {
  testgen::TermGen gen(99);
  for (int n = 0; n < 100; ++n) {
    const Term t = Term::divide(gen.term(3), Term::literal(Integer(0)));
    const Fracvalue v = eval(t, EvalConfig{Policy::suppes_ono, ShapeId::rat_pcs, {}});
    ASSERT_TRUE(v.is_number());
    EXPECT_TRUE(is_zero(v.number())) << format(t);
  }
}
