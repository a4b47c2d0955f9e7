#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "fracterm/detail/decode.hpp"
#include "fracterm/error.hpp"
#include "fracterm/integers.hpp"
#include "fracterm/naturals.hpp"
#include "fracterm/normality.hpp"
#include "fracterm/shape.hpp"
#include "fracterm/syntax.hpp"
#include "support/oracle.hpp"

using namespace fracterm;
using detail::decode;
using detail::decode_integer;

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

FiniteSet empty() { return FiniteSet(); }

std::vector<ShapeId> shapes_of(Label label) {
  std::vector<ShapeId> out;
  for (ShapeId s : kAllShapes) {
    if (label_of(s) == label) out.push_back(s);
  }
  return out;
}

Instance pair_instance(const Integer& a, const Integer& b, ShapeId s) { return encode_ratio(a, b, s); }

}  // namespace

TEST(ShapeIds, RoundTripAndRejections) {
  for (ShapeId s : kAllShapes) EXPECT_EQ(parse_shape_id(to_string(s)), s);
  EXPECT_EQ(kind_of([] { parse_shape_id("real.cauchy"); }), ErrorKind::unsupported_shape);
  EXPECT_EQ(kind_of([] { parse_shape_id("complex.polar"); }), ErrorKind::unsupported_shape);
  EXPECT_EQ(kind_of([] { parse_shape_id("nat.roman"); }), ErrorKind::unsupported_shape);
}

TEST(Naturals, VonNeumannThree) {
  const FiniteSet zero = empty();
  const FiniteSet one = FiniteSet::of({zero});
  const FiniteSet two = FiniteSet::of({zero, one});
  const FiniteSet three = FiniteSet::of({zero, one, two});
  EXPECT_EQ(std::get<VonNeumannNat>(encode(3, ShapeId::nat_vn)).set, three);
}

TEST(Naturals, ZermeloThree) {
  const FiniteSet three =
      FiniteSet::singleton(FiniteSet::singleton(FiniteSet::singleton(empty())));
  EXPECT_EQ(std::get<ZermeloNat>(encode(3, ShapeId::nat_zermelo)).set, three);
}

TEST(Naturals, DedekindZero) {
  EXPECT_EQ(std::get<DedekindNat>(encode(0, ShapeId::nat_dedekind)).successors, 0);
}

TEST(Naturals, EncodeErrors) {
  EXPECT_EQ(kind_of([] { encode(-1, ShapeId::nat_dec); }), ErrorKind::negative_into_nat);
  EXPECT_EQ(kind_of([] { encode(kSetNatCapacity + 1, ShapeId::nat_vn); }), ErrorKind::capacity);
  EXPECT_EQ(kind_of([] { make_strict_decimal_nat("07"); }), ErrorKind::invalid_instance);
  EXPECT_EQ(kind_of([] { make_decimal_nat("7a"); }), ErrorKind::invalid_instance);
  EXPECT_EQ(kind_of([] { make_signed_int(-1, "0"); }), ErrorKind::invalid_instance);
}

TEST(Naturals, VonNeumannOrderIsMembership) {
  for (unsigned i = 0; i <= 12; ++i) {
    for (unsigned j = 0; j <= 12; ++j) {
      EXPECT_EQ(i < j, vn_encode(j).set.contains(vn_encode(i).set)) << i << " " << j;
    }
  }
}

TEST(Naturals, SetValuesValidate) {
  EXPECT_EQ(vn_value(vn_encode(7).set), 7u);
  EXPECT_EQ(zermelo_value(zermelo_encode(7).set), 7u);
  EXPECT_FALSE(vn_value(FiniteSet::singleton(FiniteSet::singleton(empty()))).has_value());
}

TEST(Encode, DecodeRoundTrip) {
  for (ShapeId s : kAllShapes) {
    const int lo = label_of(s) == Label::nat ? 0 : -60;
    for (int k = lo; k <= 60; ++k) {
      const Instance i = encode(k, s);
      EXPECT_EQ(shape_of(i), s);
      EXPECT_EQ(*decode(i), oracle::Rational(k)) << to_string(s) << " " << k;
    }
  }
  const Integer big = parse_integer("123456789012345678901234567890");
  EXPECT_EQ(decode_integer(encode(big, ShapeId::nat_dedekind)), big);
  EXPECT_EQ(decode_integer(encode(-big, ShapeId::int_diffpair)), -big);
}

TEST(Equality, DecimalLeadingZeroes) {
  const Instance a = make_decimal_nat("007");
  const Instance b = make_decimal_nat("7");
  EXPECT_FALSE(instance_eq(a, b));
  EXPECT_TRUE(label_eq(a, b));
}

TEST(Equality, DifferencePairs) {
  const Instance a = make_diff_pair("5", "2");
  const Instance b = make_diff_pair("3", "0");
  EXPECT_FALSE(instance_eq(a, b));
  EXPECT_TRUE(label_eq(a, b));
}

TEST(Equality, VonNeumannReflexive) {
  EXPECT_TRUE(instance_eq(encode(2, ShapeId::nat_vn), encode(2, ShapeId::nat_vn)));
}

TEST(Equality, PairClasses) {
  EXPECT_TRUE(label_eq(pair_instance(1, 2, ShapeId::rat_pcs), pair_instance(2, 4, ShapeId::rat_pcs)));
  EXPECT_TRUE(instance_eq(pair_instance(1, 2, ShapeId::rat_pcs), pair_instance(2, 4, ShapeId::rat_pcs)));
  EXPECT_EQ(make_pair_class(5, 0), (PairClass{0, 0}));
  EXPECT_EQ(make_pair_class(3, -6), (PairClass{-1, 2}));
}

TEST(Equality, MismatchedShapes) {
  EXPECT_EQ(kind_of([] { label_eq(encode(1, ShapeId::nat_dec), encode(1, ShapeId::nat_sdn)); }),
            ErrorKind::shape_mismatch);
  EXPECT_EQ(kind_of([] { shape_add(encode(1, ShapeId::nat_vn), encode(1, ShapeId::nat_zermelo)); }),
            ErrorKind::shape_mismatch);
}

TEST(Arithmetic, Examples) {
  EXPECT_TRUE(instance_eq(shape_add(encode(2, ShapeId::nat_vn), encode(3, ShapeId::nat_vn)),
                          encode(5, ShapeId::nat_vn)));
  const Instance sum = shape_add(make_diff_pair("5", "2"), make_diff_pair("1", "4"));
  EXPECT_TRUE(instance_eq(sum, make_diff_pair("6", "6")));
  EXPECT_TRUE(label_eq(sum, encode(0, ShapeId::int_diffpair)));
  const auto q = shape_div(encode(1, ShapeId::rat_pcs), encode(0, ShapeId::rat_pcs));
  ASSERT_TRUE(q.has_value());
  EXPECT_TRUE(is_bottom_class(*q));
  EXPECT_EQ(std::get<PairClass>(*q), (PairClass{0, 0}));
  EXPECT_EQ(kind_of([] { shape_neg(encode(1, ShapeId::nat_sdn)); }),
            ErrorKind::unsupported_operation);
}

// Shape operations commute with decode into exact arithmetic.
TEST(Arithmetic, DecodeHomomorphismIntegers) {
  for (ShapeId s : kAllShapes) {
    if (label_of(s) == Label::rat) continue;
    const bool nat = label_of(s) == Label::nat;
    const int lo = nat ? 0 : -12;
    for (int a = lo; a <= 12; ++a) {
      for (int b = lo; b <= 12; ++b) {
        const Instance x = encode(a, s);
        const Instance y = encode(b, s);
        EXPECT_EQ(decode_integer(shape_add(x, y)), a + b) << to_string(s);
        EXPECT_EQ(decode_integer(shape_mul(x, y)), a * b) << to_string(s);
        if (!nat) EXPECT_EQ(decode_integer(shape_neg(x)), -a) << to_string(s);
      }
    }
  }
}

TEST(Arithmetic, DecodeHomomorphismLargeMagnitudes) {
  for (ShapeId s : {ShapeId::nat_dec, ShapeId::nat_sdn, ShapeId::nat_dedekind, ShapeId::int_signed,
                    ShapeId::int_diffpair}) {
    for (int a = 0; a <= 50; a += 7) {
      for (int b = 0; b <= 50; b += 5) {
        EXPECT_EQ(decode_integer(shape_add(encode(a, s), encode(b, s))), a + b);
        EXPECT_EQ(decode_integer(shape_mul(encode(a, s), encode(b, s))), a * b);
      }
    }
  }
  EXPECT_EQ(decode_integer(shape_mul(encode(50, ShapeId::nat_vn), encode(50, ShapeId::nat_vn))), 2500);
}

TEST(Arithmetic, DecodeHomomorphismRationals) {
  for (ShapeId s : shapes_of(Label::rat)) {
    for (int a = -6; a <= 6; ++a) {
      for (int b = 1; b <= 6; ++b) {
        for (int c = -6; c <= 6; ++c) {
          for (int d = 1; d <= 6; d += 2) {
            const Instance x = pair_instance(a, b, s);
            const Instance y = pair_instance(c, d, s);
            const oracle::Rational rx = oracle::ratio(a, b);
            const oracle::Rational ry = oracle::ratio(c, d);
            EXPECT_EQ(*decode(shape_add(x, y)), rx + ry);
            EXPECT_EQ(*decode(shape_mul(x, y)), rx * ry);
            EXPECT_EQ(*decode(shape_neg(x)), -rx);
            const auto q = shape_div(x, y);
            if (c == 0) {
              EXPECT_TRUE(!q || is_bottom_class(*q) || !decode(*q)) << to_string(s);
            } else {
              ASSERT_TRUE(q.has_value());
              EXPECT_EQ(*decode(*q), rx / ry);
            }
          }
        }
      }
    }
  }
}

TEST(Conversion, Examples) {
  EXPECT_TRUE(instance_eq(convert(encode(3, ShapeId::nat_dedekind), ShapeId::nat_dec),
                          make_decimal_nat("3")));
  EXPECT_TRUE(instance_eq(convert(make_decimal_nat("007"), ShapeId::nat_sdn),
                          make_strict_decimal_nat("7")));
  const Instance two_thirds = SsftRational(parse("2/3"));
  EXPECT_EQ(std::get<PairClass>(convert(two_thirds, ShapeId::rat_pcs)), (PairClass{2, 3}));
  EXPECT_EQ(kind_of([] { convert(encode(1, ShapeId::nat_sdn), ShapeId::int_signed); }),
            ErrorKind::label_mismatch);
}

TEST(Conversion, RoundTripWithinLabels) {
  for (Label label : {Label::nat, Label::integer, Label::rat}) {
    const auto shapes = shapes_of(label);
    for (ShapeId from : shapes) {
      for (const Instance& i : enumerate_instances(from, 4)) {
        if (is_bottom_class(i) && from != ShapeId::rat_rns) continue;
        if (from == ShapeId::rat_rns && !decode(i)) continue;
        for (ShapeId to : shapes) {
          const Instance back = convert(convert(i, to), from);
          EXPECT_TRUE(label_eq(back, i)) << to_string(from) << " -> " << to_string(to);
          EXPECT_EQ(decode(convert(i, to)), decode(i));
        }
      }
    }
  }
}

TEST(LabelEquality, IsEquivalenceRefinedByInstanceEquality) {
  for (ShapeId s : kAllShapes) {
    unsigned bound = 1;
    std::vector<Instance> sample = enumerate_instances(s, bound);
    while (sample.size() < 100) sample = enumerate_instances(s, ++bound);
    if (sample.size() > 160) sample.resize(160);
    for (const Instance& i : sample) {
      EXPECT_TRUE(label_eq(i, i));
      for (const Instance& j : sample) {
        const bool ij = label_eq(i, j);
        EXPECT_EQ(ij, label_eq(j, i));
        if (instance_eq(i, j)) EXPECT_TRUE(ij);
      }
    }
    // Transitivity on a thinner slice keeps the cubic loop small.
    for (std::size_t a = 0; a < sample.size(); a += 3) {
      for (std::size_t b = 0; b < sample.size(); b += 2) {
        if (!label_eq(sample[a], sample[b])) continue;
        for (const Instance& c : sample) {
          if (label_eq(sample[b], c)) EXPECT_TRUE(label_eq(sample[a], c)) << to_string(s);
        }
      }
    }
  }
}

TEST(Normality, Matrix) {
  EXPECT_FALSE(is_normal(ShapeId::nat_dec, 10));
  EXPECT_TRUE(is_normal(ShapeId::nat_sdn, 10));
  EXPECT_TRUE(is_normal(ShapeId::nat_dedekind, 10));
  EXPECT_TRUE(is_normal(ShapeId::nat_vn, 10));
  EXPECT_TRUE(is_normal(ShapeId::nat_zermelo, 10));
  EXPECT_TRUE(is_normal(ShapeId::int_signed, 10));
  EXPECT_FALSE(is_normal(ShapeId::int_diffpair, 10));
  EXPECT_TRUE(is_normal(ShapeId::rat_pcs, 10));
  EXPECT_TRUE(is_normal(ShapeId::rat_ssft, 10));
  EXPECT_FALSE(is_normal(ShapeId::rat_rns, 10));
}

TEST(Normality, WitnessesAreGenuine) {
  for (ShapeId s : kAllShapes) {
    const NormalityReport r = check_normality(s, 10);
    EXPECT_EQ(r.normal, !r.witness.has_value());
    if (r.witness) {
      EXPECT_FALSE(instance_eq(r.witness->first, r.witness->second));
      EXPECT_TRUE(label_eq(r.witness->first, r.witness->second));
    }
    EXPECT_EQ(describe(s, 10).normal, r.normal);
  }
  EXPECT_TRUE(is_normality_witness(make_decimal_nat("007"), make_decimal_nat("7")));
  EXPECT_TRUE(is_normality_witness(encode_ratio(1, 2, ShapeId::rat_rns),
                                   encode_ratio(2, 4, ShapeId::rat_rns)));
}
