#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "nsgff/classify.hpp"
#include "nsgff/enumerate.hpp"
#include "oracles.hpp"

namespace nsgff {
namespace {

using V = std::vector<Int>;

NumericalSemigroup sg(std::initializer_list<Int> g) {
  return NumericalSemigroup::from_generators(g);
}

bool is_tail_from(const RelativeIdeal& e, Int start) {
  return e.min() == start && e.tail_start() == start;
}

/// Brute-force trace membership: z in (H - C) + C.
bool oracle_trace_contains(const oracle::Semigroup& o, const V& canon, Int z) {
  for (Int x = -o.limit; x <= z; ++x) {
    if (oracle::ideal_contains(o, canon, z - x) &&
        oracle::colon_contains(o, {0}, canon, x)) {
      return true;
    }
  }
  return false;
}

TEST(Trace, Examples) {
  EXPECT_TRUE(is_tail_from(trace_ideal(sg({7, 8, 11, 17, 20})), 14));
  EXPECT_TRUE(ideal_equals(trace_ideal(sg({3, 4})), unit_ideal(sg({3, 4}))));
  // <4,5,6> is symmetric (gaps 1,2,3,7), so its trace is all of H and it is
  // not far-flung.
  const auto h = sg({4, 5, 6});
  EXPECT_TRUE(h.is_symmetric());
  EXPECT_TRUE(ideal_equals(trace_ideal(h), unit_ideal(h)));
  EXPECT_FALSE(ideal_equals(trace_ideal(h), conductor_ideal(h)));
  // A trace strictly between conductor and H.
  const auto g = sg({5, 6, 7});
  const auto t = trace_ideal(g);
  EXPECT_TRUE(ideal_subset(conductor_ideal(g), t));
  EXPECT_TRUE(ideal_subset(t, unit_ideal(g)));
  EXPECT_FALSE(ideal_equals(t, conductor_ideal(g)));
  EXPECT_FALSE(ideal_equals(t, unit_ideal(g)));
}

TEST(FarFlung, Examples) {
  for (Int n = 1; n <= 3; ++n) {
    const auto h = family(FamilySpec::type2(n));
    for (auto route : {FfgRoute::definition, FfgRoute::square, FfgRoute::sumset}) {
      EXPECT_TRUE(is_far_flung(h, route)) << h.to_string() << to_string(route);
    }
  }
  for (auto route : {FfgRoute::definition, FfgRoute::square, FfgRoute::sumset}) {
    EXPECT_FALSE(is_far_flung(sg({4, 5, 6}), route));
    EXPECT_TRUE(is_far_flung(sg({9, 10, 11, 12, 15}), route));
    EXPECT_TRUE(is_far_flung(sg({7, 8, 11, 17, 20}), route));
  }
}

TEST(Classify, FullMonoidConvention) {
  const auto r = classify(NumericalSemigroup());
  EXPECT_TRUE(r.flags.ffg);
  EXPECT_TRUE(r.flags.gorenstein);
  EXPECT_TRUE(r.flags.nearly_gorenstein);
  EXPECT_EQ(r.bounds.type_plus_one_le_e, BoundStatus::not_applicable);
}

TEST(NearlyGorenstein, Examples) {
  EXPECT_TRUE(is_nearly_gorenstein(sg({3, 4, 5})));
  EXPECT_TRUE(is_nearly_gorenstein(sg({3, 4})));
  EXPECT_FALSE(is_nearly_gorenstein(sg({7, 8, 11, 17, 20})));
  EXPECT_TRUE(is_gorenstein(sg({3, 4})));
  EXPECT_FALSE(is_gorenstein(sg({3, 4, 5})));
}

TEST(Endomorphism, Examples) {
  EXPECT_EQ(endomorphism_semigroup(sg({4, 5, 6})).min_gens(), (V{4, 5, 6, 7}));
  EXPECT_EQ(endomorphism_semigroup(sg({3, 4})).min_gens(), (V{3, 4, 5}));
  EXPECT_TRUE(endomorphism_semigroup(NumericalSemigroup()).is_natural_numbers());

  for (auto gens : {V{7, 8, 11, 17, 20}, V{3, 4, 5}, V{5, 6, 13, 14}}) {
    const auto check = verify_endomorphism_inheritance(
        NumericalSemigroup::from_generators(gens));
    EXPECT_TRUE(check.b_is_ffg);
    EXPECT_TRUE(check.trace_shift_ok);
  }
  const auto b = endomorphism_semigroup(sg({7, 8, 11, 17, 20}));
  EXPECT_TRUE(is_tail_from(trace_ideal(b), 7));
}

TEST(Endomorphism, Errors) {
  try {
    verify_endomorphism_inheritance(sg({4, 5, 6}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_ffg);
  }
  EXPECT_THROW(verify_endomorphism_inheritance(NumericalSemigroup()), Error);
}

TEST(Bounds, Examples) {
  const auto r3 = bounds_report(sg({13, 14, 15, 16, 17, 18, 21, 23}));
  EXPECT_EQ(r3.type_plus_one_le_e, BoundStatus::holds);
  EXPECT_EQ(r3.e_le_binom, BoundStatus::holds);
  EXPECT_EQ(r3.e_le_rohrbach, BoundStatus::holds);
  ASSERT_TRUE(r3.rohrbach_value.has_value());
  EXPECT_EQ(*r3.rohrbach_value, 13);

  const auto g = bounds_report(sg({3, 4}));
  EXPECT_EQ(g.type_plus_one_le_e, BoundStatus::holds);
  EXPECT_EQ(g.e_le_binom, BoundStatus::not_applicable);
  EXPECT_EQ(g.e_le_rohrbach, BoundStatus::not_applicable);

  const auto n0 = bounds_report(NumericalSemigroup());
  EXPECT_EQ(n0.type_plus_one_le_e, BoundStatus::not_applicable);
}

TEST(Bounds, ExtremalExamples) {
  const V r1{5, 6, 13, 14}, r2{9, 10, 11, 12, 15},
      r3{13, 14, 15, 16, 17, 18, 21, 23};
  for (const auto& gens : {r1, r2, r3}) {
    const auto h = NumericalSemigroup::from_generators(gens);
    EXPECT_TRUE(is_far_flung(h));
    EXPECT_EQ(h.multiplicity(), known_table(h.type())) << h.to_string();
  }
  EXPECT_EQ(sg({5, 6, 13, 14}).type(), 3);
  EXPECT_EQ(sg({9, 10, 11, 12, 15}).type(), 4);
  EXPECT_EQ(sg({13, 14, 15, 16, 17, 18, 21, 23}).type(), 5);
}

TEST(Families, Generators) {
  EXPECT_EQ(family(FamilySpec::type3_1_2(1)).min_gens(), (V{5, 6, 13, 14}));
  EXPECT_EQ(family(FamilySpec::arithmetic(5, 1)).min_gens(),
            (V{5, 6, 7, 8, 9}));
  EXPECT_EQ(family(FamilySpec::max_interval(3)).min_gens(), (V{3, 4, 5}));
  EXPECT_EQ(family(FamilySpec::type2(4)).min_gens(), (V{3, 13, 14}));
  EXPECT_EQ(family(FamilySpec::type3_2_1(1)).min_gens(), (V{5, 7, 11, 13}));
  EXPECT_EQ(family(FamilySpec::type3_2_1(1)).pseudo_frobenius(), (V{6, 8, 9}));
  EXPECT_TRUE(is_far_flung(family(FamilySpec::type3_2_2(2))));
  EXPECT_EQ(family(FamilySpec::type3_2_2(2)).min_gens(), (V{5, 13, 24, 27}));
}

TEST(Families, BadParameters) {
  for (const auto& spec :
       {FamilySpec::type2(0), FamilySpec::type3_1_1(0),
        FamilySpec::arithmetic(2, 1), FamilySpec::arithmetic(6, 3),
        FamilySpec::arithmetic(5, -1), FamilySpec::max_interval(0)}) {
    try {
      family_generators(spec);
      FAIL() << to_string(spec.kind);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::bad_parameters);
    }
  }
}

TEST(Families, ClassifiedShapes) {
  for (Int m = 1; m <= 4; ++m) {
    for (auto kind : kType3Kinds) {
      const auto h = family({kind, m});
      SCOPED_TRACE(h.to_string());
      EXPECT_TRUE(is_far_flung(h));
      EXPECT_EQ(h.type(), 3);
      EXPECT_EQ(h.multiplicity(), 5);
      EXPECT_FALSE(h.is_minimal_multiplicity());
    }
    const auto t2 = family(FamilySpec::type2(m));
    EXPECT_TRUE(is_far_flung(t2));
    EXPECT_EQ(t2.type(), 2);
  }
}

TEST(Families, ArithmeticFfgIffUnitStep) {
  for (Int a = 3; a <= 12; ++a) {
    for (Int d = 1; d <= 5; ++d) {
      if (std::gcd(a, d) != 1) continue;
      const auto h = family(FamilySpec::arithmetic(a, d));
      EXPECT_EQ(is_far_flung(h, FfgRoute::definition), d == 1) << h.to_string();
    }
  }
}

TEST(MinimalMultiplicityCriterion, Examples) {
  EXPECT_TRUE(is_ffg_minimal_mult(sg({3, 4, 5})));
  EXPECT_TRUE(is_ffg_minimal_mult(sg({4, 5, 6, 7})));
  EXPECT_FALSE(is_ffg_minimal_mult(sg({5, 7, 9, 11, 13})));
  EXPECT_TRUE(is_ffg_minimal_mult(NumericalSemigroup()));
  try {
    is_ffg_minimal_mult(sg({5, 6, 13, 14}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_minimal_multiplicity);
  }
}

TEST(ReflexiveTail, Examples) {
  const auto h = sg({3, 4, 5});
  EXPECT_TRUE(theorem41_check(h, unit_ideal(h)));
  for (auto gens : {V{3, 4, 5}, V{7, 8, 11, 17, 20}, V{5, 6, 13, 14}}) {
    const auto g = NumericalSemigroup::from_generators(gens);
    EXPECT_TRUE(theorem41_check(g, conductor_ideal(g)));
  }
  const auto r1 = sg({5, 6, 13, 14});
  oracle::Semigroup o({5, 6, 13, 14});
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const auto e = random_reflexive_ideal(r1, rng);
    ASSERT_TRUE(is_reflexive(e));
    EXPECT_TRUE(theorem41_check(r1, e)) << e.to_string();
    // Brute force: E - C is upward closed from its least element.
    const auto canon = canonical_ideal(r1).gens();
    Int first = -1000;
    for (Int z = -60; z < 60; ++z) {
      if (oracle::colon_contains(o, e.gens(), canon, z)) {
        first = z;
        break;
      }
    }
    ASSERT_GT(first, -1000);
    for (Int z = first; z < first + 20; ++z) {
      EXPECT_TRUE(oracle::colon_contains(o, e.gens(), canon, z));
    }
  }
}

TEST(ReflexiveTail, Errors) {
  const auto h = sg({4, 5, 6});
  const auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::parse_error;
  };
  EXPECT_EQ(code([&] { theorem41_check(h, unit_ideal(h)); }), ErrorCode::not_ffg);
  const auto r1 = sg({5, 6, 13, 14});
  EXPECT_EQ(code([&] { theorem41_check(r1, canonical_ideal(r1)); }),
            ErrorCode::not_reflexive);
  EXPECT_EQ(code([&] { theorem41_check(r1, unit_ideal(h)); }),
            ErrorCode::owner_mismatch);
}

TEST(Classify, ExampleReport) {
  const auto r = classify(sg({7, 8, 11, 17, 20}));
  EXPECT_TRUE(r.flags.ffg);
  EXPECT_FALSE(r.flags.nearly_gorenstein);
  EXPECT_FALSE(r.flags.gorenstein);
  EXPECT_FALSE(r.flags.minimal_multiplicity);
  EXPECT_TRUE(is_tail_from(r.trace, 14));
  EXPECT_EQ(r.semigroup.multiplicity(), 7);
  EXPECT_EQ(r.semigroup.embdim(), 5);

  const auto interval = classify(sg({4, 5, 6, 7}));
  EXPECT_TRUE(interval.flags.ffg);
  EXPECT_TRUE(interval.flags.nearly_gorenstein);
  EXPECT_EQ(valuations(sg({5, 6, 13, 14})), (V{0, 1, 2}));
}

// Every semigroup of genus <= 7 against a brute-force trace: flags, routes and
// the derived invariants all follow from the oracle membership alone.
TEST(ClassifyProperties, AgainstBruteForceTrace) {
  for (const auto& h : enumerate_by_genus(7)) {
    SCOPED_TRACE(h.to_string());
    oracle::Semigroup o(h.min_gens());
    const auto report = classify(h);
    V canon;
    for (Int a : o.pseudo_frobenius()) canon.push_back(o.frobenius() - a);
    const Int f = o.frobenius();
    const Int e = o.multiplicity();
    bool ffg = true, gor = true, ng = true;
    for (Int z = -2; z <= f + e + 2; ++z) {
      const bool in = oracle_trace_contains(o, canon, z);
      ASSERT_EQ(report.trace.contains(z), in) << "z=" << z;
      if (in != (z > f)) ffg = false;
      if (in != o.contains(z)) gor = false;
      if (z > 0 && o.contains(z) && !in) ng = false;
    }
    EXPECT_EQ(report.flags.ffg, ffg);
    EXPECT_EQ(report.flags.gorenstein, gor);
    EXPECT_EQ(report.flags.nearly_gorenstein, ng);
    EXPECT_EQ(report.flags.gorenstein, h.is_symmetric());
    for (auto route : {FfgRoute::definition, FfgRoute::square, FfgRoute::sumset}) {
      EXPECT_EQ(is_far_flung(h, route), ffg) << to_string(route);
    }
    if (h.is_minimal_multiplicity()) {
      EXPECT_EQ(is_ffg_minimal_mult(h), ffg);
    }
    // conductor ⊆ trace ⊆ H
    EXPECT_TRUE(ideal_subset(conductor_ideal(h), report.trace));
    EXPECT_TRUE(ideal_subset(report.trace, unit_ideal(h)));
    EXPECT_EQ(report.flags.gorenstein, h.type() == 1);
    if (ffg && h.type() == 2) {
      EXPECT_TRUE(h.is_minimal_multiplicity());
      EXPECT_EQ(h.multiplicity(), 3);
    }
    if (ffg && h.type() >= 2) {
      ASSERT_GE(report.valuations.size(), 2U);
      EXPECT_EQ(report.valuations[0], 0);
      EXPECT_EQ(report.valuations[1], 1);
    }
  }
}

}  // namespace
}  // namespace nsgff
