#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "nsgff/enumerate.hpp"
#include "oracles.hpp"

namespace nsgff {
namespace {

using V = std::vector<Int>;

TEST(Enumerate, GenusZero) {
  const auto all = enumerate_by_genus(0);
  ASSERT_EQ(all.size(), 1U);
  EXPECT_TRUE(all.front().is_natural_numbers());
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(genus_counts(3), (std::vector<std::size_t>{1, 1, 2, 4}));
}

TEST(Enumerate, CountsMatchGapSetOracle) {
  EXPECT_EQ(genus_counts(8), oracle::genus_counts_by_gap_sets(8));
}

TEST(Enumerate, KnownSequence) {
  const std::vector<std::size_t> expected{1,  1,   2,   4,   7,   12,  23,
                                          39, 67,  118, 204, 343, 592};
  EXPECT_EQ(genus_counts(12), expected);
}

TEST(Enumerate, EachSemigroupOnceAndWithinBound) {
  std::set<V> seen;
  for (const auto& h : enumerate_by_genus(9)) {
    EXPECT_LE(h.genus(), 9);
    EXPECT_TRUE(seen.insert(h.gaps()).second) << h.to_string();
  }
}

TEST(Enumerate, FrobeniusAndMultiplicityCaps) {
  EnumerationQuery q;
  q.max_frobenius = 11;
  q.max_multiplicity = 5;
  const auto capped = enumerate(q);
  std::size_t expected = 0;
  // Any semigroup with F <= 11 has genus <= 11.
  for (const auto& h : enumerate_by_genus(11)) {
    if (h.frobenius() <= 11 && h.multiplicity() <= 5) ++expected;
  }
  EXPECT_EQ(capped.size(), expected);
  for (const auto& h : capped) {
    EXPECT_LE(h.frobenius(), 11);
    EXPECT_LE(h.multiplicity(), 5);
  }
}

TEST(Enumerate, QueryValidation) {
  const auto code = [](const EnumerationQuery& q) {
    try {
      q.validate();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::parse_error;
  };
  EXPECT_EQ(code(EnumerationQuery::genus(41)), ErrorCode::ceiling_exceeded);
  EXPECT_EQ(code(EnumerationQuery::genus(-1)), ErrorCode::invalid_input);
  EXPECT_EQ(code(EnumerationQuery{}), ErrorCode::invalid_input);
  auto raised = EnumerationQuery::genus(41);
  raised.ceiling = 50;
  EXPECT_EQ(code(raised), ErrorCode::parse_error);
}

TEST(ParallelCollect, MatchesSerialOrderForAnyThreadCount) {
  const auto q = EnumerationQuery::genus(13);
  std::vector<V> serial;
  for_each_semigroup(q, [&](const NumericalSemigroup& h) {
    if (h.type() == 2) serial.push_back(h.min_gens());
  });
  for (unsigned threads : {1U, 2U, 4U}) {
    const auto got = parallel_collect<V>(
        q,
        [](const NumericalSemigroup& h) -> std::optional<V> {
          if (h.type() != 2) return std::nullopt;
          return h.min_gens();
        },
        threads);
    EXPECT_EQ(got, serial) << threads;
  }
}

TEST(ThreadCount, ReadsEnvironment) {
  setenv("NSGFF_THREADS", "3", 1);
  EXPECT_EQ(thread_count(), 3U);
  setenv("NSGFF_THREADS", "zero", 1);
  EXPECT_GE(thread_count(), 1U);
  unsetenv("NSGFF_THREADS");
  EXPECT_GE(thread_count(), 1U);
}

TEST(Verifiers, Type2) {
  const auto vacuous = verify_type2_classification(0);
  EXPECT_TRUE(vacuous.pass);
  EXPECT_EQ(vacuous.corpus_size, 1U);
  const auto res = verify_type2_classification(16);
  EXPECT_TRUE(res.pass);
  EXPECT_GT(res.checked, 0U);
  EXPECT_TRUE(res.counterexamples.empty());
  const auto r = classify(family(FamilySpec::type2(4)));
  EXPECT_TRUE(r.flags.ffg);
  EXPECT_EQ(r.semigroup.type(), 2);
}

TEST(Verifiers, Type3) {
  const auto res = verify_type3_classification(3);
  EXPECT_TRUE(res.pass);
  EXPECT_EQ(res.checked, 12U);
}

TEST(Verifiers, Interval) {
  const auto res = verify_interval_characterization(12);
  EXPECT_TRUE(res.pass);
  ASSERT_EQ(res.exceptions.size(), 1U);
  EXPECT_EQ(res.exceptions.front().report.semigroup.min_gens(), (V{2, 3}));
  const auto interval = classify(family(FamilySpec::max_interval(4)));
  EXPECT_TRUE(interval.flags.ffg);
  EXPECT_TRUE(interval.flags.nearly_gorenstein);
}

TEST(Verifiers, BoundsRoutesEndoValuations) {
  EXPECT_TRUE(verify_bounds(12).pass);
  EXPECT_TRUE(verify_routes(12).pass);
  EXPECT_TRUE(verify_endomorphism(11).pass);
  EXPECT_TRUE(verify_valuations(12).pass);
}

TEST(Verifiers, ReflexiveTailAndBidual) {
  const auto t = verify_theorem41(10, 20, 5, 3);
  EXPECT_TRUE(t.pass);
  EXPECT_EQ(t.checked, 100U);
  const auto b = verify_bidual(10, 100, 5);
  EXPECT_TRUE(b.pass);
  EXPECT_EQ(b.checked, 100U);
}

TEST(Verifiers, DeterministicForSeed) {
  const auto a = verify_bidual(5, 20, 11);
  const auto b = verify_bidual(5, 20, 11);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.notes, b.notes);
}

TEST(MultiplicityRange, Examples) {
  const auto two = multiplicity_range(2, 18);
  ASSERT_EQ(two.size(), 1U);
  EXPECT_EQ(two.front().multiplicity, 3);
  EXPECT_EQ(two.front().witness.min_gens(), (V{3, 4, 5}));

  const auto three = multiplicity_range(3, 12);
  EXPECT_TRUE(std::any_of(three.begin(), three.end(),
                          [](const auto& w) { return w.multiplicity == 5; }));
  for (const auto& w : three) {
    EXPECT_EQ(w.witness.type(), 3);
    EXPECT_TRUE(is_far_flung(w.witness));
    EXPECT_EQ(w.witness.multiplicity(), w.multiplicity);
  }
}

TEST(Rng, Reproducible) {
  Rng a(99), b(99);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(a.uniform(-5, 17), b.uniform(-5, 17));
  Rng c(5);
  for (int i = 0; i < 200; ++i) {
    const Int v = c.uniform(3, 4);
    EXPECT_TRUE(v == 3 || v == 4);
  }
}

}  // namespace
}  // namespace nsgff
