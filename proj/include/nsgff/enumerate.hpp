#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "nsgff/classify.hpp"
#include "nsgff/error.hpp"
#include "nsgff/relative_ideal.hpp"
#include "nsgff/semigroup.hpp"

namespace nsgff {

inline constexpr Int kDefaultGenusCeiling = 40;

/// Which part of the genus tree to walk. Descendants only ever have a larger
/// Frobenius number and a multiplicity at least as large, so both caps prune
/// whole subtrees.
struct EnumerationQuery {
  std::optional<Int> max_genus;
  std::optional<Int> max_frobenius;
  std::optional<Int> max_multiplicity;
  Int ceiling = kDefaultGenusCeiling;

  static EnumerationQuery genus(Int g) {
    EnumerationQuery q;
    q.max_genus = g;
    return q;
  }

  void validate() const {
    if (max_genus && *max_genus < 0) {
      throw Error(ErrorCode::invalid_input, "max_genus must be >= 0");
    }
    if (max_genus && *max_genus > ceiling) {
      throw Error(ErrorCode::ceiling_exceeded,
                  "max_genus " + std::to_string(*max_genus) +
                      " exceeds the ceiling " + std::to_string(ceiling));
    }
    if (!max_genus && !max_frobenius) {
      throw Error(ErrorCode::invalid_input,
                  "enumeration needs a genus or Frobenius bound");
    }
  }

  bool admits(const NumericalSemigroup& h) const {
    if (max_genus && h.genus() > *max_genus) return false;
    if (max_frobenius && h.frobenius() > *max_frobenius) return false;
    if (max_multiplicity && h.multiplicity() > *max_multiplicity) return false;
    return true;
  }
};

/// Conjunction of predicates over a semigroup's classification.
struct ReportFilter {
  std::optional<Int> type;
  std::optional<Int> multiplicity;
  std::optional<Int> max_frobenius;
  std::optional<bool> ffg;
  std::optional<bool> nearly_gorenstein;
  std::optional<bool> minimal_multiplicity;

  bool matches(const NumericalSemigroup& h) const {
    if (type && h.type() != *type) return false;
    if (multiplicity && h.multiplicity() != *multiplicity) return false;
    if (max_frobenius && h.frobenius() > *max_frobenius) return false;
    if (minimal_multiplicity &&
        h.is_minimal_multiplicity() != *minimal_multiplicity) {
      return false;
    }
    if (ffg && is_far_flung(h) != *ffg) return false;
    if (nearly_gorenstein && is_nearly_gorenstein(h) != *nearly_gorenstein) {
      return false;
    }
    return true;
  }
};

/// Worker count: NSGFF_THREADS when set to a positive integer, otherwise
/// the hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("NSGFF_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace detail {

template <class Visit>
void walk_tree(const NumericalSemigroup& node, const EnumerationQuery& q,
               Visit& visit) {
  visit(node);
  for (Int g : node.min_gens()) {
    if (g <= node.frobenius()) continue;
    auto child = node.without_generator(g);
    if (q.admits(child)) walk_tree(child, q, visit);
  }
}

}  // namespace detail

/// Depth-first walk of the genus tree rooted at N0; children are produced by
/// removing minimal generators above the Frobenius number, in increasing
/// order. Every semigroup admitted by the query is visited exactly once.
template <class Visit>
void for_each_semigroup(const EnumerationQuery& q, Visit&& visit) {
  q.validate();
  const auto root = NumericalSemigroup::natural_numbers();
  if (q.admits(root)) detail::walk_tree(root, q, visit);
}

inline std::vector<NumericalSemigroup> enumerate(const EnumerationQuery& q) {
  std::vector<NumericalSemigroup> out;
  for_each_semigroup(q, [&](const NumericalSemigroup& h) { out.push_back(h); });
  return out;
}

inline std::vector<NumericalSemigroup> enumerate_by_genus(Int max_genus) {
  return enumerate(EnumerationQuery::genus(max_genus));
}

/// Number of semigroups of each genus 0..max_genus.
inline std::vector<std::size_t> genus_counts(Int max_genus) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_genus + 1), 0);
  for_each_semigroup(EnumerationQuery::genus(max_genus),
                     [&](const NumericalSemigroup& h) {
                       ++counts[static_cast<std::size_t>(h.genus())];
                     });
  return counts;
}

/// Applies `fn` to every admitted semigroup and collects the engaged
/// results in depth-first order. Subtrees below a split genus are processed
/// in parallel; the output does not depend on the schedule.
template <class T, class Fn>
std::vector<T> parallel_collect(const EnumerationQuery& q, Fn fn,
                                unsigned threads = thread_count()) {
  q.validate();
  constexpr Int kSplitGenus = 10;
  // Slots alternate between results gathered on the way down and deferred
  // subtrees, so concatenating them restores depth-first order.
  std::vector<std::vector<T>> slots(1);
  std::vector<std::pair<std::size_t, NumericalSemigroup>> tasks;
  std::function<void(const NumericalSemigroup&)> descend =
      [&](const NumericalSemigroup& node) {
        if (node.genus() == kSplitGenus) {
          tasks.emplace_back(slots.size(), node);
          slots.emplace_back();
          slots.emplace_back();
          return;
        }
        if (auto r = fn(node)) slots.back().push_back(std::move(*r));
        for (Int g : node.min_gens()) {
          if (g <= node.frobenius()) continue;
          auto child = node.without_generator(g);
          if (q.admits(child)) descend(child);
        }
      };
  const auto root = NumericalSemigroup::natural_numbers();
  if (q.admits(root)) descend(root);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      auto& [slot, node] = tasks[i];
      auto& out = slots[slot];
      auto visit = [&](const NumericalSemigroup& h) {
        if (auto r = fn(h)) out.push_back(std::move(*r));
      };
      detail::walk_tree(node, q, visit);
    }
  };
  const unsigned n = std::max(
      1U, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<T> out;
  for (auto& s : slots) {
    std::move(s.begin(), s.end(), std::back_inserter(out));
  }
  return out;
}

/// Canonical order for reporting: genus, then minimal generators.
inline bool canonical_less(const NumericalSemigroup& a,
                           const NumericalSemigroup& b) {
  if (a.genus() != b.genus()) return a.genus() < b.genus();
  return a.min_gens() < b.min_gens();
}

struct Counterexample {
  SemigroupReport report;
  std::string reason;
};

inline constexpr std::size_t kMaxReportedCounterexamples = 10;

struct VerificationResult {
  std::string campaign;
  bool pass = true;
  std::size_t corpus_size = 0;
  /// Corpus members the checked property actually constrains.
  std::size_t checked = 0;
  std::size_t counterexample_total = 0;
  bool truncated = false;
  std::vector<Counterexample> counterexamples;
  /// Known exceptions to the literal statement; reported, not failures.
  std::vector<Counterexample> exceptions;
  std::vector<std::pair<std::string, std::string>> notes;
};

namespace detail {

struct Finding {
  NumericalSemigroup h;
  std::string reason;
  bool exception = false;
};

/// Outcome of checking one corpus member.
struct MemberOutcome {
  bool constrained = false;
  std::vector<Finding> findings;
};

inline std::vector<Counterexample> to_counterexamples(
    std::vector<Finding> findings) {
  std::stable_sort(findings.begin(), findings.end(),
                   [](const Finding& a, const Finding& b) {
                     return canonical_less(a.h, b.h);
                   });
  std::vector<Counterexample> out;
  for (auto& f : findings) out.push_back({classify(f.h), std::move(f.reason)});
  return out;
}

/// Runs `check` over the query's corpus and folds the outcomes.
template <class Check>
VerificationResult run_campaign(std::string name, const EnumerationQuery& q,
                                Check check) {
  auto outcomes = parallel_collect<MemberOutcome>(
      q, [&](const NumericalSemigroup& h) -> std::optional<MemberOutcome> {
        return check(h);
      });
  VerificationResult res;
  res.campaign = std::move(name);
  res.corpus_size = outcomes.size();
  std::vector<Finding> failures;
  std::vector<Finding> exceptions;
  for (auto& o : outcomes) {
    if (o.constrained) ++res.checked;
    for (auto& f : o.findings) {
      (f.exception ? exceptions : failures).push_back(std::move(f));
    }
  }
  res.counterexample_total = failures.size();
  res.pass = failures.empty();
  std::stable_sort(failures.begin(), failures.end(),
                   [](const Finding& a, const Finding& b) {
                     return canonical_less(a.h, b.h);
                   });
  if (failures.size() > kMaxReportedCounterexamples) {
    failures.resize(kMaxReportedCounterexamples);
    res.truncated = true;
  }
  res.counterexamples = to_counterexamples(std::move(failures));
  res.exceptions = to_counterexamples(std::move(exceptions));
  return res;
}

inline bool is_type2_family_member(const NumericalSemigroup& h) {
  const auto& g = h.min_gens();
  return g.size() == 3 && g[0] == 3 && g[1] % 3 == 1 && g[1] >= 4 &&
         g[2] == g[1] + 1;
}

inline bool is_max_interval(const NumericalSemigroup& h) {
  const auto& g = h.min_gens();
  const Int n = h.multiplicity();
  if (static_cast<Int>(g.size()) != std::max<Int>(1, n)) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != n + static_cast<Int>(i)) return false;
  }
  return true;
}

}  // namespace detail

/// Over genus <= max_genus, H != N0: (type 2 and far-flung) exactly when
/// H = <3, 3n+1, 3n+2>.
inline VerificationResult verify_type2_classification(Int max_genus) {
  return detail::run_campaign(
      "type2", EnumerationQuery::genus(max_genus),
      [](const NumericalSemigroup& h) {
        detail::MemberOutcome o;
        if (h.is_natural_numbers()) return o;
        const bool family = detail::is_type2_family_member(h);
        const bool prop = h.type() == 2 && is_far_flung(h);
        o.constrained = family || prop;
        if (prop && !family) {
          o.findings.push_back({h, "far-flung of type 2 outside <3,3n+1,3n+2>"});
        } else if (family && !prop) {
          o.findings.push_back({h, "family member is not far-flung of type 2"});
        }
        return o;
      });
}

/// Largest Frobenius number among the four type-3 families at parameter m.
inline Int type3_frobenius_cap(Int max_m) {
  Int cap = -1;
  for (auto kind : kType3Kinds) {
    cap = std::max(cap, family({kind, max_m}).frobenius());
  }
  return cap;
}

/// Among semigroups with multiplicity <= 7 and Frobenius number at most the
/// families' cap: (type 3, not minimal multiplicity, far-flung) exactly at
/// the four families with m <= max_m, all of multiplicity 5.
inline VerificationResult verify_type3_classification(Int max_m) {
  if (max_m < 1) throw Error(ErrorCode::invalid_input, "max_m must be >= 1");
  std::set<std::vector<Int>> members;
  for (Int m = 1; m <= max_m; ++m) {
    for (auto kind : kType3Kinds) members.insert(family({kind, m}).min_gens());
  }
  EnumerationQuery q;
  q.max_frobenius = type3_frobenius_cap(max_m);
  q.max_multiplicity = 7;
  std::atomic<std::size_t> seen{0};
  auto res = detail::run_campaign(
      "type3", q, [&](const NumericalSemigroup& h) {
        detail::MemberOutcome o;
        const bool family = members.contains(h.min_gens());
        if (family) ++seen;
        const bool prop = h.type() == 3 && !h.is_minimal_multiplicity() &&
                          is_far_flung(h);
        o.constrained = family || prop;
        if (prop && !family) {
          o.findings.push_back({h, "far-flung type 3 outside the families"});
        } else if (family && !prop) {
          o.findings.push_back({h, "family member fails the property"});
        }
        if ((prop || family) && h.multiplicity() != 5) {
          o.findings.push_back({h, "multiplicity is not 5"});
        }
        return o;
      });
  if (seen != members.size()) {
    res.pass = false;
    res.notes.emplace_back("missing_family_members",
                           std::to_string(members.size() - seen));
  }
  res.notes.emplace_back("frobenius_cap", std::to_string(*q.max_frobenius));
  res.notes.emplace_back("max_multiplicity", "7");
  res.notes.emplace_back("family_members", std::to_string(members.size()));
  return res;
}

/// (far-flung and nearly Gorenstein) exactly at <n, n+1, ..., 2n-1>, and
/// separately: conductor ⊇ H \ {0} exactly at those semigroups. A Gorenstein
/// interval semigroup has conductor ⊇ H \ {0} but trace H, so it satisfies
/// the right-hand side without being far-flung; such members are reported as
/// exceptions instead of failures.
inline VerificationResult verify_interval_characterization(Int max_genus) {
  return detail::run_campaign(
      "interval", EnumerationQuery::genus(max_genus),
      [](const NumericalSemigroup& h) {
        detail::MemberOutcome o;
        const bool interval = detail::is_max_interval(h);
        const auto rep = classify(h);
        const bool prop = rep.flags.ffg && rep.flags.nearly_gorenstein;
        // conductor contains every nonzero member <=> F(H) < e(H)
        const bool conductor_contains_max =
            h.is_natural_numbers() || h.frobenius() < h.multiplicity();
        o.constrained = interval || prop;
        if (conductor_contains_max != interval) {
          o.findings.push_back(
              {h, "conductor ⊇ maximal ideal disagrees with interval shape"});
        }
        if (prop != interval) {
          const bool gorenstein_interval =
              interval && !prop && rep.flags.gorenstein;
          o.findings.push_back(
              {h,
               gorenstein_interval
                   ? "Gorenstein interval semigroup: conductor ⊇ m but "
                     "trace = H, so not far-flung"
                   : "ffg ∧ nearly Gorenstein disagrees with interval shape",
               gorenstein_interval});
        }
        return o;
      });
}

/// r + 1 <= e with equality exactly at minimal multiplicity (H != N0), and
/// e <= C(r+1, 2), e <= n̄(r) for every far-flung member.
inline VerificationResult verify_bounds(Int max_genus) {
  std::atomic<std::size_t> unknown{0};
  auto res = detail::run_campaign(
      "bounds", EnumerationQuery::genus(max_genus),
      [&](const NumericalSemigroup& h) {
        detail::MemberOutcome o;
        o.constrained = true;
        const bool ffg = is_far_flung(h);
        const auto b = bounds_report(h, ffg);
        if (b.type_plus_one_le_e == BoundStatus::violated) {
          o.findings.push_back({h, "r + 1 > e"});
        }
        if (!h.is_natural_numbers() &&
            b.type_plus_one_eq_e != h.is_minimal_multiplicity()) {
          o.findings.push_back({h, "r + 1 = e disagrees with minimal multiplicity"});
        }
        if (b.e_le_binom == BoundStatus::violated) {
          o.findings.push_back({h, "e > C(r+1, 2)"});
        }
        if (b.e_le_rohrbach == BoundStatus::violated) {
          o.findings.push_back({h, "e > n̄(r)"});
        }
        if (b.e_le_rohrbach == BoundStatus::unknown) ++unknown;
        return o;
      });
  res.notes.emplace_back("rohrbach_unknown", std::to_string(unknown.load()));
  return res;
}

/// The three far-flung routes agree, and the minimal-multiplicity criterion
/// agrees with them wherever it applies.
inline VerificationResult verify_routes(Int max_genus) {
  return detail::run_campaign(
      "routes", EnumerationQuery::genus(max_genus),
      [](const NumericalSemigroup& h) {
        detail::MemberOutcome o;
        o.constrained = true;
        const bool def = is_far_flung(h, FfgRoute::definition);
        const bool sq = is_far_flung(h, FfgRoute::square);
        const bool sum = is_far_flung(h, FfgRoute::sumset);
        if (def != sq || def != sum) {
          o.findings.push_back(
              {h, "routes disagree: definition=" + std::to_string(def) +
                      " square=" + std::to_string(sq) +
                      " sumset=" + std::to_string(sum)});
        }
        if (h.is_minimal_multiplicity() && is_ffg_minimal_mult(h) != def) {
          o.findings.push_back({h, "minimal-multiplicity criterion disagrees"});
        }
        return o;
      });
}

/// Every far-flung H != N0 passes verify_endomorphism_inheritance.
inline VerificationResult verify_endomorphism(Int max_genus) {
  return detail::run_campaign(
      "endo", EnumerationQuery::genus(max_genus),
      [](const NumericalSemigroup& h) {
        detail::MemberOutcome o;
        if (h.is_natural_numbers() || !is_far_flung(h)) return o;
        o.constrained = true;
        const auto c = verify_endomorphism_inheritance(h);
        if (!c.b_is_ffg) o.findings.push_back({h, "B is not far-flung"});
        if (!c.trace_shift_ok) {
          o.findings.push_back({h, "tr(B) != tr(H) - e(H)"});
        }
        return o;
      });
}

/// Far-flung members of type >= 2 have 0 and 1 among F - PF.
inline VerificationResult verify_valuations(Int max_genus) {
  return detail::run_campaign(
      "valuations", EnumerationQuery::genus(max_genus),
      [](const NumericalSemigroup& h) {
        detail::MemberOutcome o;
        if (h.type() < 2 || !is_far_flung(h)) return o;
        o.constrained = true;
        const auto v = valuations(h);
        if (v.size() < 2 || v[0] != 0 || v[1] != 1) {
          o.findings.push_back({h, "valuations do not start 0, 1"});
        }
        return o;
      });
}

/// Deterministic generator for randomized campaigns; values depend only on
/// the seed, not on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-enough integer in [lo, hi].
  Int uniform(Int lo, Int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// A relative ideal with one to four generators spread around [-F-e, F+2e].
inline RelativeIdeal random_ideal(const NumericalSemigroup& h, Rng& rng) {
  const Int f = std::max<Int>(h.frobenius(), 0);
  const Int e = h.multiplicity();
  std::vector<Int> gens;
  const Int k = rng.uniform(1, 4);
  for (Int i = 0; i < k; ++i) gens.push_back(rng.uniform(-f - e, f + 2 * e));
  return RelativeIdeal(h, gens);
}

/// H - (H - X) for a random X; always reflexive.
inline RelativeIdeal random_reflexive_ideal(const NumericalSemigroup& h,
                                            Rng& rng) {
  const auto unit = unit_ideal(h);
  return ideal_colon(unit, ideal_colon(unit, random_ideal(h, rng)));
}

/// A random numerical semigroup with multiplicity in [2, 12].
inline NumericalSemigroup random_semigroup(Rng& rng) {
  const Int e = rng.uniform(2, 12);
  std::vector<Int> gens{e, e + rng.uniform(1, e - 1)};
  const Int extra = rng.uniform(0, 4);
  for (Int i = 0; i < extra; ++i) gens.push_back(rng.uniform(e + 1, 4 * e));
  // Force gcd 1.
  gens.push_back(e + 1);
  return NumericalSemigroup::from_generators(gens);
}

/// For a sample of far-flung corpus members and random reflexive ideals E,
/// E - C is a tail {z >= c}.
inline VerificationResult verify_theorem41(Int max_genus, std::size_t sample,
                                           std::size_t ideals_per,
                                           std::uint64_t seed) {
  auto ffg = parallel_collect<NumericalSemigroup>(
      EnumerationQuery::genus(max_genus),
      [](const NumericalSemigroup& h) -> std::optional<NumericalSemigroup> {
        if (h.is_natural_numbers() || !is_far_flung(h)) return std::nullopt;
        return h;
      });
  VerificationResult res;
  res.campaign = "thm41";
  res.corpus_size = ffg.size();
  Rng rng(seed);
  // Evenly spaced sample so every genus band is represented.
  std::vector<NumericalSemigroup> picked;
  if (ffg.size() <= sample) {
    picked = ffg;
  } else {
    for (std::size_t i = 0; i < sample; ++i) {
      picked.push_back(ffg[i * ffg.size() / sample]);
    }
  }
  std::vector<detail::Finding> failures;
  for (const auto& h : picked) {
    for (std::size_t i = 0; i < ideals_per; ++i) {
      const auto e = random_reflexive_ideal(h, rng);
      ++res.checked;
      if (!theorem41_check(h, e)) {
        failures.push_back({h, "E - C is not a tail for E = " + e.to_string()});
      }
    }
  }
  res.counterexample_total = failures.size();
  res.pass = failures.empty();
  if (failures.size() > kMaxReportedCounterexamples) {
    failures.resize(kMaxReportedCounterexamples);
    res.truncated = true;
  }
  res.counterexamples = detail::to_counterexamples(std::move(failures));
  res.notes.emplace_back("sampled_semigroups", std::to_string(picked.size()));
  res.notes.emplace_back("seed", std::to_string(seed));
  return res;
}

/// C - (C - E) = E for random ideals over random semigroups.
inline VerificationResult verify_bidual(std::size_t semigroups,
                                        std::size_t ideals_total,
                                        std::uint64_t seed) {
  VerificationResult res;
  res.campaign = "bidual";
  Rng rng(seed);
  std::vector<detail::Finding> failures;
  for (std::size_t s = 0; s < semigroups; ++s) {
    const auto h = random_semigroup(rng);
    ++res.corpus_size;
    const std::size_t count = ideals_total / semigroups +
                              (s < ideals_total % semigroups ? 1 : 0);
    for (std::size_t i = 0; i < count; ++i) {
      const auto e = random_ideal(h, rng);
      ++res.checked;
      if (!canonical_bidual_check(e)) {
        failures.push_back({h, "C - (C - E) != E for E = " + e.to_string()});
      }
    }
  }
  res.counterexample_total = failures.size();
  res.pass = failures.empty();
  if (failures.size() > kMaxReportedCounterexamples) {
    failures.resize(kMaxReportedCounterexamples);
    res.truncated = true;
  }
  res.counterexamples = detail::to_counterexamples(std::move(failures));
  res.notes.emplace_back("seed", std::to_string(seed));
  return res;
}

struct MultiplicityWitness {
  Int multiplicity;
  NumericalSemigroup witness;
};

/// Multiplicities of far-flung semigroups of type `type_r` found with genus
/// <= max_genus, each with its first witness in enumeration order. This is
/// empirical lower data only.
inline std::vector<MultiplicityWitness> multiplicity_range(Int type_r,
                                                           Int max_genus) {
  auto hits = parallel_collect<NumericalSemigroup>(
      EnumerationQuery::genus(max_genus),
      [&](const NumericalSemigroup& h) -> std::optional<NumericalSemigroup> {
        if (h.type() != type_r || !is_far_flung(h)) return std::nullopt;
        return h;
      });
  std::map<Int, NumericalSemigroup> first;
  for (const auto& h : hits) {
    auto it = first.find(h.multiplicity());
    if (it == first.end()) {
      first.emplace(h.multiplicity(), h);
    } else if (canonical_less(h, it->second)) {
      it->second = h;
    }
  }
  std::vector<MultiplicityWitness> out;
  for (auto& [e, h] : first) out.push_back({e, h});
  return out;
}

}  // namespace nsgff
