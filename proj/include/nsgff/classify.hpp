#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nsgff/error.hpp"
#include "nsgff/relative_ideal.hpp"
#include "nsgff/rohrbach.hpp"
#include "nsgff/semigroup.hpp"

namespace nsgff {

/// tr(ω) = (H - C) + C in relative-ideal arithmetic.
inline RelativeIdeal trace_ideal(const NumericalSemigroup& h) {
  const auto c = canonical_ideal(h);
  return ideal_product(ideal_colon(unit_ideal(h), c), c);
}

enum class FfgRoute { definition, square, sumset };

inline std::string_view to_string(FfgRoute route) {
  switch (route) {
    case FfgRoute::definition: return "definition";
    case FfgRoute::square: return "square";
    case FfgRoute::sumset: return "sumset";
  }
  return "?";
}

/// Three independent decisions of the far-flung Gorenstein property:
///  - definition: trace ideal equals the conductor;
///  - square: C * C equals the integral closure;
///  - sumset: {0, ..., e-1} ⊆ {2F - a - b : a, b in PF}.
inline bool is_far_flung(const NumericalSemigroup& h,
                         FfgRoute route = FfgRoute::sumset) {
  switch (route) {
    case FfgRoute::definition:
      return ideal_equals(trace_ideal(h), conductor_ideal(h));
    case FfgRoute::square: {
      const auto c = canonical_ideal(h);
      return ideal_equals(ideal_product(c, c), normalization_ideal(h));
    }
    case FfgRoute::sumset: {
      const auto& pf = h.pseudo_frobenius();
      const Int f = h.frobenius();
      const Int e = h.multiplicity();
      std::vector<bool> hit(static_cast<std::size_t>(e), false);
      for (Int a : pf) {
        for (Int b : pf) {
          const Int v = 2 * f - a - b;
          if (v >= 0 && v < e) hit[static_cast<std::size_t>(v)] = true;
        }
      }
      return std::all_of(hit.begin(), hit.end(), [](bool x) { return x; });
    }
  }
  return false;
}

inline bool is_gorenstein(const NumericalSemigroup& h) {
  return ideal_equals(trace_ideal(h), unit_ideal(h));
}

namespace detail {

inline bool nearly_gorenstein_given_trace(const NumericalSemigroup& h,
                                          const RelativeIdeal& trace) {
  const Int e = h.multiplicity();
  for (Int z = e; z <= h.frobenius() + e; ++z) {
    if (h.contains(z) && !trace.contains(z)) return false;
  }
  return true;
}

}  // namespace detail

/// The trace ideal contains the maximal ideal H \ {0}.
inline bool is_nearly_gorenstein(const NumericalSemigroup& h) {
  return detail::nearly_gorenstein_given_trace(h, trace_ideal(h));
}

/// H ∪ PF(H), the monomial model of m : m.
inline NumericalSemigroup endomorphism_semigroup(const NumericalSemigroup& h) {
  if (h.is_natural_numbers()) return h;
  std::vector<Int> gens = h.min_gens();
  gens.insert(gens.end(), h.pseudo_frobenius().begin(),
              h.pseudo_frobenius().end());
  return NumericalSemigroup::from_generators(gens);
}

/// True when z in a <=> z + shift in b for every integer z.
inline bool same_members_shifted(const RelativeIdeal& a, const RelativeIdeal& b,
                                 Int shift) {
  const Int lo = std::min(a.min(), b.min() - shift);
  const Int hi = std::max(a.stability_bound(), b.stability_bound() - shift);
  for (Int z = lo; z <= hi; ++z) {
    if (a.contains(z) != b.contains(z + shift)) return false;
  }
  return true;
}

struct EndomorphismCheck {
  bool b_is_ffg = false;
  bool trace_shift_ok = false;
};

/// For far-flung Gorenstein H: B = H ∪ PF(H) is far-flung Gorenstein and
/// tr(B) = tr(H) - e(H).
inline EndomorphismCheck verify_endomorphism_inheritance(
    const NumericalSemigroup& h) {
  if (h.is_natural_numbers()) {
    throw Error(ErrorCode::invalid_input,
                "endomorphism inheritance needs H != N0");
  }
  if (!is_far_flung(h)) {
    throw Error(ErrorCode::not_ffg, h.to_string() + " is not far-flung");
  }
  const auto b = endomorphism_semigroup(h);
  EndomorphismCheck out;
  out.b_is_ffg = is_far_flung(b, FfgRoute::definition);
  out.trace_shift_ok =
      same_members_shifted(trace_ideal(b), trace_ideal(h), h.multiplicity());
  return out;
}

enum class BoundStatus { holds, violated, not_applicable, unknown };

inline std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::holds: return "holds";
    case BoundStatus::violated: return "violated";
    case BoundStatus::not_applicable: return "not_applicable";
    case BoundStatus::unknown: return "unknown";
  }
  return "?";
}

struct BoundsReport {
  BoundStatus type_plus_one_le_e = BoundStatus::not_applicable;
  BoundStatus e_le_binom = BoundStatus::not_applicable;
  BoundStatus e_le_rohrbach = BoundStatus::not_applicable;
  /// Extremal Rohrbach value used for the comparison, when known.
  std::optional<Int> rohrbach_value;
  bool type_plus_one_eq_e = false;
};

inline BoundStatus status_of(bool holds) {
  return holds ? BoundStatus::holds : BoundStatus::violated;
}

/// r + 1 <= e (for H != N0); for far-flung H also e <= C(r+1, 2) and
/// e <= n̄(r), the latter from the published table for r <= 25.
inline BoundsReport bounds_report(const NumericalSemigroup& h, bool ffg) {
  BoundsReport out;
  const Int r = h.type();
  const Int e = h.multiplicity();
  if (!h.is_natural_numbers()) {
    out.type_plus_one_le_e = status_of(r + 1 <= e);
    out.type_plus_one_eq_e = r + 1 == e;
  }
  if (ffg) {
    out.e_le_binom = status_of(e <= r * (r + 1) / 2);
    if (r <= static_cast<Int>(kRohrbachTable.size())) {
      out.rohrbach_value = known_table(r);
      out.e_le_rohrbach = status_of(e <= *out.rohrbach_value);
    } else {
      out.e_le_rohrbach = BoundStatus::unknown;
    }
  }
  return out;
}

inline BoundsReport bounds_report(const NumericalSemigroup& h) {
  return bounds_report(h, is_far_flung(h));
}

enum class FamilyKind {
  type2,
  type3_1_1,
  type3_1_2,
  type3_2_1,
  type3_2_2,
  arithmetic,
  max_interval,
};

/// Parametric constructors for the classified families.
struct FamilySpec {
  FamilyKind kind;
  Int first = 0;   // n, m or a
  Int second = 0;  // d for arithmetic sequences

  static FamilySpec type2(Int n) { return {FamilyKind::type2, n}; }
  static FamilySpec type3_1_1(Int m) { return {FamilyKind::type3_1_1, m}; }
  static FamilySpec type3_1_2(Int m) { return {FamilyKind::type3_1_2, m}; }
  static FamilySpec type3_2_1(Int m) { return {FamilyKind::type3_2_1, m}; }
  static FamilySpec type3_2_2(Int m) { return {FamilyKind::type3_2_2, m}; }
  static FamilySpec arithmetic(Int a, Int d) {
    return {FamilyKind::arithmetic, a, d};
  }
  static FamilySpec max_interval(Int n) {
    return {FamilyKind::max_interval, n};
  }
};

inline constexpr std::array<FamilyKind, 4> kType3Kinds = {
    FamilyKind::type3_1_1, FamilyKind::type3_1_2, FamilyKind::type3_2_1,
    FamilyKind::type3_2_2};

inline std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::type2: return "type2";
    case FamilyKind::type3_1_1: return "type3_1_1";
    case FamilyKind::type3_1_2: return "type3_1_2";
    case FamilyKind::type3_2_1: return "type3_2_1";
    case FamilyKind::type3_2_2: return "type3_2_2";
    case FamilyKind::arithmetic: return "arithmetic";
    case FamilyKind::max_interval: return "max_interval";
  }
  return "?";
}

inline std::vector<Int> family_generators(const FamilySpec& spec) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::bad_parameters,
                 std::string(to_string(spec.kind)) + ": " + why);
  };
  const Int p = spec.first;
  switch (spec.kind) {
    case FamilyKind::type2:
      if (p < 1) throw bad("n must be >= 1");
      return {3, 3 * p + 1, 3 * p + 2};
    case FamilyKind::type3_1_1:
    case FamilyKind::type3_1_2:
    case FamilyKind::type3_2_1:
    case FamilyKind::type3_2_2:
      if (p < 1) throw bad("m must be >= 1");
      if (spec.kind == FamilyKind::type3_1_1) {
        return {5, 5 * p + 4, 10 * p + 6, 10 * p + 7};
      }
      if (spec.kind == FamilyKind::type3_1_2) {
        return {5, 5 * p + 1, 10 * p + 3, 10 * p + 4};
      }
      if (spec.kind == FamilyKind::type3_2_1) {
        return {5, 5 * p + 2, 10 * p + 1, 10 * p + 3};
      }
      return {5, 5 * p + 3, 10 * p + 4, 10 * p + 7};
    case FamilyKind::arithmetic: {
      const Int d = spec.second;
      if (p < 3) throw bad("a must be >= 3");
      if (d < 0) throw bad("d must be >= 0");
      if (std::gcd(p, d) != 1) throw bad("gcd(a, d) must be 1");
      std::vector<Int> gens;
      for (Int i = 0; i < p; ++i) gens.push_back(p + i * d);
      return gens;
    }
    case FamilyKind::max_interval: {
      if (p < 1) throw bad("n must be >= 1");
      std::vector<Int> gens;
      for (Int i = p; i <= std::max(p, 2 * p - 1); ++i) gens.push_back(i);
      return gens;
    }
  }
  throw bad("unknown family");
}

inline NumericalSemigroup family(const FamilySpec& spec) {
  return NumericalSemigroup::from_generators(family_generators(spec));
}

/// For minimal multiplicity H = <a_1 < ... < a_v>:
/// {2a_v - a_1 + 1, ..., 2a_v} ⊆ {a_i + a_j : 2 <= i, j <= v}.
/// N0 is reported far-flung by convention.
inline bool is_ffg_minimal_mult(const NumericalSemigroup& h) {
  if (!h.is_minimal_multiplicity()) {
    throw Error(ErrorCode::not_minimal_multiplicity,
                h.to_string() + " does not have minimal multiplicity");
  }
  if (h.is_natural_numbers()) return true;
  const auto& a = h.min_gens();
  std::set<Int> sums;
  for (std::size_t i = 1; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) sums.insert(a[i] + a[j]);
  }
  const Int top = 2 * a.back();
  for (Int z = top - a.front() + 1; z <= top; ++z) {
    if (!sums.contains(z)) return false;
  }
  return true;
}

/// Rank-one specialization of Hom(ω, M) ≅ R̄^r: for far-flung H and
/// reflexive E, E - C is a full tail {z >= c}.
inline bool theorem41_check(const NumericalSemigroup& h,
                            const RelativeIdeal& e) {
  if (!(e.owner() == h)) {
    throw Error(ErrorCode::owner_mismatch, "ideal does not belong to H");
  }
  if (!is_far_flung(h)) {
    throw Error(ErrorCode::not_ffg, h.to_string() + " is not far-flung");
  }
  if (!is_reflexive(e)) {
    throw Error(ErrorCode::not_reflexive, e.to_string() + " is not reflexive");
  }
  const auto colon = ideal_colon(e, canonical_ideal(h));
  return colon.tail_start() == colon.min();
}

struct SemigroupFlags {
  bool ffg = false;
  bool nearly_gorenstein = false;
  bool gorenstein = false;
  bool minimal_multiplicity = false;
};

/// Invariants and classification of one semigroup.
struct SemigroupReport {
  NumericalSemigroup semigroup;
  RelativeIdeal trace;
  SemigroupFlags flags;
  BoundsReport bounds;
  std::vector<Int> valuations;  // {F - a : a in PF}, ascending
};

inline std::vector<Int> valuations(const NumericalSemigroup& h) {
  std::vector<Int> out;
  for (Int a : h.pseudo_frobenius()) out.push_back(h.frobenius() - a);
  std::sort(out.begin(), out.end());
  return out;
}

inline SemigroupReport classify(const NumericalSemigroup& h) {
  auto trace = trace_ideal(h);
  SemigroupFlags flags;
  flags.ffg = ideal_equals(trace, conductor_ideal(h));
  flags.gorenstein = ideal_equals(trace, unit_ideal(h));
  flags.nearly_gorenstein = detail::nearly_gorenstein_given_trace(h, trace);
  flags.minimal_multiplicity = h.is_minimal_multiplicity();
  auto bounds = bounds_report(h, flags.ffg);
  return SemigroupReport{h, std::move(trace), flags, bounds, valuations(h)};
}

}  // namespace nsgff
