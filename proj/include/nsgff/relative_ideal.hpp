#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nsgff/error.hpp"
#include "nsgff/semigroup.hpp"

namespace nsgff {

/// A monomial fractional ideal E = G + H of a numerical semigroup ring,
/// stored through its unique minimal generating set G.
///
/// Exponents may be negative. Every integer at or above stability_bound()
/// is a member; below it membership is read from a cached window.
class RelativeIdeal {
 public:
  RelativeIdeal(NumericalSemigroup owner, std::span<const Int> gens)
      : owner_(std::move(owner)) {
    if (gens.empty()) {
      throw Error(ErrorCode::invalid_input, "ideal generator list is empty");
    }
    std::vector<Int> candidates(gens.begin(), gens.end());
    gens_ = normalize(owner_, std::move(candidates));
    build_window();
  }

  RelativeIdeal(NumericalSemigroup owner, std::initializer_list<Int> gens)
      : RelativeIdeal(std::move(owner),
                      std::span<const Int>(gens.begin(), gens.size())) {}

  const NumericalSemigroup& owner() const noexcept { return owner_; }
  const std::vector<Int>& gens() const noexcept { return gens_; }
  Int min() const noexcept { return gens_.front(); }
  Int stability_bound() const noexcept {
    return gens_.front() + owner_.frobenius() + 1;
  }

  bool contains(Int z) const noexcept {
    if (z < min()) return false;
    if (z >= stability_bound()) return true;
    return window_[static_cast<std::size_t>(z - min())];
  }

  /// Membership through the generator semantics, bypassing the window.
  bool contains_by_generators(Int z) const noexcept {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](Int g) { return owner_.contains(z - g); });
  }

  /// Smallest t such that every integer >= t is a member.
  Int tail_start() const noexcept {
    Int t = stability_bound();
    while (t > min() && contains(t - 1)) --t;
    return t;
  }

  /// Members in [min(), stability_bound()).
  std::vector<Int> members_below_bound() const {
    std::vector<Int> out;
    for (Int z = min(); z < stability_bound(); ++z) {
      if (contains(z)) out.push_back(z);
    }
    return out;
  }

  /// Sorted ascending, keep g iff g - g' is not in H for every kept g'.
  static std::vector<Int> normalize(const NumericalSemigroup& h,
                                    std::vector<Int> candidates) {
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    std::vector<Int> kept;
    for (Int g : candidates) {
      const bool redundant = std::any_of(
          kept.begin(), kept.end(), [&](Int k) { return h.contains(g - k); });
      if (!redundant) kept.push_back(g);
    }
    return kept;
  }

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
    return a.owner_ == b.owner_ && a.gens_ == b.gens_;
  }

  std::string to_string() const { return "{" + format_list(gens_) + "}+H"; }

 private:
  void build_window() {
    const Int lo = min();
    window_.assign(static_cast<std::size_t>(stability_bound() - lo), false);
    for (Int z = lo; z < stability_bound(); ++z) {
      window_[static_cast<std::size_t>(z - lo)] = contains_by_generators(z);
    }
  }

  NumericalSemigroup owner_;
  std::vector<Int> gens_;
  std::vector<bool> window_;
};

inline RelativeIdeal ideal_from_gens(const NumericalSemigroup& h,
                                     std::span<const Int> gens) {
  return RelativeIdeal(h, gens);
}

inline RelativeIdeal ideal_from_gens(const NumericalSemigroup& h,
                                     std::initializer_list<Int> gens) {
  return RelativeIdeal(h, gens);
}

/// H itself, as the principal ideal generated by 0.
inline RelativeIdeal unit_ideal(const NumericalSemigroup& h) {
  return RelativeIdeal(h, {Int{0}});
}

/// Generated by F(H) - a for every pseudo-Frobenius number a.
inline RelativeIdeal canonical_ideal(const NumericalSemigroup& h) {
  std::vector<Int> gens;
  for (Int a : h.pseudo_frobenius()) gens.push_back(h.frobenius() - a);
  return RelativeIdeal(h, gens);
}

/// The monomial conductor: every z >= F(H) + 1.
inline RelativeIdeal conductor_ideal(const NumericalSemigroup& h) {
  std::vector<Int> gens;
  for (Int z = h.conductor(); z < h.conductor() + h.multiplicity(); ++z) {
    gens.push_back(z);
  }
  return RelativeIdeal(h, gens);
}

/// The integral closure: every nonnegative integer.
inline RelativeIdeal normalization_ideal(const NumericalSemigroup& h) {
  std::vector<Int> gens;
  for (Int z = 0; z <= h.conductor(); ++z) gens.push_back(z);
  return RelativeIdeal(h, gens);
}

namespace detail {

inline void require_same_owner(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (!(a.owner() == b.owner())) {
    throw Error(ErrorCode::owner_mismatch,
                "ideals belong to different semigroups: " +
                    a.owner().to_string() + " vs " + b.owner().to_string());
  }
}

}  // namespace detail

inline RelativeIdeal ideal_product(const RelativeIdeal& a,
                                   const RelativeIdeal& b) {
  detail::require_same_owner(a, b);
  std::vector<Int> sums;
  sums.reserve(a.gens().size() * b.gens().size());
  for (Int x : a.gens()) {
    for (Int y : b.gens()) sums.push_back(x + y);
  }
  return RelativeIdeal(a.owner(), sums);
}

/// { z : z + b ⊆ a }. Every member is at least min(a) - min(b), and every
/// z >= stability_bound(a) - min(b) is a member; one multiplicity's worth of
/// consecutive members past that point generates the rest.
inline RelativeIdeal ideal_colon(const RelativeIdeal& a,
                                 const RelativeIdeal& b) {
  detail::require_same_owner(a, b);
  const Int lo = a.min() - b.min();
  const Int hi = a.stability_bound() - b.min() + a.owner().multiplicity();
  std::vector<Int> members;
  for (Int z = lo; z < hi; ++z) {
    const bool inside = std::all_of(b.gens().begin(), b.gens().end(),
                                    [&](Int g) { return a.contains(z + g); });
    if (inside) members.push_back(z);
  }
  return RelativeIdeal(a.owner(), members);
}

/// Decided on normalized generators, cross-checked against membership on the
/// joint window.
inline bool ideal_equals(const RelativeIdeal& a, const RelativeIdeal& b) {
  detail::require_same_owner(a, b);
  const bool by_gens = a.gens() == b.gens();
#ifndef NDEBUG
  const Int lo = std::min(a.min(), b.min());
  const Int hi = std::max(a.stability_bound(), b.stability_bound());
  bool by_members = true;
  for (Int z = lo; z <= hi && by_members; ++z) {
    by_members = a.contains(z) == b.contains(z);
  }
  if (by_gens != by_members) {
    throw std::logic_error("ideal equality checks disagree");
  }
#endif
  return by_gens;
}

/// a ⊆ b as member sets.
inline bool ideal_subset(const RelativeIdeal& a, const RelativeIdeal& b) {
  detail::require_same_owner(a, b);
  return std::all_of(a.gens().begin(), a.gens().end(),
                     [&](Int g) { return b.contains(g); });
}

/// H - (H - E) = E.
inline bool is_reflexive(const RelativeIdeal& e) {
  const auto h = unit_ideal(e.owner());
  return ideal_equals(ideal_colon(h, ideal_colon(h, e)), e);
}

/// C - (C - E) = E; holds for every relative ideal.
inline bool canonical_bidual_check(const RelativeIdeal& e) {
  const auto c = canonical_ideal(e.owner());
  return ideal_equals(ideal_colon(c, ideal_colon(c, e)), e);
}

}  // namespace nsgff
