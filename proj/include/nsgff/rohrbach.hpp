#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nsgff/error.hpp"
#include "nsgff/semigroup.hpp"

namespace nsgff {

/// Finite set of nonnegative integers together with its covering reach n(A):
/// the first integer missing from A + A, or -1 when 0 is not in A.
struct RohrbachSet {
  std::vector<Int> elements;
  Int reach = -1;
};

inline Int n_of_set(std::span<const Int> set) {
  if (set.empty()) throw Error(ErrorCode::invalid_input, "set is empty");
  std::vector<Int> a(set.begin(), set.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.front() < 0) {
    throw Error(ErrorCode::invalid_input, "elements must be nonnegative");
  }
  if (a.front() != 0) return -1;
  std::vector<bool> sums(static_cast<std::size_t>(2 * a.back() + 2), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      sums[static_cast<std::size_t>(a[i] + a[j])] = true;
    }
  }
  Int n = 0;
  while (sums[static_cast<std::size_t>(n)]) ++n;
  return n;
}

inline RohrbachSet make_rohrbach_set(std::span<const Int> set) {
  RohrbachSet out;
  out.elements.assign(set.begin(), set.end());
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()),
                     out.elements.end());
  out.reach = n_of_set(out.elements);
  return out;
}

inline constexpr std::array<Int, 25> kRohrbachTable = {
    1,  3,  5,  9,   13,  17,  21,  27,  33,  41,  47,  55,  65,
    73, 81, 93, 105, 117, 129, 141, 153, 165, 181, 197, 213};

/// Published extremal values for 1 <= r <= 25.
inline Int known_table(Int r) {
  if (r < 1 || r > static_cast<Int>(kRohrbachTable.size())) {
    throw Error(ErrorCode::out_of_table,
                "no tabulated value for r = " + std::to_string(r));
  }
  return kRohrbachTable[static_cast<std::size_t>(r - 1)];
}

struct RohrbachResult {
  Int value = -1;
  RohrbachSet witness;
  bool exact = false;
  std::uint64_t nodes = 0;
};

/// Thrown when the search runs out of nodes; carries the best set found so
/// far, which is only a lower bound.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(RohrbachResult best)
      : Error(ErrorCode::budget_exceeded,
              "node budget exhausted; best-so-far " +
                  std::to_string(best.value) + " is a lower bound"),
        best_(std::move(best)) {}

  const RohrbachResult& best() const noexcept { return best_; }

 private:
  RohrbachResult best_;
};

inline constexpr std::uint64_t kDefaultRohrbachBudget = 100'000'000;

namespace detail {

class RohrbachSearch {
 public:
  RohrbachSearch(Int r, std::uint64_t budget) : r_(r), budget_(budget) {
    // |A + A| <= r(r+1)/2, so no useful element or sum exceeds r(r+1).
    const Int limit = r * (r + 1) + 2;
    words_ = static_cast<std::size_t>((limit + 63) / 64);
    sums_.assign(static_cast<std::size_t>(r + 1),
                 std::vector<std::uint64_t>(words_, 0));
    elements_.reserve(static_cast<std::size_t>(r));
  }

  RohrbachResult run() {
    elements_.push_back(0);
    set_bit(sums_[1], 0);
    ++nodes_;
    descend(1, 1);
    RohrbachResult out;
    out.value = best_;
    out.witness = make_rohrbach_set(best_elements_);
    out.exact = !exhausted_;
    out.nodes = nodes_;
    if (exhausted_) throw BudgetExceeded(out);
    return out;
  }

 private:
  static void set_bit(std::vector<std::uint64_t>& bits, Int i) {
    bits[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
  }
  static bool test_bit(const std::vector<std::uint64_t>& bits, Int i) {
    return (bits[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U;
  }

  Int reach_of(const std::vector<std::uint64_t>& bits) const {
    for (std::size_t w = 0; w < words_; ++w) {
      if (~bits[w] != 0) {
        return static_cast<Int>(w * 64) + std::countr_one(bits[w]);
      }
    }
    return static_cast<Int>(words_ * 64);
  }

  Int popcount(const std::vector<std::uint64_t>& bits) const {
    Int c = 0;
    for (auto w : bits) c += std::popcount(w);
    return c;
  }

  // `depth` elements are placed; their sum-set lives in sums_[depth].
  void descend(Int depth, Int reach) {
    if (depth == r_) {
      if (reach > best_) {
        best_ = reach;
        best_elements_ = elements_;
      }
      return;
    }
    const Int remaining = r_ - depth;
    // Each new element x <= reach lifts the reach to at most 2 * reach + 1;
    // independently, the remaining elements add at most
    // remaining * depth + remaining * (remaining + 1) / 2 new sums.
    Int doubling = reach + 1;
    for (Int i = 0; i < remaining && doubling <= (Int{1} << 40); ++i) {
      doubling *= 2;
    }
    const Int counting = popcount(sums_[static_cast<std::size_t>(depth)]) +
                         remaining * depth + remaining * (remaining + 1) / 2;
    if (std::min(doubling - 1, counting) <= best_) return;

    const auto& parent = sums_[static_cast<std::size_t>(depth)];
    auto& child = sums_[static_cast<std::size_t>(depth + 1)];
    for (Int x = elements_.back() + 1; x <= reach; ++x) {
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return;
      }
      ++nodes_;
      child = parent;
      for (Int a : elements_) set_bit(child, a + x);
      set_bit(child, 2 * x);
      elements_.push_back(x);
      descend(depth + 1, reach_of(child));
      elements_.pop_back();
      if (exhausted_) return;
    }
  }

  Int r_;
  std::uint64_t budget_;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> sums_;
  std::vector<Int> elements_;
  std::vector<Int> best_elements_;
  Int best_ = -1;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/// Exact maximum of n(A) over |A| = r by depth-first search over
/// 0 = a_1 < a_2 < ... < a_r with a_{k+1} <= n(a_1..a_k). The witness is the
/// lexicographically smallest maximizer.
inline RohrbachResult rohrbach_max(
    Int r, std::uint64_t budget = kDefaultRohrbachBudget) {
  if (r < 1) throw Error(ErrorCode::invalid_input, "r must be positive");
  if (r > 64) {
    throw Error(ErrorCode::input_too_large, "exact search supports r <= 64");
  }
  return detail::RohrbachSearch(r, budget).run();
}

}  // namespace nsgff
