#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <memory>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nsgff/error.hpp"

namespace nsgff {

using Int = std::int64_t;

/// Largest generator accepted by from_generators.
inline constexpr Int kMaxGenerator = Int{1} << 20;
/// Largest Frobenius number whose membership window we are willing to store.
inline constexpr Int kMaxFrobenius = Int{1} << 26;

std::string format_list(std::span<const Int> values);

/// A cofinite submonoid of the nonnegative integers.
///
/// The value is immutable once built. Copies share one state block, so
/// passing semigroups around (and embedding them as ideal owners) is cheap.
/// Membership below the Frobenius number is answered from a window bitset;
/// everything above it is a member.
class NumericalSemigroup {
 public:
  /// The full monoid of nonnegative integers.
  NumericalSemigroup() : NumericalSemigroup(natural_numbers()) {}

  static NumericalSemigroup natural_numbers() {
    return from_window({});
  }

  static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()));
  }

  /// Builds the semigroup generated by `gens`, reduced to its minimal
  /// generating set. Generators are scanned ascending and kept only when
  /// they are not representable by the generators already kept.
  static NumericalSemigroup from_generators(std::span<const Int> gens) {
    if (gens.empty()) {
      throw Error(ErrorCode::invalid_input, "generator list is empty");
    }
    std::vector<Int> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.front() < 1) {
      throw Error(ErrorCode::invalid_input,
                  "generators must be positive integers");
    }
    if (sorted.back() > kMaxGenerator) {
      throw Error(ErrorCode::input_too_large,
                  "generator " + std::to_string(sorted.back()) +
                      " exceeds the supported bound 2^20");
    }
    Int g = 0;
    for (Int x : sorted) g = std::gcd(g, x);
    if (g != 1) {
      throw Error(ErrorCode::gcd_not_one,
                  "gcd of generators " + format_list(sorted) + " is " +
                      std::to_string(g) + ", not 1");
    }

    // Unbounded knapsack reachability over [0, max generator].
    const Int top = sorted.back();
    std::vector<bool> reachable(static_cast<std::size_t>(top) + 1, false);
    reachable[0] = true;
    std::vector<Int> kept;
    for (Int x : sorted) {
      if (reachable[static_cast<std::size_t>(x)]) continue;
      kept.push_back(x);
      for (Int z = x; z <= top; ++z) {
        if (reachable[static_cast<std::size_t>(z - x)]) {
          reachable[static_cast<std::size_t>(z)] = true;
        }
      }
    }

    auto apery_set = shortest_paths_mod(kept);
    const Int e = kept.front();
    const Int frob = *std::max_element(apery_set.begin(), apery_set.end()) - e;
    if (frob > kMaxFrobenius) {
      throw Error(ErrorCode::input_too_large,
                  "Frobenius number " + std::to_string(frob) +
                      " exceeds the supported window 2^26");
    }
    std::vector<bool> window(static_cast<std::size_t>(frob + 1));
    for (Int z = 0; z <= frob; ++z) {
      window[static_cast<std::size_t>(z)] =
          z >= apery_set[static_cast<std::size_t>(z % e)];
    }
    auto result = from_window(std::move(window), std::move(apery_set));
    // Minimal generating sets are unique; the knapsack scan and the Apery
    // derivation must agree.
    if (result.s_->min_gens != kept) {
      throw std::logic_error("minimal generator derivations disagree");
    }
    return result;
  }

  /// Builds the semigroup whose gap set is exactly `gaps`.
  static NumericalSemigroup from_gaps(std::span<const Int> gaps) {
    std::vector<Int> sorted(gaps.begin(), gaps.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) return natural_numbers();
    if (sorted.front() < 1) {
      throw Error(ErrorCode::invalid_input, "gaps must be positive integers");
    }
    if (sorted.back() > kMaxFrobenius) {
      throw Error(ErrorCode::input_too_large, "gap set too large");
    }
    const Int frob = sorted.back();
    std::vector<bool> window(static_cast<std::size_t>(frob + 1), true);
    for (Int z : sorted) window[static_cast<std::size_t>(z)] = false;
    for (Int a = 1; a <= frob; ++a) {
      if (!window[static_cast<std::size_t>(a)]) continue;
      for (Int b = a; a + b <= frob; ++b) {
        if (window[static_cast<std::size_t>(b)] &&
            !window[static_cast<std::size_t>(a + b)]) {
          throw Error(ErrorCode::invalid_input,
                      "complement of the gap set is not closed under "
                      "addition: " +
                          std::to_string(a) + " + " + std::to_string(b));
        }
      }
    }
    return from_window(std::move(window));
  }

  /// Child in the genus tree: removes a minimal generator larger than the
  /// Frobenius number.
  NumericalSemigroup without_generator(Int g) const {
    if (g <= frobenius() ||
        !std::binary_search(min_gens().begin(), min_gens().end(), g)) {
      throw Error(ErrorCode::invalid_input,
                  std::to_string(g) +
                      " is not a minimal generator above the Frobenius number");
    }
    std::vector<bool> window(static_cast<std::size_t>(g + 1), true);
    std::copy(s_->window.begin(), s_->window.end(), window.begin());
    window[static_cast<std::size_t>(g)] = false;
    return from_window(std::move(window));
  }

  bool contains(Int z) const noexcept {
    if (z < 0) return false;
    if (z > s_->frobenius) return true;
    return s_->window[static_cast<std::size_t>(z)];
  }

  /// Least member of each residue class modulo `n`, indexed by residue.
  std::vector<Int> apery(Int n) const {
    if (n <= 0 || !contains(n)) {
      throw Error(ErrorCode::not_a_member,
                  std::to_string(n) + " is not a positive member");
    }
    if (n == multiplicity()) return s_->apery;
    std::vector<Int> out(static_cast<std::size_t>(n), -1);
    Int missing = n;
    for (Int z = 0; missing > 0; ++z) {
      auto& slot = out[static_cast<std::size_t>(z % n)];
      if (slot < 0 && contains(z)) {
        slot = z;
        --missing;
      }
    }
    return out;
  }

  const std::vector<Int>& min_gens() const noexcept { return s_->min_gens; }
  const std::vector<Int>& gaps() const noexcept { return s_->gaps; }
  const std::vector<Int>& pseudo_frobenius() const noexcept { return s_->pf; }

  Int frobenius() const noexcept { return s_->frobenius; }
  Int multiplicity() const noexcept { return s_->min_gens.front(); }
  Int embdim() const noexcept { return static_cast<Int>(s_->min_gens.size()); }
  Int type() const noexcept { return static_cast<Int>(s_->pf.size()); }
  Int genus() const noexcept { return static_cast<Int>(s_->gaps.size()); }
  /// Conductor F(H) + 1: every integer at or above it is a member.
  Int conductor() const noexcept { return s_->frobenius + 1; }

  bool is_natural_numbers() const noexcept { return s_->frobenius < 0; }
  bool is_symmetric() const noexcept { return type() == 1; }
  bool is_minimal_multiplicity() const noexcept {
    return embdim() == multiplicity();
  }

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) noexcept {
    return a.s_ == b.s_ || a.s_->min_gens == b.s_->min_gens;
  }

  std::string to_string() const { return "<" + format_list(min_gens()) + ">"; }

 private:
  struct State {
    std::vector<Int> min_gens;
    std::vector<Int> gaps;
    std::vector<Int> pf;
    std::vector<Int> apery;  // modulo the multiplicity
    std::vector<bool> window;
    Int frobenius = -1;
  };

  explicit NumericalSemigroup(std::shared_ptr<const State> s)
      : s_(std::move(s)) {}

  // Dijkstra over residues modulo the smallest generator.
  static std::vector<Int> shortest_paths_mod(const std::vector<Int>& gens) {
    const Int e = gens.front();
    constexpr Int kInf = std::numeric_limits<Int>::max();
    std::vector<Int> dist(static_cast<std::size_t>(e), kInf);
    dist[0] = 0;
    using Entry = std::pair<Int, Int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    queue.emplace(0, 0);
    while (!queue.empty()) {
      auto [d, r] = queue.top();
      queue.pop();
      if (d != dist[static_cast<std::size_t>(r)]) continue;
      for (std::size_t i = 1; i < gens.size(); ++i) {
        const Int next = (r + gens[i]) % e;
        const Int nd = d + gens[i];
        if (nd < dist[static_cast<std::size_t>(next)]) {
          dist[static_cast<std::size_t>(next)] = nd;
          queue.emplace(nd, next);
        }
      }
    }
    return dist;
  }

  // `window` covers [0, F] with window[F] false (empty for the full monoid).
  static NumericalSemigroup from_window(std::vector<bool> window,
                                        std::vector<Int> apery_set = {}) {
    auto s = std::make_shared<State>();
    const Int frob = static_cast<Int>(window.size()) - 1;
    s->frobenius = frob;
    s->window = std::move(window);
    auto member = [&](Int z) {
      return z > frob || s->window[static_cast<std::size_t>(z)];
    };

    Int e = 1;
    while (!member(e)) ++e;
    if (apery_set.empty() || static_cast<Int>(apery_set.size()) != e) {
      apery_set.assign(static_cast<std::size_t>(e), -1);
      apery_set[0] = 0;
      for (Int r = 1; r < e; ++r) {
        Int z = r;
        while (!member(z)) z += e;
        apery_set[static_cast<std::size_t>(r)] = z;
      }
    }

    for (Int z = 1; z <= frob; ++z) {
      if (!s->window[static_cast<std::size_t>(z)]) s->gaps.push_back(z);
    }

    // A nonzero Apery element decomposes in H only through other nonzero
    // Apery elements, and an Apery element is maximal for <=_H exactly when
    // it yields a pseudo-Frobenius number.
    s->min_gens.push_back(e);
    for (Int r = 0; r < e; ++r) {
      const Int w = apery_set[static_cast<std::size_t>(r)];
      bool decomposable = false;
      bool maximal = true;
      for (Int q = 1; q < e; ++q) {
        if (q == r) continue;
        const Int u = apery_set[static_cast<std::size_t>(q)];
        if (r != 0 && u < w && member(w - u)) decomposable = true;
        if (u > w && member(u - w)) maximal = false;
      }
      if (r != 0 && !decomposable) s->min_gens.push_back(w);
      if (maximal) s->pf.push_back(w - e);
    }
    std::sort(s->min_gens.begin(), s->min_gens.end());
    std::sort(s->pf.begin(), s->pf.end());
    s->apery = std::move(apery_set);
    return NumericalSemigroup(std::move(s));
  }

  std::shared_ptr<const State> s_;
};

inline std::string format_list(std::span<const Int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace nsgff
