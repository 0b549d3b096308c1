#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cpeaks/errors.hpp"

namespace cpeaks {

// Sets of values are strictly ascending integer sequences.
using ValueSet = std::vector<int>;

// Sorts and deduplicates.
inline ValueSet normalize_set(ValueSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Largest n for which S_n is enumerated exhaustively (10! = 3628800).
inline constexpr int kPermutationCap = 10;

/// A permutation of [n] in one-line notation, indexed from 1.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = size();
    if (n < 1) throw FormatError("permutation must have at least one entry");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : values_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
        throw FormatError("not a permutation of [" + std::to_string(n) + "]");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int size() const noexcept { return static_cast<int>(values_.size()); }

  // sigma(i) for 1 <= i <= n.
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }

  std::span<const int> values() const noexcept { return values_; }

  // Concatenated digits, e.g. "14253"; entries above 9 are comma-separated.
  std::string to_string() const {
    std::string out;
    const bool sep = size() > 9;
    for (int v : values_) {
      if (sep && !out.empty()) out += ',';
      out += std::to_string(v);
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

namespace detail {

// Peak values of a raw one-line sequence as a bitmask (bit v-1 for value v).
inline std::uint32_t peak_mask(std::span<const int> v) {
  std::uint32_t mask = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i - 1] < v[i] && v[i] > v[i + 1]) mask |= 1u << (v[i] - 1);
  }
  return mask;
}

inline std::uint32_t set_mask(const ValueSet& s) {
  std::uint32_t mask = 0;
  for (int v : s) mask |= 1u << (v - 1);
  return mask;
}

inline void require_enumerable(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (n > kPermutationCap) {
    throw ResourceLimitError("exhaustive enumeration of S_" + std::to_string(n) +
                             " exceeds the cap n <= " + std::to_string(kPermutationCap));
  }
}

}  // namespace detail

/// { sigma(i) : 2 <= i <= n-1, sigma(i-1) < sigma(i) > sigma(i+1) }.
/// Only interior positions count; there is no wrap-around.
inline ValueSet circular_peak_set(const Permutation& sigma) {
  ValueSet out;
  const auto v = sigma.values();
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i - 1] < v[i] && v[i] > v[i + 1]) out.push_back(v[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// { sigma(i) : 1 <= i <= n-1, sigma(i) > sigma(i+1) }.
inline ValueSet circular_descent_set(const Permutation& sigma) {
  ValueSet out;
  const auto v = sigma.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] > v[i + 1]) out.push_back(v[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct PeakStatistics {
  ValueSet cp;
  ValueSet cdes;
};

inline PeakStatistics peak_statistics(const Permutation& sigma) {
  return {circular_peak_set(sigma), circular_descent_set(sigma)};
}

/// All sigma in S_n with CP(sigma) = s, in lexicographic order.
inline std::vector<Permutation> enumerate_cp_class(int n, const ValueSet& s) {
  detail::require_enumerable(n);
  const ValueSet target = normalize_set(s);
  if (!target.empty() && (target.front() < 1 || target.back() > n)) return {};
  const std::uint32_t want = detail::set_mask(target);

  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    if (detail::peak_mask(v) == want) out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::uint64_t cp_class_size(int n, const ValueSet& s) {
  detail::require_enumerable(n);
  const ValueSet target = normalize_set(s);
  if (!target.empty() && (target.front() < 1 || target.back() > n)) return 0;
  const std::uint32_t want = detail::set_mask(target);

  std::uint64_t count = 0;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    count += detail::peak_mask(v) == want;
  } while (std::next_permutation(v.begin(), v.end()));
  return count;
}

/// |CP_n(S)| for every S subset of [n] from a single pass over S_n, indexed by
/// the bitmask of S (bit v-1 set when v is in S).
inline std::vector<std::uint64_t> cp_class_histogram(int n) {
  detail::require_enumerable(n);
  std::vector<std::uint64_t> counts(std::size_t{1} << n, 0);
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    ++counts[detail::peak_mask(v)];
  } while (std::next_permutation(v.begin(), v.end()));
  return counts;
}

}  // namespace cpeaks
