#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpeaks/errors.hpp"
#include "cpeaks/exact/comb.hpp"
#include "cpeaks/perm.hpp"

namespace cpeaks {

/// A subset i_1 < ... < i_k of [n] with its ambient size. It may or may not be
/// realizable as a peak set; see is_valid.
class PeakSet {
 public:
  PeakSet(int n, ValueSet elements) : n_(n), elements_(normalize_set(std::move(elements))) {
    if (n < 1) throw FormatError("ambient size must be at least 1");
    if (!elements_.empty() && (elements_.front() < 1 || elements_.back() > n)) {
      throw FormatError("set element outside [1, " + std::to_string(n) + "]");
    }
  }

  static PeakSet empty(int n) { return PeakSet(n, {}); }

  // Set with bit v-1 of mask meaning v is a member.
  static PeakSet from_mask(int n, std::uint32_t mask) {
    ValueSet s;
    for (int v = 1; v <= n; ++v) {
      if (mask & (1u << (v - 1))) s.push_back(v);
    }
    return PeakSet(n, std::move(s));
  }

  int n() const noexcept { return n_; }
  const ValueSet& elements() const noexcept { return elements_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  bool contains(int v) const { return std::binary_search(elements_.begin(), elements_.end(), v); }
  std::uint32_t mask() const { return detail::set_mask(elements_); }

  bool is_subset_of(const PeakSet& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
  }

  // Comma-separated ascending members, e.g. "4,5"; empty string for the void face.
  std::string to_string() const {
    std::string out;
    for (int v : elements_) {
      if (!out.empty()) out += ',';
      out += std::to_string(v);
    }
    return out;
  }

  friend bool operator==(const PeakSet&, const PeakSet&) = default;

  // Lexicographic on the ascending member sequence; used for face indexing.
  friend bool operator<(const PeakSet& a, const PeakSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.elements_ < b.elements_;
  }

 private:
  int n_;
  ValueSet elements_;
};

struct Violation {
  int index;  // j, one-based
  int value;  // i_j
  int bound;  // 2j + 1
};

/// The smallest j with i_j < 2j + 1, if any.
inline std::optional<Violation> first_violation(const PeakSet& s) {
  const auto& e = s.elements();
  for (std::size_t j = 0; j < e.size(); ++j) {
    const int bound = 2 * static_cast<int>(j + 1) + 1;
    if (e[j] < bound) return Violation{static_cast<int>(j + 1), e[j], bound};
  }
  return std::nullopt;
}

/// True iff some permutation of [n] has exactly this peak set, i.e. iff
/// i_j >= 2j + 1 for every j.
inline bool is_valid(const PeakSet& s) { return !first_violation(s).has_value(); }

inline void require_valid(const PeakSet& s) {
  if (auto v = first_violation(s)) throw ValidityError(v->index, v->value, v->bound);
}

/// floor((n - 1) / 2), the largest size of a realizable peak set.
inline int max_peak_count(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  return (n - 1) / 2;
}

/// A permutation with peak set exactly s: with T = [i_k] \ s = {a_1 < ... < a_m},
/// the sequence a_1 i_1 a_2 i_2 ... a_k i_k a_{k+1} ... a_m (i_k + 1) ... n.
/// The empty set maps to the identity.
inline Permutation witness(const PeakSet& s) {
  require_valid(s);
  const int n = s.n();
  const auto& peaks = s.elements();
  if (peaks.empty()) return Permutation::identity(n);

  const int top = peaks.back();
  std::vector<int> rest;
  for (int v = 1; v <= top; ++v) {
    if (!s.contains(v)) rest.push_back(v);
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < peaks.size(); ++j) {
    out.push_back(rest[j]);
    out.push_back(peaks[j]);
  }
  for (std::size_t j = peaks.size(); j < rest.size(); ++j) out.push_back(rest[j]);
  for (int v = top + 1; v <= n; ++v) out.push_back(v);
  return Permutation(std::move(out));
}

/// A word over {U, D} whose every prefix has at least as many U as D.
class DyckPrefix {
 public:
  explicit DyckPrefix(std::string letters) : letters_(std::move(letters)) {
    int h = 0;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      const char c = letters_[k];
      if (c == 'U') {
        ++h;
      } else if (c == 'D') {
        if (--h < 0) {
          throw FormatError("not a left factor: prefix of length " + std::to_string(k + 1) +
                            " has more D than U");
        }
      } else {
        throw FormatError(std::string("Dyck word letter must be U or D, got '") + c + "'");
      }
    }
  }

  const std::string& letters() const noexcept { return letters_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  int down_steps() const noexcept {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'D'));
  }
  // Final height: #U - #D. The endpoint is (length(), height()).
  int height() const noexcept { return length() - 2 * down_steps(); }

  friend bool operator==(const DyckPrefix&, const DyckPrefix&) = default;

 private:
  std::string letters_;
};

/// The bijection phi: w_i = D iff i + 1 is in s, for 1 <= i <= n - 1.
inline DyckPrefix to_dyck(const PeakSet& s) {
  require_valid(s);
  std::string w;
  for (int i = 1; i <= s.n() - 1; ++i) w += s.contains(i + 1) ? 'D' : 'U';
  return DyckPrefix(std::move(w));
}

/// Inverse of to_dyck: { i + 1 : w_i = D }.
inline PeakSet from_dyck(int n, const DyckPrefix& w) {
  if (w.length() != n - 1) {
    throw FormatError("Dyck word for n = " + std::to_string(n) + " must have length " +
                      std::to_string(n - 1) + ", got " + std::to_string(w.length()));
  }
  ValueSet s;
  for (int i = 1; i <= w.length(); ++i) {
    if (w.letters()[static_cast<std::size_t>(i - 1)] == 'D') s.push_back(i + 1);
  }
  return PeakSet(n, std::move(s));
}

/// |P_n| = C(n - 1, floor((n - 1) / 2)).
inline Integer count_valid(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  return comb::central_binomial(n - 1);
}

}  // namespace cpeaks
