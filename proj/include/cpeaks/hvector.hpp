#pragma once

#include <cstdint>
#include <vector>

#include "cpeaks/complex.hpp"
#include "cpeaks/errors.hpp"
#include "cpeaks/exact/comb.hpp"
#include "cpeaks/exact/poly.hpp"
#include "cpeaks/generating.hpp"

namespace cpeaks {

/// (h_{n,0}, ..., h_{n,d}) with d = floor((n-1)/2).
struct HVector {
  int n = 0;
  std::vector<Integer> h;

  friend bool operator==(const HVector&, const HVector&) = default;
};

/// H_n(x) = P_n(x - 1).
inline Poly h_polynomial(int n) { return f_polynomial(n).translated(Rational{-1}); }

/// H_n(x) from H_3 = x and
///   H_{m+1} = x H_m                                        (m even)
///   (x - 1) H_{m+1} = x H_m - 2/(m+1) C(m-1, (m-1)/2)       (m odd),
/// the odd step solved by exact division by (x - 1).
inline Poly h_polynomial_by_recurrence(int n) {
  detail::require_ambient(n);
  const Poly x = Poly::x();
  Poly h = x;
  for (int m = 3; m < n; ++m) {
    if (m % 2 == 0) {
      h = x * h;
    } else {
      const Rational c = Rational(2, m + 1) * Rational(comb::binomial(m - 1, (m - 1) / 2));
      h = divide_exact(x * h - Poly::constant(c), Poly{-1, 1});
    }
  }
  return h;
}

/// h_{n,i} = (floor(n/2) - i)/(floor(n/2) + i) C(floor(n/2) + i, floor(n/2)).
inline Integer h_entry(int n, int i) {
  detail::require_ambient(n);
  if (i < 0 || i > max_peak_count(n)) {
    throw DomainError("h-vector index " + std::to_string(i) + " outside [0, " +
                      std::to_string(max_peak_count(n)) + "]");
  }
  const int half = n / 2;
  const Rational h = Rational(half - i, half + i) * Rational(comb::binomial(half + i, half));
  return to_integer(h, "h-vector entry");
}

inline HVector h_vector(int n) {
  HVector v{n, {}};
  for (int i = 0; i <= max_peak_count(n); ++i) v.h.push_back(h_entry(n, i));
  return v;
}

/// The h-vector read off H_n(x): h_{n,i} is the coefficient of x^{d-i}.
inline HVector h_vector_from_polynomial(int n) {
  const Poly hp = h_polynomial(n);
  const int d = max_peak_count(n);
  HVector v{n, {}};
  for (int i = 0; i <= d; ++i) v.h.push_back(to_integer(hp.coeff(d - i), "h-polynomial coefficient"));
  return v;
}

/// The h-vector built only from the entrywise recurrence
///   h_{m+1,0} = h_{m,0}
///   h_{m+1,i} = h_{m,i} + eps(m) h_{m+1,i-1}     for 1 <= i <= floor(m/2) - 1
///   h_{m+1,floor(m/2)} = eps(m) c_{floor(m/2)}
/// from (h_{3,0}, h_{3,1}) = (1, 0).
inline HVector h_recurrence_table(int n) {
  detail::require_ambient(n);
  std::vector<Integer> h{1, 0};
  for (int m = 3; m < n; ++m) {
    const int half = m / 2;
    const int eps = comb::epsilon(m);
    const auto prev = [&](int i) -> Integer {
      return (i >= 0 && i < static_cast<int>(h.size())) ? h[static_cast<std::size_t>(i)] : Integer{0};
    };
    std::vector<Integer> next(static_cast<std::size_t>(half) + 1);
    next[0] = prev(0);
    for (int i = 1; i <= half - 1; ++i) {
      next[static_cast<std::size_t>(i)] = prev(i) + eps * next[static_cast<std::size_t>(i - 1)];
    }
    next[static_cast<std::size_t>(half)] = eps * comb::catalan(half);
    h = std::move(next);
  }
  return HVector{n, std::move(h)};
}

/// sum_{n=3}^{order} H_n(x) y^n from the closed generating function.
inline BiSeries h_generating_series(int order_n) {
  if (order_n < 3) throw DomainError("series order must be at least 3");
  return gf::h_series(Poly::x(), order_n);
}

// Longest word length enumerated by the Dyck-endpoint oracle.
inline constexpr int kDyckWordCap = 24;

/// Brute-force count of words over {U, D} of the given length whose every
/// prefix has #U >= #D and which end at the given height.
inline std::uint64_t count_left_factors(int length, int height) {
  if (length < 0) throw DomainError("path length must be nonnegative");
  if (length > kDyckWordCap) {
    throw ResourceLimitError("left-factor enumeration of length " + std::to_string(length) +
                             " exceeds the cap " + std::to_string(kDyckWordCap));
  }
  std::uint64_t count = 0;
  for (std::uint32_t word = 0; word < (1u << length); ++word) {
    int h = 0;
    bool ok = true;
    for (int k = 0; k < length && ok; ++k) {
      h += (word & (1u << k)) ? -1 : 1;  // set bit = D
      ok = h >= 0;
    }
    count += ok && h == height;
  }
  return count;
}

/// Left factors from (0, 0) to (floor(n/2) + i - 1, floor(n/2) - i - 1).
inline std::uint64_t h_dyck_oracle(int n, int i) {
  detail::require_ambient(n);
  if (i < 0 || i > max_peak_count(n)) throw DomainError("h-vector index out of range");
  const int half = n / 2;
  return count_left_factors(half + i - 1, half - i - 1);
}

}  // namespace cpeaks
