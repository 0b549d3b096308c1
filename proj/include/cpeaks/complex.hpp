#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cpeaks/errors.hpp"
#include "cpeaks/exact/comb.hpp"
#include "cpeaks/exact/poly.hpp"
#include "cpeaks/exact/series.hpp"
#include "cpeaks/generating.hpp"
#include "cpeaks/peak_sets.hpp"

namespace cpeaks {

// Largest n for which the complex is materialised for exhaustive poset checks
// (2^12 candidate subsets of [3, n]).
inline constexpr int kPosetCap = 14;

/// dim P_n = floor((n - 1) / 2) - 1.
inline int complex_dimension(int n) { return max_peak_count(n) - 1; }

/// The f-vector (p_{n,-1}, p_{n,0}, ..., p_{n,dim}).
struct FaceTable {
  int n = 0;
  std::vector<Integer> f;

  // p_{n,dim}; zero outside [-1, dim P_n].
  Integer at_dim(int dim) const {
    const int k = dim + 1;
    if (k < 0 || k >= static_cast<int>(f.size())) return Integer{0};
    return f[static_cast<std::size_t>(k)];
  }

  friend bool operator==(const FaceTable&, const FaceTable&) = default;
};

namespace detail {

inline void require_ambient(int n) {
  if (n < 3) throw DomainError("n must be at least 3, got " + std::to_string(n));
}

inline void require_poset_cap(int n) {
  require_ambient(n);
  if (n > kPosetCap) {
    throw ResourceLimitError("exhaustive poset enumeration for n = " + std::to_string(n) +
                             " exceeds the cap n <= " + std::to_string(kPosetCap));
  }
}

// Emits valid sets in lexicographic order. `size` < 0 means all sizes.
inline void collect_faces(int n, int size, ValueSet& current, std::vector<PeakSet>& out) {
  const int have = static_cast<int>(current.size());
  if (size < 0 || have == size) out.emplace_back(n, current);
  if (size >= 0 && have == size) return;
  const int first = current.empty() ? 1 : current.back() + 1;
  // The (have+1)-th element must be at least 2(have+1) + 1.
  for (int v = std::max(first, 2 * (have + 1) + 1); v <= n; ++v) {
    current.push_back(v);
    collect_faces(n, size, current, out);
    current.pop_back();
  }
}

}  // namespace detail

/// Every face of P_n in lexicographic order of the ascending member sequence.
/// Position in this list is the face index used for monomials.
inline std::vector<PeakSet> all_faces(int n) {
  detail::require_ambient(n);
  std::vector<PeakSet> out;
  ValueSet current;
  detail::collect_faces(n, -1, current, out);
  return out;
}

/// Faces of dimension dim (cardinality dim + 1), lexicographically ordered.
/// Empty when dim is outside [-1, dim P_n].
inline std::vector<PeakSet> faces(int n, int dim) {
  detail::require_ambient(n);
  if (dim < -1 || dim > complex_dimension(n)) return {};
  std::vector<PeakSet> out;
  ValueSet current;
  detail::collect_faces(n, dim + 1, current, out);
  return out;
}

/// p_{n,i} = (n - 2i - 2)/(i + 1) C(n - 1, i) for 0 <= i <= dim P_n, 1 for i = -1,
/// 0 otherwise.
inline Integer face_count(int n, int dim) {
  detail::require_ambient(n);
  if (dim == -1) return Integer{1};
  if (dim < -1 || dim > complex_dimension(n)) return Integer{0};
  const Rational p = Rational(n - 2 * dim - 2, dim + 1) * Rational(comb::binomial(n - 1, dim));
  return to_integer(p, "face count");
}

inline FaceTable face_table(int n) {
  detail::require_ambient(n);
  FaceTable t{n, {}};
  for (int dim = -1; dim <= complex_dimension(n); ++dim) t.f.push_back(face_count(n, dim));
  return t;
}

/// The f-vector built only from the one-step recurrence in n, starting from
/// (p_{3,-1}, p_{3,0}) = (1, 1).
inline FaceTable face_counts_by_recurrence(int n) {
  detail::require_ambient(n);
  std::vector<Integer> f{1, 1};  // n = 3
  for (int m = 3; m < n; ++m) {
    // f holds p_{m,-1..}; build p_{m+1,-1..}.
    const auto p = [&](int i) -> Integer {
      const int k = i + 1;
      return (k >= 0 && k < static_cast<int>(f.size())) ? f[static_cast<std::size_t>(k)] : Integer{0};
    };
    std::vector<Integer> next{p(-1)};
    if (m % 2 == 0) {
      for (int i = 0; i <= m / 2 - 2; ++i) next.push_back(p(i - 1) + p(i));
      next.push_back(p(m / 2 - 2));
    } else {
      for (int i = 0; i <= (m - 3) / 2; ++i) next.push_back(p(i - 1) + p(i));
    }
    f = std::move(next);
  }
  return FaceTable{n, std::move(f)};
}

/// P_n(x) = sum_j p_{n,j-1} x^{d-j} with d = floor((n - 1)/2).
inline Poly f_polynomial(int n) {
  const FaceTable t = face_table(n);
  const int d = max_peak_count(n);
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) c[static_cast<std::size_t>(d - j)] = Rational(t.at_dim(j - 1));
  return Poly(std::move(c));
}

/// P_n(x) from P_3 = x + 1 and the parity recurrence
///   P_{m+1} = (1 + x) P_m                               (m even)
///   x P_{m+1} = (1 + x) P_m - 2/(m+1) C(m-1, (m-1)/2)   (m odd).
inline Poly f_polynomial_by_recurrence(int n) {
  detail::require_ambient(n);
  const Poly one_plus_x{1, 1};
  Poly p = one_plus_x;
  for (int m = 3; m < n; ++m) {
    if (m % 2 == 0) {
      p = one_plus_x * p;
    } else {
      const Rational c = Rational(2, m + 1) * Rational(comb::binomial(m - 1, (m - 1) / 2));
      p = divide_exact(one_plus_x * p - Poly::constant(c), Poly::x());
    }
  }
  return p;
}

/// sum_{n=3}^{order} P_n(x) y^n, expanded from the closed generating function.
inline BiSeries f_generating_series(int order_n) {
  if (order_n < 3) throw DomainError("series order must be at least 3");
  return gf::f_series(Poly::x(), order_n);
}

namespace detail {

inline void require_face(const PeakSet& s) {
  require_ambient(s.n());
  require_valid(s);
}

inline void require_interval(const PeakSet& s, const PeakSet& t) {
  require_face(s);
  require_face(t);
  if (s.n() != t.n()) throw DomainError("faces belong to different complexes");
  if (!s.is_subset_of(t)) {
    throw DomainError("{" + s.to_string() + "} is not below {" + t.to_string() + "}");
  }
}

}  // namespace detail

/// mu(S, T) = (-1)^{|T| - |S|} for S below T. Incomparable pairs are rejected.
inline int moebius(const PeakSet& s, const PeakSet& t) {
  detail::require_interval(s, t);
  return ((t.size() - s.size()) % 2 == 0) ? 1 : -1;
}

/// mu(S, S) = 1, mu(S, T) = -sum_{S <= U < T, U a face} mu(S, U).
inline Integer moebius_recursive_oracle(const PeakSet& s, const PeakSet& t) {
  detail::require_interval(s, t);
  const int n = s.n();
  const std::uint32_t base = s.mask();
  const std::uint32_t free = t.mask() & ~base;
  std::map<std::uint32_t, Integer> memo;

  // Recursion over masks u with base <= u <= top, restricted to faces.
  const auto mu = [&](auto&& self, std::uint32_t top) -> Integer {
    if (top == base) return Integer{1};
    if (auto it = memo.find(top); it != memo.end()) return it->second;
    Integer sum{0};
    const std::uint32_t span = top & free;
    // proper sub-masks of span, including 0
    for (std::uint32_t sub = (span - 1) & span;; sub = (sub - 1) & span) {
      const std::uint32_t u = base | sub;
      if (is_valid(PeakSet::from_mask(n, u))) sum += self(self, u);
      if (sub == 0) break;
    }
    memo.emplace(top, -sum);
    return -sum;
  };
  return mu(mu, t.mask());
}

/// Reduced Euler characteristic sum_i (-1)^{i-1} p_{n,i-1}, from the f-vector.
inline Rational euler_characteristic(int n) {
  const FaceTable t = face_table(n);
  Rational chi{0};
  for (int dim = -1; dim <= complex_dimension(n); ++dim) {
    const Integer& p = t.f[static_cast<std::size_t>(dim + 1)];
    if (dim % 2 == 0) {
      chi += Rational(p);
    } else {
      chi -= Rational(p);
    }
  }
  return chi;
}

/// 0 for odd n, 2 (-1)^{n/2} / n C(n - 2, (n - 2)/2) for even n.
inline Rational euler_characteristic_closed_form(int n) {
  detail::require_ambient(n);
  if (n % 2 == 1) return Rational{0};
  const int sign = ((n / 2) % 2 == 0) ? 1 : -1;
  const Rational chi = Rational(2 * sign, n) * Rational(comb::binomial(n - 2, (n - 2) / 2));
  to_integer(chi, "reduced Euler characteristic");
  return chi;
}

/// The face poset of P_n with its containment relation, materialised for the
/// brute-force oracles.
class FacePoset {
 public:
  explicit FacePoset(int n) : n_(n) {
    detail::require_poset_cap(n);
    faces_ = all_faces(n);
    masks_.reserve(faces_.size());
    for (const auto& f : faces_) masks_.push_back(f.mask());
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return faces_.size(); }
  const std::vector<PeakSet>& faces() const noexcept { return faces_; }
  const PeakSet& face(std::size_t k) const { return faces_.at(k); }

  bool leq(std::size_t a, std::size_t b) const { return (masks_[a] & ~masks_[b]) == 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  // Covering pairs (a, b): a < b with |b| = |a| + 1.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        if (less(a, b) && faces_[b].size() == faces_[a].size() + 1) out.emplace_back(a, b);
      }
    }
    return out;
  }

 private:
  int n_;
  std::vector<PeakSet> faces_;
  std::vector<std::uint32_t> masks_;
};

/// Checks that S -> ([n+1 in S], S \ {n+1}) is an order isomorphism from
/// P_{n+1} onto 2 x P_n (n even), or onto 2 x P_n minus the copies of the
/// top-dimensional faces of P_n paired with the upper element of 2 (n odd).
inline bool verify_product_structure(int n) {
  detail::require_ambient(n);
  detail::require_poset_cap(n + 1);
  const int top_size = max_peak_count(n);
  const std::uint32_t new_bit = 1u << n;

  std::set<std::pair<int, std::uint32_t>> target;
  for (const auto& f : all_faces(n)) {
    target.emplace(0, f.mask());
    if (n % 2 == 0 || f.size() != top_size) target.emplace(1, f.mask());
  }

  const auto upper = all_faces(n + 1);
  std::vector<std::pair<int, std::uint32_t>> image;
  for (const auto& s : upper) {
    const std::uint32_t m = s.mask();
    image.emplace_back((m & new_bit) ? 1 : 0, m & ~new_bit);
  }
  const std::set<std::pair<int, std::uint32_t>> image_set(image.begin(), image.end());
  if (image_set.size() != image.size() || image_set != target) return false;

  for (std::size_t a = 0; a < upper.size(); ++a) {
    for (std::size_t b = 0; b < upper.size(); ++b) {
      const bool in_upper = upper[a].is_subset_of(upper[b]);
      const bool in_product =
          image[a].first <= image[b].first && (image[a].second & ~image[b].second) == 0;
      if (in_upper != in_product) return false;
    }
  }
  return true;
}

}  // namespace cpeaks
