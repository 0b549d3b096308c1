#pragma once

#include "cpeaks/exact/poly.hpp"
#include "cpeaks/exact/series.hpp"

// Closed forms for sum_{n>=3} P_n(x) y^n and sum_{n>=3} H_n(x) y^n, written
// once over a coefficient ring. With Coeff = Poly and x = Poly::x() the result
// is the bivariate expansion; with Coeff = Rational and x a number it is the
// same expansion specialised at that point.
namespace cpeaks::gf {

namespace detail {

inline Rational lift_const(const Rational& r, const Rational&) { return r; }
inline Poly lift_const(const Rational& r, const Poly&) { return Poly::constant(r); }

template <class Coeff>
struct Terms {
  int order;
  Coeff x;

  TruncatedSeries<Coeff> constant(const Coeff& c) const { return TruncatedSeries<Coeff>::constant(order, c); }
  TruncatedSeries<Coeff> number(long v) const { return constant(lift_const(Rational(v), x)); }
  TruncatedSeries<Coeff> y_pow(int k, const Coeff& c) const { return TruncatedSeries<Coeff>::monomial(order, c, k); }
  TruncatedSeries<Coeff> y_pow(int k) const { return y_pow(k, lift_const(Rational(1), x)); }

  // C(y^2)
  TruncatedSeries<Coeff> catalan_of_y_squared() const {
    const Series c = catalan_series(order).substitute_square();
    TruncatedSeries<Coeff> s(order);
    for (int k = 0; k <= order; ++k) s[k] = lift_const(c[k], x);
    return s;
  }
};

}  // namespace detail

/// y^2 (x + 1 - C(y^2)) (1 + y + xy) / (x - (1 + x)^2 y^2) - y^2
template <class Coeff>
TruncatedSeries<Coeff> f_series(const Coeff& x, int order) {
  const detail::Terms<Coeff> t{order, x};
  const Coeff one = detail::lift_const(Rational(1), x);
  const Coeff x1 = x + one;
  const auto numerator = t.y_pow(2) * (t.constant(x1) - t.catalan_of_y_squared()) *
                         (t.number(1) + t.y_pow(1, x1));
  const auto denominator = t.constant(x) - t.y_pow(2, x1 * x1);
  return numerator / denominator - t.y_pow(2);
}

/// y^2 (x - C(y^2)) (1 + xy) / (x - 1 - x^2 y^2) - y^2, i.e. f_series at x - 1.
template <class Coeff>
TruncatedSeries<Coeff> h_series(const Coeff& x, int order) {
  const detail::Terms<Coeff> t{order, x};
  const Coeff one = detail::lift_const(Rational(1), x);
  const auto numerator = t.y_pow(2) * (t.constant(x) - t.catalan_of_y_squared()) *
                         (t.number(1) + t.y_pow(1, x));
  const auto denominator = t.constant(x - one) - t.y_pow(2, x * x);
  return numerator / denominator - t.y_pow(2);
}

// How the juxtaposed fractions in the published closed form are grouped.
enum class Bracketing { Product, Quotient };

/// The published form (x y^2 (x+2) - x y^2 C(y^2)) / (x - (x+1) y^2) . (1+y+xy)/(x+1) - y^2,
/// with the middle "." read as a product or as a quotient.
template <class Coeff>
TruncatedSeries<Coeff> printed_f_series(const Coeff& x, int order, Bracketing b) {
  const detail::Terms<Coeff> t{order, x};
  const Coeff one = detail::lift_const(Rational(1), x);
  const Coeff two = detail::lift_const(Rational(2), x);
  const auto first = (t.y_pow(2, x * (x + two)) - t.y_pow(2, x) * t.catalan_of_y_squared()) /
                     (t.constant(x) - t.y_pow(2, x + one));
  const auto second_num = t.number(1) + t.y_pow(1, x + one);
  const auto second_den = t.constant(x + one);
  if (b == Bracketing::Product) return first * second_num / second_den - t.y_pow(2);
  return first * second_den / second_num - t.y_pow(2);
}

/// The published [((x^2-1) y^2 - (x-1) y^2 C(y^2)) (1+xy)] / [x (x - 1 - x y^2)] - y^2.
template <class Coeff>
TruncatedSeries<Coeff> printed_h_series(const Coeff& x, int order) {
  const detail::Terms<Coeff> t{order, x};
  const Coeff one = detail::lift_const(Rational(1), x);
  const auto numerator =
      (t.y_pow(2, x * x - one) - t.y_pow(2, x - one) * t.catalan_of_y_squared()) * (t.number(1) + t.y_pow(1, x));
  const auto denominator = t.constant(x) * (t.constant(x - one) - t.y_pow(2, x));
  return numerator / denominator - t.y_pow(2);
}

}  // namespace cpeaks::gf
