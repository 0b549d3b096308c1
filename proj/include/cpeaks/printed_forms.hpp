#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cpeaks/complex.hpp"
#include "cpeaks/errors.hpp"
#include "cpeaks/generating.hpp"
#include "cpeaks/hvector.hpp"

// Evaluates the published closed forms for P(x, y) and H(x, y) and reports
// whether they reproduce the f- and h-polynomials. The shipped expansions are
// f_generating_series / h_generating_series; these reports only diagnose.
namespace cpeaks {

struct PrintedFormCheck {
  std::string label;
  // Expansion with polynomial-in-x coefficients succeeded.
  bool polynomial = false;
  std::string polynomial_detail;
  // Smallest n whose y^n coefficient disagrees at some sample point; 0 if none.
  int first_mismatch_n = 0;
  std::string mismatch_detail;

  bool matches() const { return polynomial && first_mismatch_n == 0; }
};

namespace detail {

inline const std::vector<Rational>& sample_points() {
  static const std::vector<Rational> points{Rational(2), Rational(3), Rational(1, 2)};
  return points;
}

template <class PolyBuilder, class PointBuilder>
PrintedFormCheck check_form(std::string label, int order, const std::function<Poly(int)>& expected,
                            PolyBuilder&& poly_series, PointBuilder&& point_series) {
  PrintedFormCheck c;
  c.label = std::move(label);
  try {
    const BiSeries s = poly_series(order);
    c.polynomial = true;
    for (int n = 3; n <= order; ++n) {
      if (!(s[n] == expected(n))) {
        c.polynomial_detail = "y^" + std::to_string(n) + " coefficient is " + s[n].to_string() +
                              ", expected " + expected(n).to_string();
        break;
      }
    }
    if (c.polynomial_detail.empty()) c.polynomial_detail = "polynomial coefficients";
  } catch (const ArithmeticError& e) {
    c.polynomial = false;
    c.polynomial_detail = std::string("no polynomial expansion: ") + e.what();
  }
  for (const Rational& x0 : sample_points()) {
    try {
      const Series s = point_series(x0, order);
      for (int n = 3; n <= order; ++n) {
        const Rational want = expected(n)(x0);
        if (s[n] != want) {
          if (c.first_mismatch_n == 0 || n < c.first_mismatch_n) {
            c.first_mismatch_n = n;
            c.mismatch_detail = "at x = " + x0.str() + " the y^" + std::to_string(n) + " coefficient is " +
                                s[n].str() + ", expected " + want.str();
          }
          break;
        }
      }
    } catch (const ArithmeticError& e) {
      c.first_mismatch_n = 3;
      c.mismatch_detail = "at x = " + x0.str() + ": " + e.what();
    }
  }
  return c;
}

}  // namespace detail

/// Reports for the published P(x, y) under both readings of its juxtaposed
/// fractions, and for the corrected form that is shipped.
inline std::vector<PrintedFormCheck> f_series_report(int order) {
  const std::function<Poly(int)> expected = [](int n) { return f_polynomial(n); };
  std::vector<PrintedFormCheck> out;
  for (auto b : {gf::Bracketing::Product, gf::Bracketing::Quotient}) {
    const std::string name = b == gf::Bracketing::Product ? "published P(x,y), product reading"
                                                          : "published P(x,y), quotient reading";
    out.push_back(detail::check_form(
        name, order, expected, [b](int o) { return gf::printed_f_series(Poly::x(), o, b); },
        [b](const Rational& x0, int o) { return gf::printed_f_series(x0, o, b); }));
  }
  out.push_back(detail::check_form(
      "corrected P(x,y)", order, expected, [](int o) { return gf::f_series(Poly::x(), o); },
      [](const Rational& x0, int o) { return gf::f_series(x0, o); }));
  return out;
}

inline std::vector<PrintedFormCheck> h_series_report(int order) {
  const std::function<Poly(int)> expected = [](int n) { return h_polynomial(n); };
  std::vector<PrintedFormCheck> out;
  out.push_back(detail::check_form(
      "published H(x,y)", order, expected, [](int o) { return gf::printed_h_series(Poly::x(), o); },
      [](const Rational& x0, int o) { return gf::printed_h_series(x0, o); }));
  out.push_back(detail::check_form(
      "corrected H(x,y)", order, expected, [](int o) { return gf::h_series(Poly::x(), o); },
      [](const Rational& x0, int o) { return gf::h_series(x0, o); }));
  return out;
}

}  // namespace cpeaks
