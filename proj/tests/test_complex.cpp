#include <catch_amalgamated.hpp>

#include "cpeaks/complex.hpp"
#include "cpeaks/printed_forms.hpp"

using namespace cpeaks;

namespace {

// Faces by scanning every subset of [n]; independent of the DFS in all_faces.
std::vector<PeakSet> scan_faces(int n, int size = -1) {
  std::vector<PeakSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    PeakSet s = PeakSet::from_mask(n, mask);
    if (is_valid(s) && (size < 0 || s.size() == size)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ValueSet> elements_of(const std::vector<PeakSet>& faces) {
  std::vector<ValueSet> out;
  for (const auto& f : faces) out.push_back(f.elements());
  return out;
}

}  // namespace

TEST_CASE("faces by dimension", "[complex]") {
  CHECK(elements_of(faces(5, 0)) == std::vector<ValueSet>{{3}, {4}, {5}});
  CHECK(elements_of(faces(5, 1)) == std::vector<ValueSet>{{3, 5}, {4, 5}});
  for (int n = 3; n <= 9; ++n) CHECK(elements_of(faces(n, -1)) == std::vector<ValueSet>{{}});
  CHECK(faces(5, 2).empty());
  CHECK(faces(5, -2).empty());
  CHECK(elements_of(all_faces(5)) == std::vector<ValueSet>{{}, {3}, {3, 5}, {4}, {4, 5}, {5}});
  CHECK_THROWS_AS(faces(2, 0), DomainError);
}

TEST_CASE("face enumeration agrees with a subset scan", "[complex][property]") {
  for (int n = 3; n <= 14; ++n) {
    REQUIRE(all_faces(n) == scan_faces(n));
    for (int dim = -1; dim <= complex_dimension(n) + 1; ++dim) {
      const auto f = faces(n, dim);
      REQUIRE(f == scan_faces(n, dim + 1));
      REQUIRE(face_count(n, dim) == f.size());
    }
  }
}

TEST_CASE("simplicial complex on [3, n]", "[complex][property]") {
  for (int n = 3; n <= 14; ++n) {
    for (const auto& s : all_faces(n)) {
      // every subset of a face is a face
      const std::uint32_t m = s.mask();
      for (std::uint32_t sub = m;; sub = (sub - 1) & m) {
        REQUIRE(is_valid(PeakSet::from_mask(n, sub)));
        if (sub == 0) break;
      }
    }
    for (int v = 1; v <= n; ++v) REQUIRE(is_valid(PeakSet(n, {v})) == (v >= 3));
    REQUIRE_FALSE(faces(n, complex_dimension(n)).empty());
    REQUIRE(faces(n, complex_dimension(n) + 1).empty());
  }
}

TEST_CASE("face counts", "[complex]") {
  CHECK(face_count(5, 1) == 2);
  CHECK(face_count(6, 1) == 5);
  CHECK(face_count(9, -1) == 1);
  CHECK(face_count(5, 2) == 0);
  CHECK(face_counts_by_recurrence(3).f == std::vector<Integer>{1, 1});
  CHECK(face_counts_by_recurrence(4).f == std::vector<Integer>{1, 2});
  CHECK(face_counts_by_recurrence(6).f == std::vector<Integer>{1, 4, 5});
  for (int n = 3; n <= 40; ++n) {
    REQUIRE(face_counts_by_recurrence(n) == face_table(n));
    Integer sum{0};
    for (const auto& p : face_table(n).f) sum += p;
    REQUIRE(sum == count_valid(n));
  }
}

TEST_CASE("faces of dimension i match left factors with i + 1 down steps", "[complex][dyck]") {
  for (int n = 3; n <= 14; ++n) {
    std::vector<int> by_downs(static_cast<std::size_t>(n), 0);
    for (const auto& f : all_faces(n)) ++by_downs[static_cast<std::size_t>(to_dyck(f).down_steps())];
    for (int dim = -1; dim <= complex_dimension(n); ++dim) {
      REQUIRE(face_count(n, dim) == by_downs[static_cast<std::size_t>(dim + 1)]);
    }
  }
}

TEST_CASE("f-polynomial", "[complex]") {
  CHECK(f_polynomial(3) == Poly{1, 1});
  CHECK(f_polynomial(5) == Poly{2, 3, 1});
  CHECK(f_polynomial(4) == Poly{2, 1});
  CHECK(f_polynomial(5)(Rational(-1)) == 0);
  for (int n = 3; n <= 40; ++n) REQUIRE(f_polynomial_by_recurrence(n) == f_polynomial(n));
}

TEST_CASE("f generating series", "[complex][series]") {
  const BiSeries s = f_generating_series(20);
  CHECK(s[3] == Poly{1, 1});
  CHECK(s[4] == Poly{2, 1});
  CHECK(s[2].is_zero());
  CHECK(s[0].is_zero());
  for (int n = 3; n <= 20; ++n) REQUIRE(s[n] == f_polynomial(n));
  CHECK_THROWS_AS(f_generating_series(2), DomainError);
}

TEST_CASE("published P(x,y) is reported, not shipped", "[complex][series]") {
  const auto report = f_series_report(12);
  REQUIRE(report.size() == 3);
  CHECK_FALSE(report[0].matches());
  CHECK_FALSE(report[0].polynomial);
  CHECK(report[0].first_mismatch_n == 4);
  CHECK_FALSE(report[1].matches());
  CHECK(report[2].matches());
}

TEST_CASE("Moebius function", "[complex]") {
  const auto E = [](int n) { return PeakSet::empty(n); };
  CHECK(moebius(E(3), PeakSet(3, {3})) == -1);
  CHECK(moebius(PeakSet(7, {3, 5}), PeakSet(7, {3, 5})) == 1);
  CHECK(moebius(E(5), PeakSet(5, {4, 5})) == 1);
  CHECK(moebius_recursive_oracle(E(3), PeakSet(3, {3})) == -1);
  CHECK(moebius_recursive_oracle(E(5), PeakSet(5, {3, 5})) == 1);
  CHECK(moebius_recursive_oracle(PeakSet(6, {4}), PeakSet(6, {4})) == 1);
  CHECK_THROWS_AS(moebius(PeakSet(5, {3}), PeakSet(5, {4, 5})), DomainError);
  CHECK_THROWS_AS(moebius(E(5), PeakSet(5, {3, 4})), ValidityError);
  CHECK_THROWS_AS(moebius_recursive_oracle(PeakSet(5, {4}), PeakSet(5, {3, 5})), DomainError);
}

TEST_CASE("Moebius closed form equals the recursive definition", "[complex][property]") {
  for (int n = 3; n <= 10; ++n) {
    const auto all = all_faces(n);
    for (const auto& s : all) {
      for (const auto& t : all) {
        if (!s.is_subset_of(t)) continue;
        REQUIRE(moebius_recursive_oracle(s, t) == moebius(s, t));
      }
    }
  }
}

TEST_CASE("reduced Euler characteristic", "[complex]") {
  CHECK(euler_characteristic(5) == 0);
  CHECK(euler_characteristic(4) == 1);
  CHECK(euler_characteristic(6) == -2);
  for (int n = 3; n <= 40; ++n) {
    REQUIRE(euler_characteristic(n) == euler_characteristic_closed_form(n));
    if (n % 2 == 1) REQUIRE(euler_characteristic(n) == 0);
  }
}

TEST_CASE("product structure of P_{n+1}", "[complex]") {
  CHECK(verify_product_structure(3));
  CHECK(verify_product_structure(4));
  CHECK(verify_product_structure(5));
  for (int n = 6; n <= 13; ++n) REQUIRE(verify_product_structure(n));
  CHECK_THROWS_AS(verify_product_structure(14), ResourceLimitError);
}

TEST_CASE("face poset and covers", "[complex]") {
  const FacePoset p(5);
  REQUIRE(p.size() == 6);
  // faces: {}, {3}, {3,5}, {4}, {4,5}, {5}
  CHECK(p.less(0, 2));
  CHECK_FALSE(p.comparable(1, 3));
  CHECK(p.covers().size() == 7);
  CHECK_THROWS_AS(FacePoset(15), ResourceLimitError);
}
