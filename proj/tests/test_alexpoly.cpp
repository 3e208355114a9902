#include <doctest.h>

#include <random>

#include "knotclock/alexpoly.hpp"
#include "knotclock/state.hpp"

using namespace knotclock;

namespace {

const char* kTrefoilOver = "X(1,3,6,4);over=6 X(5,1,4,2);over=4 X(3,5,2,6);over=2";

// Reference determinant by cofactor expansion along the first row.
IntPolynomial cofactor_det(const PolyMatrix& m) {
  const size_t n = m.size();
  if (n == 0) return IntPolynomial(1);
  if (n == 1) return m[0][0];
  IntPolynomial acc;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<IntPolynomial> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    IntPolynomial term = m[0][j] * cofactor_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  IntPolynomial p({1, -1, 1}, 0);  // 1 - t + t^2
  CHECK(p.degree() == 2);
  CHECK(p.low_degree() == 0);
  CHECK(p.coeff(1) == -1);
  CHECK(p.coeff(7) == 0);
  CHECK(p.to_string() == "t^2 - t + 1");
  CHECK(p.evaluate(2) == 3);
  CHECK(p.evaluate(-1) == 3);

  CHECK((p + (-p)).is_zero());
  CHECK(IntPolynomial(0).is_zero());
  CHECK(IntPolynomial().to_string() == "0");
  CHECK(IntPolynomial::monomial(-3, 2).to_string() == "-3t^2");
  CHECK((p - p).is_zero());

  IntPolynomial t = IntPolynomial::monomial(1, 1);
  CHECK((t * t - IntPolynomial(1)).to_string() == "t^2 - 1");
  CHECK(((t * t - 1) / (t + 1)) == t - 1);
  CHECK_THROWS_AS((t * t + 1) / (t + 1), InvariantViolation);
  CHECK_THROWS_AS(p / IntPolynomial(), InvariantViolation);
  CHECK_THROWS_AS(IntPolynomial(1) / t, InvariantViolation);

  // Trimming normalizes the representation.
  CHECK(IntPolynomial({0, 1, 0}, 0) == IntPolynomial::monomial(1, 1));
  CHECK(IntPolynomial({0, 0}, 3).is_zero());
}

TEST_CASE("unit normalization") {
  IntPolynomial p({1, 0, -1}, 1);  // t - t^3
  CHECK(p.normalized().to_string() == "t^2 - 1");
  CHECK(p.equals_up_to_unit(IntPolynomial({-1, 0, 1}, 5)));
  CHECK(!p.equals_up_to_unit(IntPolynomial({1, 0, 1}, 0)));
  CHECK(IntPolynomial().normalized().is_zero());
}

TEST_CASE("bareiss determinant agrees with cofactor expansion") {
  std::mt19937 rng(20260816);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    PolyMatrix m(n, std::vector<IntPolynomial>(n));
    for (auto& row : m)
      for (auto& cell : row) {
        std::vector<long long> c(deg(rng) + 1);
        for (auto& x : c) x = coeff(rng);
        cell = IntPolynomial(c, 0);
      }
    CHECK(poly_determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("determinant handles pivots and singularity") {
  IntPolynomial t = IntPolynomial::monomial(1, 1);
  PolyMatrix swap{{IntPolynomial(), IntPolynomial(1)},
                  {IntPolynomial(1), IntPolynomial()}};
  CHECK(poly_determinant(swap) == IntPolynomial(-1));

  PolyMatrix singular{{t, t}, {t, t}};
  CHECK(poly_determinant(singular).is_zero());

  PolyMatrix empty;
  CHECK(poly_determinant(empty) == IntPolynomial(1));

  PolyMatrix ragged{{t, t}};
  CHECK_THROWS_AS(poly_determinant(ragged), std::invalid_argument);
}

TEST_CASE("trefoil region matrix and determinant") {
  Diagram d = parse_diagram(kTrefoilOver);
  PolyMatrix m = region_matrix(d, {0, 1});
  REQUIRE(m.size() == 3);
  REQUIRE(m[0].size() == 3);
  // Columns follow face ids 2,3,4.  Every trefoil crossing has the over
  // strand arriving at slot 2, so the weights land at corners 3..2 as
  // t, -1, 1, -t.
  CHECK(m[0][0] == IntPolynomial::monomial(-1, 1));
  CHECK(m[0][1] == IntPolynomial::monomial(1, 1));
  CHECK(m[0][2].is_zero());
  CHECK(m[1][1] == IntPolynomial(1));
  CHECK(m[1][2] == IntPolynomial::monomial(1, 1));
  CHECK(m[2][2] == IntPolynomial(1));

  IntPolynomial alex = alexander_det(d, {0, 1});
  CHECK(alex == IntPolynomial({1, -1, 1}, 0));
  CHECK(alex.evaluate(1) == 1);

  // Star invariance: every adjacent placement gives the same normal form.
  for (auto [i, j] : d.universe.adjacent_face_pairs())
    CHECK(alexander_det(d, {i, j}) == alex);
}

TEST_CASE("curl has unit determinant") {
  Diagram d = parse_diagram("X(1,1,2,2);over=1");
  CHECK(alexander_det(d, {0, 1}) == IntPolynomial(1));
  CHECK(alexander_det(d, {1, 2}) == IntPolynomial(1));
}

TEST_CASE("region matrix requires over data") {
  Diagram d = parse_diagram("X(1,3,6,4) X(5,1,4,2) X(3,5,2,6)");
  CHECK_THROWS_AS(region_matrix(d, {0, 1}), std::invalid_argument);
}

TEST_CASE("permutation terms count the states") {
  Diagram d = parse_diagram(kTrefoilOver);
  const Universe& u = d.universe;
  for (auto [i, j] : u.adjacent_face_pairs()) {
    long long terms = permutation_term_count(u, {i, j});
    CHECK(terms == 3);
    CHECK(terms == static_cast<long long>(enumerate_states(u, {i, j}).size()));
  }
}
