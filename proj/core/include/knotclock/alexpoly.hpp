#pragma once

// Alexander polynomial via the crossing-by-region incidence matrix, used as
// an independent oracle: the determinant of the star-deleted matrix is the
// Alexander polynomial up to a +-t^k unit, and the number of nonzero terms
// in its permutation expansion equals the number of states for the same
// star placement.

#include <cstdint>
#include <string>
#include <vector>

#include "knotclock/diagram.hpp"

namespace knotclock {

// Dense integer polynomial in one variable t.  Trailing/leading zero
// coefficients are trimmed; the zero polynomial has an empty coefficient
// list.  Coefficients stay far below 64-bit limits at this problem scale.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long long constant);  // NOLINT: implicit for matrix literals
  // coeffs[i] multiplies t^(low+i).
  IntPolynomial(std::vector<long long> coeffs, int low);

  static IntPolynomial monomial(long long coeff, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int low_degree() const { return low_; }
  int degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  long long coeff(int degree) const;
  const std::vector<long long>& coeffs() const { return coeffs_; }

  IntPolynomial operator-() const;
  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  // Exact division; a nonzero remainder throws InvariantViolation.
  IntPolynomial operator/(const IntPolynomial& o) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Unit-normal form: lowest degree 0, positive leading coefficient.
  IntPolynomial normalized() const;
  // True when the two agree up to multiplication by +-t^k.
  bool equals_up_to_unit(const IntPolynomial& o) const;

  long long evaluate(long long t) const;
  std::string to_string() const;  // e.g. "t^2 - t + 1"

 private:
  void trim();
  std::vector<long long> coeffs_;
  int low_ = 0;
};

using PolyMatrix = std::vector<std::vector<IntPolynomial>>;

// Star-deleted crossing-by-region matrix, V x V.  Row v holds the four
// corner labels of crossing v before deletion, read off the over strand's
// passage: the corner on its right before the crossing gets -t and after
// it t, the corner on its left before gets 1 and after -1.  Requires
// over/under data at every crossing.
PolyMatrix region_matrix(const Diagram& d, StarPlacement stars);

// Fraction-free exact determinant (Bareiss).
IntPolynomial poly_determinant(const PolyMatrix& m);

// normalized() determinant of region_matrix.  Throws std::invalid_argument
// when over/under data is missing or the determinant vanishes.
IntPolynomial alexander_det(const Diagram& d, StarPlacement stars);

// Number of permutations with all-nonzero support in the star-deleted
// matrix.  Needs no over/under data: the support is the corner-face
// incidence.  Equals the state count for the same stars.
long long permutation_term_count(const Universe& u, StarPlacement stars);

}  // namespace knotclock
