#pragma once

#include "fixloc/rational.hpp"

#include <cstddef>
#include <vector>

namespace fixloc {

// Dense univariate polynomial, coefficients from degree 0 upward. The zero
// polynomial is the empty vector.
using Poly = std::vector<Rational>;

Poly trimmed(Poly p);
long degree(const Poly& p);  // -1 for the zero polynomial
Rational evaluate(const Poly& p, const Rational& z);
Poly operator*(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);
// Exact quotient a / b; b must divide a.
Poly poly_div_exact(const Poly& a, const Poly& b);

using Matrix = std::vector<std::vector<Rational>>;

// Fraction-free (Bareiss) elimination: rows are scaled to integer rows, the
// echelon form is built over Z, and kernel vectors are recovered by exact
// back substitution.
struct EchelonForm {
  std::vector<std::vector<Integer>> rows;  // first `rank` rows are pivot rows
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
};

EchelonForm bareiss_echelon(const Matrix& m, std::size_t cols);
std::size_t rank(const Matrix& m, std::size_t cols);
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m, std::size_t cols);

} // namespace fixloc
