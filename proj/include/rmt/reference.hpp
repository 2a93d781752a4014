#pragma once

#include <cstdint>

#include "rmt/measure.hpp"
#include "rmt/rational.hpp"

namespace rmt {

// Catalan number C_j = binom(2j, j)/(j+1), exact.
std::int64_t catalan(int j);

// m-th moment of the semicircle density (2/pi) sqrt(1-x^2) on [-1,1]:
// 0 for odd m, Catalan(m/2)/2^m for even m.
Rational semicircle_moment(int m);

// m-th moment of the standard Gaussian: 0 for odd m, (m-1)!! for even m.
Rational gaussian_moment(int m);

double semicircle_cdf(double x);
double normal_cdf(double x);

// n-node Gauss quadrature for the semicircle weight (Chebyshev second kind;
// closed-form nodes and weights). Exact for polynomials of degree <= 2n-1.
EmpiricalMeasure semicircle_quadrature(int n);

// k-node Gauss-Hermite quadrature for the standard Gaussian weight
// (probabilists' convention), via the Jacobi matrix. Matches Gaussian
// moments up to order 2k-1.
EmpiricalMeasure gauss_hermite_measure(int k);

}  // namespace rmt
