#pragma once

#include <cstddef>
#include <vector>

#include "stircalc/exact_rational.hpp"
#include "stircalc/report.hpp"

namespace stircalc {

enum class PolyBasis { Power, FallingFactorial };

// Dense polynomial, index = degree, length >= 1. The zero polynomial's
// normal form is the single coefficient [0]; conversions preserve length.
struct PolyCoeffs {
    PolyBasis basis = PolyBasis::Power;
    std::vector<ExactRational> coeffs = {ExactRational()};
};

// Rewrites sum_n p[n] * x(x-1)...(x-n+1) in the power basis using rows of
// the signed first-kind triangle. Requires p.basis == FallingFactorial.
PolyCoeffs falling_to_power(const PolyCoeffs& p);

// Rewrites sum_n p[n] * x^n in the falling-factorial basis using rows of
// the second-kind triangle. Requires p.basis == Power.
PolyCoeffs power_to_falling(const PolyCoeffs& p);

// alpha(alpha-1)...(alpha-n+1); the empty product (n = 0) is 1.
ExactRational eval_falling_factorial(const ExactRational& alpha, std::size_t n);

// Exact evaluation in the polynomial's own basis.
ExactRational eval_poly(const PolyCoeffs& p, const ExactRational& alpha);

// Checks sum_j s(n,j)S(j,m) = delta(n,m) and sum_j S(n,j)s(j,m) = delta(n,m)
// for all 0 <= n,m <= n_max.
VerificationReport check_matrix_inverse(std::size_t n_max);

} // namespace stircalc
