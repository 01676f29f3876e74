#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stircalc/exact_rational.hpp"
#include "stircalc/report.hpp"
#include "stircalc/rewrite.hpp"
#include "stircalc/series.hpp"

namespace stircalc {

// A smooth test function given by its truncated expansion around the
// verification base point in the local coordinate u: t = u for the log
// case (base point t = 0), t = 1 + u for the exp case (base point t = 1).
// coeff(k) = f^(k)(base)/k!, so derivative extraction is coefficient
// reading.
struct TestFunction {
    std::string label;
    TruncatedSeries series;
};

// n-th derivative of f(ln x) at x = 1, computed from first principles by
// composing f's series with ln(1+u) and reading n![u^n] — no Stirling
// numbers involved. Throws PrecisionError when the series is too short.
ExactRational nth_derivative_log_case(const TestFunction& f, std::size_t n);

// The closed-formula side at x = 1: sum_{k=1..n} s(n,k) f^(k)(0).
ExactRational closed_formula_log_case(const TestFunction& f, std::size_t n);

// n-th derivative of f(e^x) at x = 0, by composing with e^x - 1.
ExactRational nth_derivative_exp_case(const TestFunction& f, std::size_t n);

// The closed-formula side at x = 0 (t = 1): sum_{k=1..n} S(n,k) f^(k)(1).
ExactRational closed_formula_exp_case(const TestFunction& f, std::size_t n);

// Compares the composition oracle to the closed formula for every corpus
// function and every 1 <= n <= n_max; exact equality required. Requires
// every corpus series order >= n_max (PrecisionError otherwise).
VerificationReport verify_identity(DerivativeCase kind,
                                   const std::vector<TestFunction>& corpus,
                                   std::size_t n_max);

// The stock corpus: polynomials of degree <= 6, the exponential series,
// binomial series (1+u)^alpha for alpha in {-2, -1/2, 1/3, 5}, and the
// geometric series 1/(1 - u/2), all expanded to the given order in the
// local coordinate.
std::vector<TestFunction> standard_corpus(std::size_t order);

// Checks that all three Bell routes agree for n <= n_max: n![x^n] of
// exp(e^x - 1), the triangle row sum, and the closed exp-case formula with
// every f^(k)(1) = 1.
VerificationReport check_bell_consistency(std::size_t n_max);

} // namespace stircalc
