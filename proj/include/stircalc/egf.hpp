#pragma once

#include <cstddef>

#include "stircalc/report.hpp"
#include "stircalc/series.hpp"
#include "stircalc/triangle.hpp"

namespace stircalc {

// [ln(1+x)]^k / k!; n![x^n] equals s(n,k). Powers are formed by iterated
// multiplication.
TruncatedSeries egf_stirling1(std::size_t k, std::size_t order);

// (e^x - 1)^k / k!; n![x^n] equals S(n,k).
TruncatedSeries egf_stirling2(std::size_t k, std::size_t order);

// exp(e^x - 1); n![x^n] equals the Bell number B_n. The irrational factor
// e^-1 of the textbook form e^-1 e^(e^x) is absorbed algebraically so that
// every coefficient stays rational.
TruncatedSeries egf_bell(std::size_t order);

// Compares n![x^n] of the matching EGF against the triangle entry for
// every 0 <= k <= n <= n_max; exact equality required.
VerificationReport check_egf_against_triangle(TriangleKind kind, std::size_t n_max);

} // namespace stircalc
