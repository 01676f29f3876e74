#pragma once

#include <cstddef>
#include <map>

#include "stircalc/exact_int.hpp"
#include "stircalc/report.hpp"
#include "stircalc/triangle.hpp"

namespace stircalc {

enum class DerivativeCase { LogCase, ExpCase };

// The n-th derivative of f(ln x) or f(e^x) as a linear combination of the
// abstract symbols f^(k)(t): terms maps k to its exact integer coefficient.
// The structural factor (1/x^n in the log case, t^k in the exp case) is
// carried positionally by n and k, which the differentiation rules preserve.
// Invariants: keys satisfy 1 <= k <= n for n >= 1; zeros are never stored.
struct SymbolicDerivative {
    DerivativeCase kind = DerivativeCase::LogCase;
    std::size_t n = 0;
    std::map<std::size_t, ExactInt> terms;

    // n = 0 state: the bare symbol f(t), i.e. {0: 1}.
    static SymbolicDerivative base(DerivativeCase kind);
};

// One application of the differentiation rule:
//   log case:  [f^(k)(t)/x^n]'  = (-n f^(k)(t) + f^(k+1)(t)) / x^(n+1)
//   exp case:  [t^k f^(k)(t)]'  = k t^k f^(k)(t) + t^(k+1) f^(k+1)(t)
SymbolicDerivative rewrite_step(const SymbolicDerivative& d);

// Iterates rewrite_step from the n = 0 base and collects the coefficient
// maps into a triangle; re-derives the recurrence tables from the
// derivative rules alone. Throws RowCapExceeded past the row cap.
Triangle derive_triangle_by_rewriting(TriangleKind kind, std::size_t n_max);

// Row-by-row comparison of derive_triangle_by_rewriting against
// build_triangle for both kinds, n <= n_max.
VerificationReport check_rewrite_equivalence(std::size_t n_max);

} // namespace stircalc
