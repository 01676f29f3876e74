#pragma once

#include <cstddef>
#include <vector>

#include "stircalc/exact_int.hpp"
#include "stircalc/exact_rational.hpp"

namespace stircalc {

enum class TriangleKind { FirstKindSigned, SecondKind };

// Lower-triangular table rows[n][k], 0 <= k <= n <= n_max, holding s(n,k)
// or S(n,k). Immutable once built.
class Triangle {
public:
    Triangle(TriangleKind kind, std::vector<std::vector<ExactInt>> rows);

    TriangleKind kind() const { return kind_; }
    std::size_t n_max() const { return rows_.size() - 1; }

    // Requires k <= n <= n_max.
    const ExactInt& at(std::size_t n, std::size_t k) const { return rows_[n][k]; }

    // Out-of-triangle indices map to 0 (k > n or column 0 past row 0 are
    // stored anyway; n > n_max is answered without error).
    ExactInt entry(std::size_t n, std::size_t k) const;

    const std::vector<std::vector<ExactInt>>& rows() const { return rows_; }

private:
    TriangleKind kind_;
    std::vector<std::vector<ExactInt>> rows_;
};

inline constexpr std::size_t kDefaultRowCap = 10000;

// Global bound on triangle materialization, enforced by build_triangle and
// the memo cache behind the single-entry queries.
std::size_t row_cap();
void set_row_cap(std::size_t cap);

// Builds rows 0..n_max by the two-term recurrences
//   s(n+1,k) = s(n,k-1) - n*s(n,k)      (first kind, signed)
//   S(n+1,k) = S(n,k-1) + k*S(n,k)      (second kind)
// from s(0,0) = S(0,0) = 1. Throws RowCapExceeded past the row cap.
Triangle build_triangle(TriangleKind kind, std::size_t n_max);

namespace reference {
// Serial row fill, kept as the baseline for the OpenMP kernel.
Triangle build_triangle(TriangleKind kind, std::size_t n_max);
} // namespace reference

// Single-entry queries; memoized via a shared per-kind cache that grows
// monotonically and never recomputes existing rows. Indices outside the
// triangle return 0.
ExactInt stirling1_signed(std::size_t n, std::size_t k);
ExactInt stirling1_unsigned(std::size_t n, std::size_t k);
ExactInt stirling2(std::size_t n, std::size_t k);

// Sum over k of S(n,k).
ExactInt bell_number(std::size_t n);

// B_n(x) = sum_k S(n,k) x^k.
struct BellPolynomial {
    std::size_t degree = 0;       // n
    std::vector<ExactInt> coeffs; // coeffs[k] = S(n,k), k = 0..n

    ExactRational eval(const ExactRational& x) const;
};

BellPolynomial bell_polynomial(std::size_t n);

} // namespace stircalc
