#pragma once

#include <cstddef>
#include <vector>

#include "stircalc/exact_rational.hpp"

namespace stircalc {

// Formal power series known modulo x^(order+1). coeffs().size() is exactly
// order()+1; binary operations truncate to the smaller operand order, and
// differentiation loses one order. Precision never silently inflates.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order)
        : coeffs_(order + 1) {}
    explicit TruncatedSeries(std::vector<ExactRational> coeffs);

    static TruncatedSeries constant(const ExactRational& value, std::size_t order);
    // The series x.
    static TruncatedSeries identity(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<ExactRational>& coeffs() const { return coeffs_; }

    // Bounds-checked coefficient access; throws std::out_of_range past the
    // truncation order.
    const ExactRational& coeff(std::size_t i) const;
    ExactRational& coeff(std::size_t i);

    TruncatedSeries truncated(std::size_t order) const; // requires order <= order()

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<ExactRational> coeffs_;
};

// Coefficient-wise sum/difference at the common order.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);

// Truncated Cauchy product at the common order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries series_scale(const TruncatedSeries& a, const ExactRational& factor);

// Formal d/dx; the result order is one less. Throws PrecisionError at
// order 0.
TruncatedSeries series_differentiate(const TruncatedSeries& a);

// outer(inner(x)) by Horner's scheme in the truncated ring. Requires a
// vanishing inner constant term (std::domain_error otherwise); the result
// order is the smaller operand order.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// exp(a) for a with zero constant term, via c_0 = 1,
// c_n = (1/n) * sum_{j=1..n} j a_j c_{n-j}.
TruncatedSeries series_exp(const TruncatedSeries& a);

// log(1+a) for a with zero constant term, by integrating b'(1+a) = a'.
TruncatedSeries series_log1p(const TruncatedSeries& a);

// a^alpha = exp(alpha * log(a)) for a with constant term exactly 1.
TruncatedSeries series_pow_rational(const TruncatedSeries& a, const ExactRational& alpha);

// n! * [x^n] a; throws std::out_of_range when n exceeds the order.
ExactRational coefficient_times_factorial(const TruncatedSeries& a, std::size_t n);

// Stock generators.
TruncatedSeries exp_series(std::size_t order);   // e^x
TruncatedSeries expm1_series(std::size_t order); // e^x - 1
TruncatedSeries log1p_series(std::size_t order); // ln(1+x)

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_mul(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const ExactRational& c) {
    return series_scale(a, c);
}
inline TruncatedSeries operator*(const ExactRational& c, const TruncatedSeries& a) {
    return series_scale(a, c);
}

namespace reference {
// Plain serial convolution, kept as the baseline for the OpenMP kernel.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
} // namespace reference

} // namespace stircalc
