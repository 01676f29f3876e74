#include "stircalc/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "stircalc/errors.hpp"
#include "stircalc/parallel.hpp"

namespace stircalc {

namespace {

// Accumulating serial convolution; good locality, the reference kernel.
std::vector<ExactRational> conv_serial(const std::vector<ExactRational>& a,
                                       const std::vector<ExactRational>& b,
                                       std::size_t n) {
    std::vector<ExactRational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// Per-coefficient gather; each output index is independent, so the loop
// parallelizes without synchronization. Exact arithmetic makes the result
// bit-identical to the serial kernel whatever the schedule.
std::vector<ExactRational> conv_parallel(const std::vector<ExactRational>& a,
                                         const std::vector<ExactRational>& b,
                                         std::size_t n) {
    std::vector<ExactRational> c(n + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1) num_threads(parallel::max_threads())
#endif
    for (long k = 0; k <= static_cast<long>(n); ++k) {
        ExactRational sum;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(k); ++i)
            sum += a[i] * b[static_cast<std::size_t>(k) - i];
        c[static_cast<std::size_t>(k)] = std::move(sum);
    }
    return c;
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("a truncated series needs at least the constant term");
}

TruncatedSeries TruncatedSeries::constant(const ExactRational& value, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = ExactRational(1);
    return s;
}

const ExactRational& TruncatedSeries::coeff(std::size_t i) const {
    if (i >= coeffs_.size())
        throw std::out_of_range("series coefficient " + std::to_string(i) +
                                " beyond truncation order " + std::to_string(order()));
    return coeffs_[i];
}

ExactRational& TruncatedSeries::coeff(std::size_t i) {
    if (i >= coeffs_.size())
        throw std::out_of_range("series coefficient " + std::to_string(i) +
                                " beyond truncation order " + std::to_string(order()));
    return coeffs_[i];
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order > this->order())
        throw std::invalid_argument("cannot extend a series by truncation");
    return TruncatedSeries(std::vector<ExactRational>(coeffs_.begin(),
                                                      coeffs_.begin() + order + 1));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) r.coeff(i) = a.coeff(i) + b.coeff(i);
    return r;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) r.coeff(i) = a.coeff(i) - b.coeff(i);
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    if (parallel::use_parallel(n + 1))
        return TruncatedSeries(conv_parallel(a.coeffs(), b.coeffs(), n));
    return TruncatedSeries(conv_serial(a.coeffs(), b.coeffs(), n));
}

namespace reference {

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    return TruncatedSeries(conv_serial(a.coeffs(), b.coeffs(), n));
}

} // namespace reference

TruncatedSeries series_scale(const TruncatedSeries& a, const ExactRational& factor) {
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) r.coeff(i) = a.coeff(i) * factor;
    return r;
}

TruncatedSeries series_differentiate(const TruncatedSeries& a) {
    if (a.order() == 0)
        throw PrecisionError("cannot differentiate a series known only to order 0");
    TruncatedSeries r(a.order() - 1);
    for (std::size_t i = 0; i + 1 <= a.order(); ++i)
        r.coeff(i) = ExactRational(static_cast<long>(i + 1)) * a.coeff(i + 1);
    return r;
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (!inner.coeff(0).is_zero())
        throw std::domain_error(
            "series composition needs a vanishing inner constant term");
    const std::size_t n = std::min(outer.order(), inner.order());
    const TruncatedSeries in = inner.truncated(n);
    // Horner: outer coefficients past n cannot contribute below x^(n+1)
    // because the inner series has no constant term.
    TruncatedSeries acc = TruncatedSeries::constant(outer.coeff(n), n);
    for (std::size_t j = n; j-- > 0;) {
        acc = series_mul(acc, in);
        acc.coeff(0) += outer.coeff(j);
    }
    return acc;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("series exp needs a vanishing constant term");
    const std::size_t order = a.order();
    TruncatedSeries r(order);
    r.coeff(0) = ExactRational(1);
    for (std::size_t n = 1; n <= order; ++n) {
        ExactRational sum;
        for (std::size_t j = 1; j <= n; ++j)
            sum += ExactRational(static_cast<long>(j)) * a.coeff(j) * r.coeff(n - j);
        r.coeff(n) = sum * ExactRational(1, static_cast<long>(n));
    }
    return r;
}

TruncatedSeries series_log1p(const TruncatedSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("series log1p needs a vanishing constant term");
    const std::size_t order = a.order();
    // b' (1+a) = a'  =>  b_{m+1} = a_{m+1} - sum_{j=1..m} (m-j+1) a_j b_{m-j+1} / (m+1)
    TruncatedSeries b(order);
    for (std::size_t m = 0; m + 1 <= order; ++m) {
        ExactRational sum;
        for (std::size_t j = 1; j <= m; ++j)
            sum += ExactRational(static_cast<long>(m - j + 1)) * a.coeff(j) * b.coeff(m - j + 1);
        b.coeff(m + 1) = a.coeff(m + 1) - sum * ExactRational(1, static_cast<long>(m + 1));
    }
    return b;
}

TruncatedSeries series_pow_rational(const TruncatedSeries& a, const ExactRational& alpha) {
    if (!a.coeff(0).is_one())
        throw std::domain_error("series pow needs a constant term of exactly 1");
    TruncatedSeries shifted = a;
    shifted.coeff(0) -= ExactRational(1);
    return series_exp(series_scale(series_log1p(shifted), alpha));
}

ExactRational coefficient_times_factorial(const TruncatedSeries& a, std::size_t n) {
    return ExactRational(ExactInt::factorial(static_cast<unsigned long>(n))) * a.coeff(n);
}

TruncatedSeries exp_series(std::size_t order) { return series_exp(TruncatedSeries::identity(order)); }

TruncatedSeries expm1_series(std::size_t order) {
    TruncatedSeries r = exp_series(order);
    r.coeff(0) -= ExactRational(1);
    return r;
}

TruncatedSeries log1p_series(std::size_t order) {
    return series_log1p(TruncatedSeries::identity(order));
}

} // namespace stircalc
