#include "stircalc/basis.hpp"

#include <stdexcept>

#include "stircalc/triangle.hpp"

namespace stircalc {

PolyCoeffs falling_to_power(const PolyCoeffs& p) {
    if (p.basis != PolyBasis::FallingFactorial)
        throw std::invalid_argument("falling_to_power expects falling-factorial input");
    const std::size_t deg = p.coeffs.size() - 1;
    const Triangle t = build_triangle(TriangleKind::FirstKindSigned, deg);
    PolyCoeffs q{PolyBasis::Power, std::vector<ExactRational>(p.coeffs.size())};
    for (std::size_t k = 0; k <= deg; ++k) {
        ExactRational sum;
        for (std::size_t n = k; n <= deg; ++n)
            sum += p.coeffs[n] * ExactRational(t.at(n, k));
        q.coeffs[k] = std::move(sum);
    }
    return q;
}

PolyCoeffs power_to_falling(const PolyCoeffs& p) {
    if (p.basis != PolyBasis::Power)
        throw std::invalid_argument("power_to_falling expects power-basis input");
    const std::size_t deg = p.coeffs.size() - 1;
    const Triangle t = build_triangle(TriangleKind::SecondKind, deg);
    PolyCoeffs q{PolyBasis::FallingFactorial, std::vector<ExactRational>(p.coeffs.size())};
    for (std::size_t k = 0; k <= deg; ++k) {
        ExactRational sum;
        for (std::size_t n = k; n <= deg; ++n)
            sum += p.coeffs[n] * ExactRational(t.at(n, k));
        q.coeffs[k] = std::move(sum);
    }
    return q;
}

ExactRational eval_falling_factorial(const ExactRational& alpha, std::size_t n) {
    ExactRational product(1);
    for (std::size_t i = 0; i < n; ++i)
        product *= alpha - ExactRational(static_cast<long>(i));
    return product;
}

ExactRational eval_poly(const PolyCoeffs& p, const ExactRational& alpha) {
    if (p.basis == PolyBasis::Power) {
        ExactRational acc = p.coeffs.back();
        for (std::size_t k = p.coeffs.size() - 1; k-- > 0;) acc = acc * alpha + p.coeffs[k];
        return acc;
    }
    // Falling-factorial basis: extend the factor product one degree at a time.
    ExactRational sum = p.coeffs[0];
    ExactRational product(1);
    for (std::size_t n = 1; n < p.coeffs.size(); ++n) {
        product *= alpha - ExactRational(static_cast<long>(n - 1));
        sum += p.coeffs[n] * product;
    }
    return sum;
}

VerificationReport check_matrix_inverse(std::size_t n_max) {
    const Triangle s = build_triangle(TriangleKind::FirstKindSigned, n_max);
    const Triangle S = build_triangle(TriangleKind::SecondKind, n_max);
    VerificationReport report;
    report.suite = "inverse";
    report.n_max = n_max;
    report.entries.reserve(2 * (n_max + 1) * (n_max + 1));
    for (int direction = 0; direction < 2; ++direction) {
        const Triangle& left = direction == 0 ? s : S;
        const Triangle& right = direction == 0 ? S : s;
        const char* name = direction == 0 ? "s*S m=" : "S*s m=";
        for (std::size_t n = 0; n <= n_max; ++n) {
            for (std::size_t m = 0; m <= n_max; ++m) {
                ExactInt sum;
                for (std::size_t j = m; j <= n; ++j) sum += left.entry(n, j) * right.entry(j, m);
                const ExactInt expected(n == m ? 1L : 0L);
                CheckEntry e;
                e.item = name + std::to_string(m);
                e.n = n;
                e.ok = sum == expected;
                if (!e.ok) {
                    e.lhs = sum.to_string();
                    e.rhs = expected.to_string();
                }
                report.entries.push_back(std::move(e));
            }
        }
    }
    return report;
}

} // namespace stircalc
