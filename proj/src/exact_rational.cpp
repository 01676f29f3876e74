#include "stircalc/exact_rational.hpp"

#include <ostream>

#include "stircalc/errors.hpp"

namespace stircalc {

ExactRational::ExactRational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

ExactRational::ExactRational(const ExactInt& num, const ExactInt& den) {
    if (den.is_zero()) throw DivisionByZero();
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.z_);
    mpz_set(mpq_denref(q_), den.z_);
    mpq_canonicalize(q_);
}

ExactRational ExactRational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return ExactRational(ExactInt::from_decimal(text));
    const auto num_text = text.substr(0, slash);
    const auto den_text = text.substr(slash + 1);
    ExactInt num = ExactInt::from_decimal(num_text);
    ExactInt den;
    try {
        den = ExactInt::from_decimal(den_text);
    } catch (const ParseError&) {
        throw ParseError("invalid rational literal", std::string(text), 0);
    }
    return ExactRational(num, den);
}

ExactInt ExactRational::numerator() const {
    ExactInt r;
    mpz_set(r.z_, mpq_numref(q_));
    return r;
}

ExactInt ExactRational::denominator() const {
    ExactInt r;
    mpz_set(r.z_, mpq_denref(q_));
    return r;
}

bool ExactRational::is_canonical() const {
    if (mpz_sgn(mpq_denref(q_)) <= 0) return false;
    mpz_t g;
    mpz_init(g);
    mpz_gcd(g, mpq_numref(q_), mpq_denref(q_));
    const bool reduced = mpz_cmp_ui(g, 1) == 0;
    mpz_clear(g);
    return reduced;
}

std::string ExactRational::to_string() const {
    if (mpz_cmp_ui(mpq_denref(q_), 1) == 0) return numerator().to_string();
    return numerator().to_string() + "/" + denominator().to_string();
}

ExactRational ExactRational::reciprocal() const {
    if (is_zero()) throw DivisionByZero();
    ExactRational r;
    mpq_inv(r.q_, q_);
    return r;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    mpq_div(q_, q_, rhs.q_);
    return *this;
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.is_zero()) throw DivisionByZero();
    ExactRational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

ExactRational rat_div(const ExactRational& a, const ExactRational& b) {
    return a / b;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& v) {
    return os << v.to_string();
}

} // namespace stircalc
