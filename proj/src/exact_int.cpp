#include "stircalc/exact_int.hpp"

#include <ostream>

#include "stircalc/errors.hpp"

namespace stircalc {

namespace {

bool valid_decimal(std::string_view text) {
    if (text.empty()) return false;
    std::size_t i = text.front() == '-' ? 1 : 0;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') return false;
    return true;
}

} // namespace

ExactInt ExactInt::from_decimal(std::string_view text) {
    if (!valid_decimal(text))
        throw ParseError("invalid integer literal", std::string(text), 0);
    ExactInt r;
    mpz_set_str(r.z_, std::string(text).c_str(), 10);
    return r;
}

ExactInt ExactInt::factorial(unsigned long n) {
    ExactInt r;
    mpz_fac_ui(r.z_, n);
    return r;
}

ExactInt ExactInt::abs() const {
    ExactInt r;
    mpz_abs(r.z_, z_);
    return r;
}

ExactInt ExactInt::pow(unsigned long exponent) const {
    ExactInt r;
    mpz_pow_ui(r.z_, z_, exponent);
    return r;
}

ExactInt ExactInt::operator-() const {
    ExactInt r;
    mpz_neg(r.z_, z_);
    return r;
}

std::string ExactInt::to_string() const {
    // mpz_sizeinbase may overestimate by one digit; the buffer also needs
    // room for '-' and the terminator.
    std::string buf(mpz_sizeinbase(z_, 10) + 2, '\0');
    mpz_get_str(buf.data(), 10, z_);
    buf.resize(buf.find('\0'));
    return buf;
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) {
    return os << v.to_string();
}

} // namespace stircalc
