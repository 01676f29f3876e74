#pragma once

#include <gmp.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace stircalc {

// Arbitrary-precision signed integer (sign-and-magnitude, GMP-backed).
// Closed under +, -, *; a value is never mutated through a const reference,
// so instances can be shared freely between threads.
class ExactInt {
public:
    ExactInt() { mpz_init(z_); }
    ExactInt(long value) { mpz_init_set_si(z_, value); } // NOLINT: implicit by design
    ExactInt(const ExactInt& other) { mpz_init_set(z_, other.z_); }
    ExactInt(ExactInt&& other) noexcept {
        mpz_init(z_);
        mpz_swap(z_, other.z_);
    }
    ExactInt& operator=(const ExactInt& other) {
        if (this != &other) mpz_set(z_, other.z_);
        return *this;
    }
    ExactInt& operator=(ExactInt&& other) noexcept {
        mpz_swap(z_, other.z_);
        return *this;
    }
    ~ExactInt() { mpz_clear(z_); }

    // Parses an optionally '-'-signed decimal string. Throws ParseError.
    static ExactInt from_decimal(std::string_view text);

    static ExactInt factorial(unsigned long n);

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }

    ExactInt abs() const;
    ExactInt pow(unsigned long exponent) const;

    std::string to_string() const;

    ExactInt operator-() const;

    ExactInt& operator+=(const ExactInt& rhs) {
        mpz_add(z_, z_, rhs.z_);
        return *this;
    }
    ExactInt& operator-=(const ExactInt& rhs) {
        mpz_sub(z_, z_, rhs.z_);
        return *this;
    }
    ExactInt& operator*=(const ExactInt& rhs) {
        mpz_mul(z_, z_, rhs.z_);
        return *this;
    }

    friend ExactInt operator+(const ExactInt& a, const ExactInt& b) {
        ExactInt r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend ExactInt operator-(const ExactInt& a, const ExactInt& b) {
        ExactInt r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend ExactInt operator*(const ExactInt& a, const ExactInt& b) {
        ExactInt r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }

    friend bool operator==(const ExactInt& a, const ExactInt& b) {
        return mpz_cmp(a.z_, b.z_) == 0;
    }
    friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
        const int c = mpz_cmp(a.z_, b.z_);
        return c <=> 0;
    }

private:
    mpz_t z_;

    friend class ExactRational;
};

std::ostream& operator<<(std::ostream& os, const ExactInt& v);

} // namespace stircalc
