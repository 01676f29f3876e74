#pragma once

#include <gmp.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "stircalc/exact_int.hpp"

namespace stircalc {

// Exact rational scalar. Invariants: always reduced (gcd(|num|, den) = 1),
// denominator >= 1, zero is 0/1. Every operation returns a value that
// satisfies the invariants; reduction happens eagerly.
class ExactRational {
public:
    ExactRational() { mpq_init(q_); } // 0/1
    ExactRational(long value) {       // NOLINT: implicit by design
        mpq_init(q_);
        mpq_set_si(q_, value, 1);
    }
    ExactRational(const ExactInt& value) { // NOLINT: implicit by design
        mpq_init(q_);
        mpq_set_z(q_, value.z_);
    }
    ExactRational(long num, long den);
    ExactRational(const ExactInt& num, const ExactInt& den);

    ExactRational(const ExactRational& other) {
        mpq_init(q_);
        mpq_set(q_, other.q_);
    }
    ExactRational(ExactRational&& other) noexcept {
        mpq_init(q_);
        mpq_swap(q_, other.q_);
    }
    ExactRational& operator=(const ExactRational& other) {
        if (this != &other) mpq_set(q_, other.q_);
        return *this;
    }
    ExactRational& operator=(ExactRational&& other) noexcept {
        mpq_swap(q_, other.q_);
        return *this;
    }
    ~ExactRational() { mpq_clear(q_); }

    // Parses "p" or "p/q" with optional '-' signs. Throws ParseError on
    // malformed text, DivisionByZero on a zero denominator.
    static ExactRational from_string(std::string_view text);

    ExactInt numerator() const;
    ExactInt denominator() const;

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }

    // Re-checks the reduced-form invariant from scratch; used by tests as a
    // validator on operation outputs.
    bool is_canonical() const;

    // "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;

    ExactRational operator-() const {
        ExactRational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    ExactRational reciprocal() const;

    ExactRational& operator+=(const ExactRational& rhs) {
        mpq_add(q_, q_, rhs.q_);
        return *this;
    }
    ExactRational& operator-=(const ExactRational& rhs) {
        mpq_sub(q_, q_, rhs.q_);
        return *this;
    }
    ExactRational& operator*=(const ExactRational& rhs) {
        mpq_mul(q_, q_, rhs.q_);
        return *this;
    }
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
        ExactRational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
        ExactRational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
        ExactRational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = mpq_cmp(a.q_, b.q_);
        return c <=> 0;
    }

private:
    mpq_t q_;
};

// Named forms of the scalar operations; aliases of the operators.
inline ExactRational rat_add(const ExactRational& a, const ExactRational& b) { return a + b; }
inline ExactRational rat_mul(const ExactRational& a, const ExactRational& b) { return a * b; }
ExactRational rat_div(const ExactRational& a, const ExactRational& b); // throws DivisionByZero

std::ostream& operator<<(std::ostream& os, const ExactRational& v);

} // namespace stircalc
