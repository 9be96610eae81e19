#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace uknap {

/**
 * Exact arbitrary-precision rational number.
 *
 * Values are always held in canonical form: the denominator is strictly
 * positive and coprime to the numerator. Every comparison and every
 * arithmetic operation is exact; there is intentionally no construction
 * from floating point.
 *
 * The serialized form is "num/den" with the "/den" part omitted for
 * integers, e.g. "4/3", "-1/2", "7".
 */
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {} // NOLINT: implicit by design, mirrors integer literals
    Rational(int v) : q_(v) {}  // NOLINT

    /// num/den, canonicalized. Throws PreconditionError when den == 0.
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den);

    explicit Rational(const mpz_class& v) : q_(v) {}

    /// Parses the canonical string form. Throws FormatError on malformed input.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Largest integer <= *this.
    mpz_class floor() const;

    Rational abs() const;

    std::string str() const;

    /// Nearest double, for display only.
    double to_double() const { return q_.get_d(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_, raw_tag{}); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_, raw_tag{}); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_, raw_tag{}); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(-a.q_, raw_tag{}); }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

private:
    // GMP keeps results of rational arithmetic canonical as long as the
    // operands are; raw_tag skips the redundant re-canonicalization.
    struct raw_tag {};
    Rational(mpq_class q, raw_tag) : q_(std::move(q)) {}

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/**
 * Exact test of a < phi * b for positive rationals, where phi is the golden
 * ratio. Decided entirely over integers via the equivalent condition
 * a^2 < a*b + b^2; phi itself is never materialized.
 *
 * Throws PreconditionError unless a > 0 and b > 0.
 */
bool lt_phi_times(const Rational& a, const Rational& b);

} // namespace uknap
