#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vvmf {

using Integer = mpz_class;

/// Raised when an argument violates an operation's preconditions.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is undefined for the given value (zero inverse, bad exponent, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/*
 * Exact rational number, always in lowest terms with a positive denominator.
 * Zero is 0/1. Backed by GMP's mpq_t.
 */
class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    /// Parses "n", "n/d", with an optional leading '-' or U+2212 minus sign.
    static Rational parse(std::string_view text);

    const Integer& num() const { return value_.get_num(); }
    const Integer& den() const { return value_.get_den(); }
    const mpq_class& mpq() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "n/d", or "n" when d = 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
/// Largest integer <= r.
Integer floor(const Rational& r);
/// Integer power with possibly negative exponent; 0^negative throws DomainError.
Rational pow(const Rational& base, long exponent);

/// p-adic valuation: a finite integer, or +infinity for the value zero.
class Valuation {
public:
    static Valuation infinity() { return Valuation(); }
    static Valuation finite(long v) { return Valuation(v); }

    bool is_infinite() const { return !value_.has_value(); }
    /// Throws DomainError on infinity.
    long value() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
    friend Valuation operator+(const Valuation& a, const Valuation& b);

    std::string to_string() const;

private:
    Valuation() = default;
    explicit Valuation(long v) : value_(v) {}
    std::optional<long> value_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Exponent of the prime p in r. Throws ParameterError when p is not prime.
Valuation padic_valuation(const Rational& r, long p);
/// Exponent of the prime p in a nonzero integer (no primality check).
long padic_valuation_unchecked(const Integer& n, unsigned long p);

bool is_prime(const Integer& n);

/// Exact square root when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace vvmf
