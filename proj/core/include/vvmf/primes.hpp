#pragma once

#include "vvmf/rational.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vvmf {

inline constexpr std::uint64_t kDefaultSieveBound = 1'000'000;

struct PrimePower {
    std::uint64_t prime;
    long exponent;  // negative for denominator primes

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Strictly increasing primes with nonzero exponents.
class PrimeFactorization {
public:
    PrimeFactorization() = default;
    /// Sorts and merges; drops zero exponents.
    explicit PrimeFactorization(std::vector<PrimePower> factors);

    std::span<const PrimePower> factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }
    /// Exponent of p (0 when absent).
    long exponent(std::uint64_t p) const;

    /// prod p^e, exact.
    Rational value() const;
    /// "2^2 * 3^-2 * 5^-1" style rendering; "1" when empty.
    std::string to_string() const;

    friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;

private:
    std::vector<PrimePower> factors_;
};

/// Thrown when trial division up to the sieve bound leaves a composite-or-unknown cofactor.
class UnfactoredResidue : public std::runtime_error {
public:
    explicit UnfactoredResidue(Integer residue);
    const Integer& residue() const { return residue_; }

private:
    Integer residue_;
};

/*
 * Sieve of Eratosthenes up to a fixed bound. Immutable once built; safe to
 * share between threads.
 */
class PrimeTable {
public:
    explicit PrimeTable(std::uint64_t bound = kDefaultSieveBound);

    std::uint64_t bound() const { return bound_; }
    std::span<const std::uint64_t> primes() const { return primes_; }
    bool contains(std::uint64_t n) const;

    /// Factors |n| (n != 0) by trial division. A cofactor below bound^2 left
    /// after the sweep is prime; anything larger raises UnfactoredResidue.
    PrimeFactorization factor(const Integer& n) const;
    /// Trial division only; returns the factored part and the leftover cofactor (1 when complete).
    std::pair<PrimeFactorization, Integer> factor_partial(const Integer& n) const;

private:
    std::uint64_t bound_;
    std::vector<bool> composite_;
    std::vector<std::uint64_t> primes_;
};

/// Shared default-bound table, built on first use.
const PrimeTable& default_prime_table();

struct SignedFactorization {
    int sign;  // +1 or -1
    PrimeFactorization factors;

    friend bool operator==(const SignedFactorization&, const SignedFactorization&) = default;
};

/// Factors r != 0 with negative exponents for denominator primes.
SignedFactorization factor_rational(const Rational& r, const PrimeTable& table = default_prime_table());

/// Primes p <= bound with p = residue (mod modulus), ascending.
std::vector<std::uint64_t> primes_in_progression(long modulus, long residue, std::uint64_t bound);

}  // namespace vvmf
