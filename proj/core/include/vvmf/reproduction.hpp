#pragma once

#include "vvmf/mlde.hpp"
#include "vvmf/primes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vvmf {

/*
 * Denominator claims for the exponent pair (3/10, 2/10):
 *
 *   coefficient 1000:  3^2 * 13 * prod { p = 9 mod 10, p <= 10000 }
 *   coefficient 1001:  3        * prod { p = 9 mod 10, p <= 10009 }
 *   coefficient 1002:  13       * prod { p = 9 mod 10, p <= 10009, p != 919 }
 *
 * "Coefficient k" is ambiguous about where counting starts and which
 * component is meant, so every (component, offset) pair is tried. Offset 0
 * reads coefficient k as index k, offset 1 as index k - 1.
 *
 * The claims are stated for some rescaling of the solution, so besides the
 * strict comparison on the leading-coefficient-1 normalization a single
 * rational constant c is solved for, prime by prime, such that c times the
 * three coefficients has exactly the claimed denominators.
 */
struct DenominatorClaim {
    long label;  // 1000, 1001, 1002
    PrimeFactorization denominator;
    std::string text;
};

std::vector<DenominatorClaim> published_claims();

struct ClaimComparison {
    long label;
    long index;
    PrimeFactorization observed;
    PrimeFactorization expected;
    /// expected / observed, as a signed factorization (empty iff exact).
    PrimeFactorization discrepancy;
    bool exact;
};

struct ClaimAssignment {
    Component component;
    long offset;
    std::vector<ClaimComparison> strict;
    bool strict_match;
    /// Present when a single constant reconciles all three claims.
    std::optional<PrimeFactorization> rescaling;
    std::vector<ClaimComparison> rescaled;
    bool rescaled_match;
};

struct ReproductionReport {
    MLDEParams params;
    long order;
    std::vector<ClaimAssignment> assignments;
    /// Index into `assignments` of the chosen match (strict preferred).
    std::optional<std::size_t> chosen;
    bool pass() const { return chosen.has_value(); }
};

/// Computes both components for (3/10, 2/10) by the Frobenius recursion and checks the claims.
ReproductionReport reproduce_published(const PrimeTable& table = default_prime_table(), const SolveOptions& progress = {},
                                      long order = 1002);

/// Checks the claims against already computed components.
ReproductionReport check_published_claims(const MLDEParams& params, const QExpansion& f1, const QExpansion& f2,
                                         const PrimeTable& table = default_prime_table());

/*
 * Per-prime exponents of a constant c with den(c * coeffs[i]) = claims[i]
 * for every i, or nullopt when the claims are inconsistent. Among valid
 * constants the one with the smallest exponents is returned.
 */
std::optional<PrimeFactorization> solve_rescaling(const std::vector<Rational>& coeffs,
                                                  const std::vector<PrimeFactorization>& claims,
                                                  const PrimeTable& table = default_prime_table());

}  // namespace vvmf
