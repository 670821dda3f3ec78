#pragma once

#include "vvmf/mlde.hpp"
#include "vvmf/primes.hpp"
#include "vvmf/verdict.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vvmf {

struct ProgressionHit {
    std::uint64_t prime;
    long valuation;

    friend bool operator==(const ProgressionHit&, const ProgressionHit&) = default;
};

struct IndexDenominator {
    long n = 0;
    /// Positive exponents; empty for integral coefficients.
    PrimeFactorization denominator;
    /// Denominator primes lying in one of the requested residue classes.
    std::vector<ProgressionHit> progression_hits;
    /// Set when trial division could not finish; the factorization is then partial.
    std::optional<Integer> unfactored_residue;

    friend bool operator==(const IndexDenominator&, const IndexDenominator&) = default;
};

struct FirstOccurrence {
    long index;
    long valuation;

    friend bool operator==(const FirstOccurrence&, const FirstOccurrence&) = default;
};

struct LcmCheckpoint {
    long n;
    PrimeFactorization lcm;

    friend bool operator==(const LcmCheckpoint&, const LcmCheckpoint&) = default;
};

/*
 * Denominator structure of one q-expansion. Index n always means the
 * coefficient of q^(h + n), the leading term being index 0.
 *
 * Invariants: each prime in first_occurrence divides the denominator at its
 * index and at no smaller index; lcm_prefix is non-decreasing under
 * divisibility.
 */
struct DenominatorReport {
    std::optional<MLDEParams> params;
    std::optional<Component> component;
    long order = 0;
    long modulus = 1;
    std::vector<long> residues;
    std::vector<IndexDenominator> per_index;
    std::map<std::uint64_t, FirstOccurrence> first_occurrence;
    std::vector<LcmCheckpoint> lcm_prefix;

    friend bool operator==(const DenominatorReport&, const DenominatorReport&) = default;
};

struct AnalyzeOptions {
    const PrimeTable* table = nullptr;  // default_prime_table() when null
    long checkpoint_stride = 1;
};

DenominatorReport analyze(const QExpansion& series, long modulus, const std::vector<long>& residues,
                          const AnalyzeOptions& options = {});

/*
 * Certificate for the unbounded branch when Q >= 6. For m1 > m2 every prime
 * p = Qn + P must first enter the denominators of f1 at index n with
 * valuation exactly -1; for m1 < m2 the same holds for p = Qn - P on f2.
 * Cases whose index lies beyond the computed order are inconclusive.
 */
Verdict verify_prop2(const MLDEParams& params, std::uint64_t prime_bound, long order_margin = 10);
/// Same check against an already computed component.
Verdict verify_prop2(const MLDEParams& params, const QExpansion& series, std::uint64_t prime_bound);

struct Classification {
    bool bounded_expected;
    long Q;
    /// For Q >= 6: p = Q n + residue carries valuation -1 on `component`.
    long residue = 0;
    Component component = Component::f1;
    std::string description;
};

Classification classify(const MLDEParams& params);

struct BoundedResult {
    bool stabilized;
    /// Least common multiple of all computed denominators.
    Integer clearing;
    /// Indices at which the running lcm grew, with the new value.
    std::vector<std::pair<long, Integer>> growth;
    long window_start;
};

/// Stable when the running lcm does not change over the final `window_fraction` of the indices.
BoundedResult bounded_check(const QExpansion& series, double window_fraction = 0.25);

}  // namespace vvmf
