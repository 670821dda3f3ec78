#include "vvmf/reproduction.hpp"

#include <algorithm>
#include <set>

namespace vvmf {

namespace {

PrimeFactorization progression_product(std::uint64_t bound, std::vector<PrimePower> extra,
                                       std::uint64_t omitted = 0) {
    for (auto p : primes_in_progression(10, 9, bound))
        if (p != omitted) extra.push_back({p, 1});
    return PrimeFactorization(std::move(extra));
}

PrimeFactorization denominator_factors(const Rational& r, const PrimeTable& table) {
    if (r.is_zero() || r.den() == 1) return {};
    return table.factor(r.den());
}

PrimeFactorization quotient(const PrimeFactorization& expected, const PrimeFactorization& observed) {
    std::vector<PrimePower> parts(expected.factors().begin(), expected.factors().end());
    for (const auto& f : observed.factors()) parts.push_back({f.prime, -f.exponent});
    return PrimeFactorization(std::move(parts));
}

ClaimComparison compare(const DenominatorClaim& claim, long index, const Rational& coeff, const PrimeTable& table) {
    ClaimComparison c{claim.label, index, denominator_factors(coeff, table), claim.denominator, {}, false};
    c.discrepancy = quotient(c.expected, c.observed);
    c.exact = c.discrepancy.empty() && !coeff.is_zero();
    return c;
}

}  // namespace

std::vector<DenominatorClaim> published_claims() {
    return {
        {1000, progression_product(10000, {{3, 2}, {13, 1}}),
         "3^2 * 13 * product of primes 10n + 9 up to 10000"},
        {1001, progression_product(10009, {{3, 1}}), "3 * product of primes 10n + 9 up to 10009"},
        {1002, progression_product(10009, {{13, 1}}, 919),
         "13 * product of primes 10n + 9 up to 10009, 919 omitted"},
    };
}

std::optional<PrimeFactorization> solve_rescaling(const std::vector<Rational>& coeffs,
                                                  const std::vector<PrimeFactorization>& claims,
                                                  const PrimeTable& table) {
    if (coeffs.size() != claims.size()) throw ParameterError("solve_rescaling: size mismatch");
    std::set<std::uint64_t> primes;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) return std::nullopt;
        const PrimeFactorization observed = denominator_factors(coeffs[i], table);
        for (const auto& f : observed.factors()) primes.insert(f.prime);
        for (const auto& f : claims[i].factors()) primes.insert(f.prime);
    }

    std::vector<PrimePower> scale;
    for (auto p : primes) {
        std::optional<long> fixed;
        long lower = 0;
        bool have_lower = false;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const long v = padic_valuation_unchecked(coeffs[i].num(), p) - padic_valuation_unchecked(coeffs[i].den(), p);
            const long e = claims[i].exponent(p);
            if (e > 0) {
                // den exponent of c * coeff is -(c_p + v) = e
                const long need = -v - e;
                if (fixed && *fixed != need) return std::nullopt;
                fixed = need;
            } else {
                lower = have_lower ? std::max(lower, -v) : -v;
                have_lower = true;
            }
        }
        long cp = fixed ? *fixed : std::max(0L, lower);
        if (have_lower && cp < lower) return std::nullopt;
        if (cp != 0) scale.push_back({p, cp});
    }
    return PrimeFactorization(std::move(scale));
}

ReproductionReport check_published_claims(const MLDEParams& params, const QExpansion& f1, const QExpansion& f2,
                                         const PrimeTable& table) {
    ReproductionReport report{params, std::min(f1.order(), f2.order()), {}, std::nullopt};
    const auto claims = published_claims();
    std::vector<PrimeFactorization> claim_dens;
    for (const auto& c : claims) claim_dens.push_back(c.denominator);

    for (Component which : {Component::f1, Component::f2}) {
        const QExpansion& series = which == Component::f1 ? f1 : f2;
        for (long offset : {0L, 1L}) {
            ClaimAssignment a{which, offset, {}, false, std::nullopt, {}, false};
            std::vector<Rational> coeffs;
            for (const auto& claim : claims) {
                const long index = claim.label - offset;
                if (index > series.order()) break;
                coeffs.push_back(series.coefficient(index));
                a.strict.push_back(compare(claim, index, coeffs.back(), table));
            }
            if (coeffs.size() == claims.size()) {
                a.strict_match = std::all_of(a.strict.begin(), a.strict.end(), [](const auto& c) { return c.exact; });
                a.rescaling = solve_rescaling(coeffs, claim_dens, table);
                if (a.rescaling) {
                    const Rational c = a.rescaling->value();
                    for (std::size_t i = 0; i < claims.size(); ++i)
                        a.rescaled.push_back(compare(claims[i], claims[i].label - offset, c * coeffs[i], table));
                    a.rescaled_match =
                        std::all_of(a.rescaled.begin(), a.rescaled.end(), [](const auto& c) { return c.exact; });
                }
            }
            report.assignments.push_back(std::move(a));
        }
    }
    for (std::size_t i = 0; i < report.assignments.size() && !report.chosen; ++i)
        if (report.assignments[i].strict_match) report.chosen = i;
    for (std::size_t i = 0; i < report.assignments.size() && !report.chosen; ++i)
        if (report.assignments[i].rescaled_match) report.chosen = i;
    return report;
}

ReproductionReport reproduce_published(const PrimeTable& table, const SolveOptions& progress, long order) {
    const MLDEParams params = derive_params(Rational(3, 10), Rational(2, 10));
    const QExpansion f1 = frobenius_solve(params, Component::f1, order, progress);
    const QExpansion f2 = frobenius_solve(params, Component::f2, order, progress);
    return check_published_claims(params, f1, f2, table);
}

}  // namespace vvmf
