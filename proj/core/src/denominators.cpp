#include "vvmf/denominators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace vvmf {

namespace {

long normalize_residue(long r, long modulus) { return ((r % modulus) + modulus) % modulus; }

}  // namespace

DenominatorReport analyze(const QExpansion& series, long modulus, const std::vector<long>& residues,
                          const AnalyzeOptions& options) {
    if (modulus < 1) throw ParameterError("analyze: modulus must be >= 1");
    if (options.checkpoint_stride < 1) throw ParameterError("analyze: checkpoint stride must be >= 1");
    const PrimeTable& table = options.table ? *options.table : default_prime_table();

    DenominatorReport report;
    report.order = series.order();
    report.modulus = modulus;
    std::set<long> classes;
    for (long r : residues) classes.insert(normalize_residue(r, modulus));
    report.residues.assign(classes.begin(), classes.end());

    std::map<std::uint64_t, long> running;
    const auto nums = series.numerators();
    Integer den;
    for (long n = 0; n <= series.order(); ++n) {
        IndexDenominator entry;
        entry.n = n;
        const Integer& num = nums[static_cast<std::size_t>(n)];
        if (sgn(num) != 0) {
            mpz_gcd(den.get_mpz_t(), num.get_mpz_t(), series.denominator().get_mpz_t());
            den = series.denominator() / den;
            if (den != 1) {
                auto [factors, rest] = table.factor_partial(den);
                entry.denominator = std::move(factors);
                if (rest != 1) entry.unfactored_residue = rest;
            }
        }
        for (const auto& f : entry.denominator.factors()) {
            report.first_occurrence.try_emplace(f.prime, FirstOccurrence{n, -f.exponent});
            if (classes.count(static_cast<long>(f.prime % static_cast<std::uint64_t>(modulus))))
                entry.progression_hits.push_back({f.prime, -f.exponent});
            long& e = running[f.prime];
            e = std::max(e, f.exponent);
        }
        if (n % options.checkpoint_stride == 0 || n == series.order()) {
            std::vector<PrimePower> lcm;
            for (const auto& [p, e] : running) lcm.push_back({p, e});
            report.lcm_prefix.push_back({n, PrimeFactorization(std::move(lcm))});
        }
        report.per_index.push_back(std::move(entry));
    }
    return report;
}

Verdict verify_prop2(const MLDEParams& params, std::uint64_t prime_bound, long order_margin) {
    if (params.Q < 6) throw ParameterError("verify_prop2 needs Q >= 6 (got Q = " + std::to_string(params.Q) + ")");
    if (order_margin < 0) throw ParameterError("verify_prop2: negative order margin");
    const long residue = params.P > 0 ? params.P : -params.P;
    long max_n = 0;
    for (auto p : primes_in_progression(params.Q, residue, std::max<std::uint64_t>(prime_bound, 2)))
        if (p > static_cast<std::uint64_t>(residue)) max_n = (static_cast<long>(p) - residue) / params.Q;
    const Component which = params.P > 0 ? Component::f1 : Component::f2;
    return verify_prop2(params, frobenius_solve(params, which, max_n + order_margin), prime_bound);
}

Verdict verify_prop2(const MLDEParams& params, const QExpansion& series, std::uint64_t prime_bound) {
    if (params.Q < 6) throw ParameterError("verify_prop2 needs Q >= 6 (got Q = " + std::to_string(params.Q) + ")");
    const bool case_a = params.P > 0;
    const long residue = case_a ? params.P : -params.P;
    const std::string component(to_string(case_a ? Component::f1 : Component::f2));
    Verdict verdict("prop2");
    if (prime_bound < 2) return verdict;

    const auto nums = series.numerators();
    for (auto p : primes_in_progression(params.Q, residue, prime_bound)) {
        if (p <= static_cast<std::uint64_t>(residue)) continue;
        const long expected_index = (static_cast<long>(p) - residue) / params.Q;
        const std::string what = "p=" + std::to_string(p) + " on " + component;
        const std::string expected = "first negative valuation -1 at index " + std::to_string(expected_index);

        long found = -1;
        long valuation = 0;
        for (long n = 0; n <= series.order(); ++n) {
            const Integer& num = nums[static_cast<std::size_t>(n)];
            if (sgn(num) == 0) continue;
            long v = padic_valuation_unchecked(num, p) - padic_valuation_unchecked(series.denominator(), p);
            if (v < 0) {
                found = n;
                valuation = v;
                break;
            }
        }
        if (found < 0) {
            verdict.add({what, expected, "inconclusive: no negative valuation up to order " +
                                             std::to_string(series.order()) + "; increase order",
                         CaseStatus::inconclusive});
            continue;
        }
        const std::string actual =
            "first negative valuation " + std::to_string(valuation) + " at index " + std::to_string(found);
        verdict.add(what, expected, actual, valuation == -1 && found == expected_index);
    }
    return verdict;
}

Classification classify(const MLDEParams& params) {
    if (params.Q < 2) throw ParameterError("classify: Q = 1 lies outside the dichotomy");
    Classification out{};
    out.Q = params.Q;
    if (params.Q <= 5) {
        out.bounded_expected = true;
        out.description = "congruence: Q = " + std::to_string(params.Q) + " <= 5 (bounded denominators expected)";
        return out;
    }
    out.bounded_expected = false;
    out.component = params.P > 0 ? Component::f1 : Component::f2;
    out.residue = normalize_residue(params.P > 0 ? params.P : -params.P, params.Q);
    out.description = "unbounded: Q = " + std::to_string(params.Q) + " >= 6, progression " +
                      std::to_string(params.Q) + "n + " + std::to_string(out.residue) + " on component " +
                      std::string(to_string(out.component));
    return out;
}

BoundedResult bounded_check(const QExpansion& series, double window_fraction) {
    if (!(window_fraction > 0.0 && window_fraction <= 1.0))
        throw ParameterError("bounded_check: window fraction must lie in (0, 1]");
    BoundedResult out{true, Integer(1), {}, 0};
    const long count = series.order() + 1;
    if (count <= 0) return out;
    out.window_start = count - static_cast<long>(std::ceil(static_cast<double>(count) * window_fraction));

    const auto nums = series.numerators();
    Integer den, lcm = 1;
    long last_growth = -1;
    for (long n = 0; n < count; ++n) {
        const Integer& num = nums[static_cast<std::size_t>(n)];
        if (sgn(num) == 0) continue;
        mpz_gcd(den.get_mpz_t(), num.get_mpz_t(), series.denominator().get_mpz_t());
        den = series.denominator() / den;
        Integer next;
        mpz_lcm(next.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        if (next != lcm) {
            lcm = next;
            last_growth = n;
            out.growth.emplace_back(n, lcm);
        }
    }
    out.clearing = lcm;
    out.stabilized = last_growth < out.window_start;
    return out;
}

}  // namespace vvmf
