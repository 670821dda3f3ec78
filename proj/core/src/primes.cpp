#include "vvmf/primes.hpp"

#include <algorithm>
#include <map>

namespace vvmf {

PrimeFactorization::PrimeFactorization(std::vector<PrimePower> factors) {
    std::map<std::uint64_t, long> merged;
    for (const auto& f : factors) merged[f.prime] += f.exponent;
    for (const auto& [p, e] : merged)
        if (e != 0) factors_.push_back({p, e});
}

long PrimeFactorization::exponent(std::uint64_t p) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                               [](const PrimePower& f, std::uint64_t q) { return f.prime < q; });
    return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

Rational PrimeFactorization::value() const {
    Integer num = 1, den = 1;
    for (const auto& f : factors_) {
        Integer pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), f.prime, static_cast<unsigned long>(f.exponent < 0 ? -f.exponent : f.exponent));
        (f.exponent > 0 ? num : den) *= pe;
    }
    return Rational(num, den);
}

std::string PrimeFactorization::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += " * ";
        out += std::to_string(f.prime);
        if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
    }
    return out;
}

UnfactoredResidue::UnfactoredResidue(Integer residue)
    : std::runtime_error("unfactored residue " + residue.get_str() + " exceeds the sieve bound"),
      residue_(std::move(residue)) {}

PrimeTable::PrimeTable(std::uint64_t bound) : bound_(bound) {
    if (bound < 2) throw ParameterError("prime table bound must be at least 2");
    composite_.assign(bound + 1, false);
    composite_[0] = composite_[1] = true;
    for (std::uint64_t i = 2; i * i <= bound; ++i)
        if (!composite_[i])
            for (std::uint64_t j = i * i; j <= bound; j += i) composite_[j] = true;
    for (std::uint64_t i = 2; i <= bound; ++i)
        if (!composite_[i]) primes_.push_back(i);
}

bool PrimeTable::contains(std::uint64_t n) const {
    if (n > bound_) throw ParameterError("primality query beyond sieve bound");
    return !composite_[n];
}

std::pair<PrimeFactorization, Integer> PrimeTable::factor_partial(const Integer& n) const {
    if (n == 0) throw DomainError("cannot factor zero");
    Integer rest = n < 0 ? Integer(-n) : n;
    std::vector<PrimePower> out;
    Integer prime;
    for (std::uint64_t p : primes_) {
        if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0) break;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        prime = static_cast<unsigned long>(p);
        long e = static_cast<long>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t()));
        out.push_back({p, e});
    }
    if (rest != 1) {
        // No factor <= min(bound, sqrt(rest)) remains, so rest is prime iff rest < bound^2.
        Integer limit = Integer(static_cast<unsigned long>(bound_)) * static_cast<unsigned long>(bound_);
        if (rest < limit && rest.fits_ulong_p()) {
            out.push_back({rest.get_ui(), 1});
            rest = 1;
        }
    }
    return {PrimeFactorization(std::move(out)), rest};
}

PrimeFactorization PrimeTable::factor(const Integer& n) const {
    auto [factors, rest] = factor_partial(n);
    if (rest != 1) throw UnfactoredResidue(rest);
    return factors;
}

const PrimeTable& default_prime_table() {
    static const PrimeTable table(kDefaultSieveBound);
    return table;
}

SignedFactorization factor_rational(const Rational& r, const PrimeTable& table) {
    if (r.is_zero()) throw DomainError("cannot factor zero");
    std::vector<PrimePower> all;
    const PrimeFactorization num = table.factor(r.num());
    const PrimeFactorization den = table.factor(r.den());
    for (const auto& f : num.factors()) all.push_back(f);
    for (const auto& f : den.factors()) all.push_back({f.prime, -f.exponent});
    return {r.sign(), PrimeFactorization(std::move(all))};
}

std::vector<std::uint64_t> primes_in_progression(long modulus, long residue, std::uint64_t bound) {
    if (modulus < 1) throw ParameterError("progression modulus must be >= 1");
    if (bound < 2) throw ParameterError("progression bound must be >= 2");
    long r = ((residue % modulus) + modulus) % modulus;
    const PrimeTable table(bound);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : table.primes())
        if (static_cast<long>(p % static_cast<std::uint64_t>(modulus)) == r) out.push_back(p);
    return out;
}

}  // namespace vvmf
