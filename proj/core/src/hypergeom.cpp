#include "vvmf/hypergeom.hpp"

#include "vvmf/classical_forms.hpp"
#include "vvmf/primes.hpp"

#include <algorithm>
#include <numeric>

namespace vvmf {

HypergeomSpec HypergeomSpec::for_component(const MLDEParams& p, Component which) {
    const Rational one(1);
    if (which == Component::f1) return {p.a, one + p.a - p.c, one + p.a - p.b};
    return {p.b, one + p.b - p.c, one + p.b - p.a};
}

Rational pochhammer(const Rational& x, long n) {
    if (n < 0) throw ParameterError("pochhammer needs n >= 0");
    Rational out(1);
    for (long k = 0; k < n; ++k) out *= x + Rational(k);
    return out;
}

std::vector<Rational> f21_coefficients(const HypergeomSpec& spec, long order) {
    if (order < 0) throw ParameterError("series order must be >= 0");
    if (spec.lower.is_integer() && spec.lower.sign() <= 0 && -spec.lower < Rational(order))
        throw DomainError("lower parameter " + spec.lower.to_string() + " is a non-positive integer within range");
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = Rational(1);
    for (long n = 0; n < order; ++n) {
        const Rational rn(n);
        const auto i = static_cast<std::size_t>(n);
        c[i + 1] = c[i] * (spec.upper1 + rn) * (spec.upper2 + rn) / ((spec.lower + rn) * (rn + Rational(1)));
    }
    return c;
}

namespace {

void check_pq(long P, long Q) {
    if (Q < 2) throw ParameterError("closed products need Q >= 2");
    if (std::gcd(P < 0 ? -P : P, Q) != 1) throw ParameterError("closed products need gcd(P, Q) = 1");
}

// Ratio C_{k+1} / C_k.
Rational product_step(long P, long Q, long k, ProductBranch branch) {
    const long s = branch == ProductBranch::plus ? 1 : -1;
    Integer num = Integer(12 * Q * k + Q + 6 * s * P) * (12 * Q * k + 5 * Q + 6 * s * P);
    Integer den = Integer(Q * k + Q + s * P) * (k + 1) * (144 * Q);
    if (den == 0) throw DomainError("zero factor Qk + Q +- P in closed product");
    return Rational(num, den);
}

}  // namespace

Rational closed_product(long P, long Q, long n, ProductBranch branch) {
    check_pq(P, Q);
    if (n < 0) throw ParameterError("closed product needs n >= 0");
    const long s = branch == ProductBranch::plus ? 1 : -1;
    Integer num = 1, den = 1;
    for (long k = 0; k < n; ++k) {
        num *= Integer(12 * Q * k + Q + 6 * s * P) * (12 * Q * k + 5 * Q + 6 * s * P);
        Integer d = Integer(Q * k + Q + s * P) * (k + 1);
        if (d == 0) throw DomainError("zero factor Qk + Q +- P in closed product");
        den *= d;
    }
    Integer base;
    mpz_ui_pow_ui(base.get_mpz_t(), static_cast<unsigned long>(144 * Q), static_cast<unsigned long>(n));
    return Rational(num, den * base);
}

std::vector<Rational> closed_products(long P, long Q, long count, ProductBranch branch) {
    check_pq(P, Q);
    if (count < 0) throw ParameterError("closed products need count >= 0");
    std::vector<Rational> out(static_cast<std::size_t>(count) + 1);
    out[0] = Rational(1);
    for (long k = 0; k < count; ++k) {
        const auto i = static_cast<std::size_t>(k);
        out[i + 1] = out[i] * product_step(P, Q, k, branch);
    }
    return out;
}

QExpansion closed_form_solution(const MLDEParams& params, Component which, long order) {
    if (params.Q < 2) throw ParameterError("closed form needs Q >= 2");
    const auto spec = HypergeomSpec::for_component(params, which);
    auto outer = f21_coefficients(spec, order);
    Rational power(1);
    for (auto& c : outer) {
        c *= power;
        power *= Rational(1728);
    }
    const QExpansion t = j_inverse(order);
    const QExpansion hyper = compose(outer, t);
    const Rational& alpha = which == Component::f1 ? params.a : params.b;
    return mul(mul(eta_power(2 * params.k0, order), pow_rational(t, alpha)), hyper);
}

Verdict lemma_valuation_check(long P, long Q, std::uint64_t prime_bound) {
    if (Q < 6) throw ParameterError("lemma_valuation_check needs Q >= 6 (got Q = " + std::to_string(Q) + ")");
    check_pq(P, Q);
    const long residue = P > 0 ? P : -P;
    const ProductBranch branch = P > 0 ? ProductBranch::plus : ProductBranch::minus;
    const std::string name = P > 0 ? "C" : "C'";

    std::vector<std::uint64_t> primes;
    for (auto p : primes_in_progression(Q, residue, prime_bound))
        if (p > static_cast<std::uint64_t>(residue)) primes.push_back(p);

    Verdict verdict("lemma");
    if (primes.empty()) return verdict;
    const long max_n = (static_cast<long>(primes.back()) - residue) / Q;
    const auto C = closed_products(P, Q, max_n, branch);
    for (auto p : primes) {
        const long n = (static_cast<long>(p) - residue) / Q;
        const Valuation v = padic_valuation(C[static_cast<std::size_t>(n)], static_cast<long>(p));
        verdict.add("v_" + std::to_string(p) + "(" + name + "_" + std::to_string(n) + ")", "-1", v.to_string(),
                    v == Valuation::finite(-1));
    }
    return verdict;
}

}  // namespace vvmf
