#pragma once

#include "vvmf/mlde.hpp"
#include "vvmf/verdict.hpp"

#include <cstdint>
#include <vector>

namespace vvmf {

/// Parameters of F(upper1, upper2; lower; z).
struct HypergeomSpec {
    Rational upper1, upper2, lower;

    /// (a, 1+a-c; 1+a-b) for f1, (b, 1+b-c; 1+b-a) for f2.
    static HypergeomSpec for_component(const MLDEParams& params, Component which);

    friend bool operator==(const HypergeomSpec&, const HypergeomSpec&) = default;
};

/// Rising factorial x (x+1) ... (x+n-1).
Rational pochhammer(const Rational& x, long n);

/// Taylor coefficients 0..order of F at z = 0 by the one-step ratio recurrence.
std::vector<Rational> f21_coefficients(const HypergeomSpec& spec, long order);

enum class ProductBranch { plus, minus };

/*
 * C_n (plus) and C'_n (minus) as explicit products:
 *
 *     (144Q)^-n prod_{k=0}^{n-1} (12Qk + Q +- 6P)(12Qk + 5Q +- 6P) / ((Qk + Q +- P)(k + 1))
 *
 * These are the Taylor coefficients of the f1 and f2 hypergeometric factors.
 */
Rational closed_product(long P, long Q, long n, ProductBranch branch);
/// closed_product for n = 1..count, built incrementally (index 0 holds C_0 = 1).
std::vector<Rational> closed_products(long P, long Q, long count, ProductBranch branch);

/*
 * eta^{2k0} (1/j)^{alpha} F(u1, u2; l; 1728/j), alpha = a for f1 and b for f2.
 *
 * The true solution carries the scalar 1728^{-alpha}, which is irrational in
 * general; it is dropped so that the result is q^{m_i}(1 + ...) with rational
 * coefficients.
 */
QExpansion closed_form_solution(const MLDEParams& params, Component which, long order);

/// Valuation -1 of C_n at every prime p = Qn + P (P > 0) or of C'_n at p = Qn - P (P < 0), p <= prime_bound.
Verdict lemma_valuation_check(long P, long Q, std::uint64_t prime_bound);

}  // namespace vvmf
