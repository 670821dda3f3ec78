#pragma once

#include "vvmf/series.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <utility>

namespace vvmf {

enum class Component { f1, f2 };

std::string_view to_string(Component c);
/// "f1" or "f2"; ParameterError otherwise.
Component parse_component(std::string_view text);

/*
 * Parameters of (D_{k0+2} o D_{k0} - k1 E_4) f = 0 attached to the exponent
 * pair (m1, m2):
 *
 *     m1 - m2 = P/Q,  gcd(|P|, Q) = 1,  Q >= 2
 *     k0 = 6(m1 + m2) - 1              (an integer)
 *     k1 = (36 (m1 - m2)^2 - 1) / 144
 *     a  = 1/12 + (m1 - m2)/2,  b = 1/12 - (m1 - m2)/2,  c = 2/3
 */
struct MLDEParams {
    Rational m1, m2;
    long P = 0;
    long Q = 1;
    long k0 = 0;
    Rational k1, a, b, c;

    /// Exponent of the chosen component.
    const Rational& exponent(Component which) const { return which == Component::f1 ? m1 : m2; }

    friend bool operator==(const MLDEParams&, const MLDEParams&) = default;
};

/// Throws ParameterError when 6(m1 + m2) is not an integer, or when m1 - m2 is an integer (Q = 1).
MLDEParams derive_params(const Rational& m1, const Rational& m2);

/// Roots of x^2 - x/6 - k1, ordered as (root for m1, root for m2); equal to (a, b).
std::pair<Rational, Rational> indicial_roots(const MLDEParams& params);

struct SolveOptions {
    /// Called with the index just computed every `progress_interval` steps (0 disables).
    std::function<void(long)> progress;
    long progress_interval = 0;
};

/*
 * Normalized solution q^{m_i}(1 + ...) of the modular equation, through the
 * twisted unknown g = f / eta^{2 k0}, which satisfies
 *
 *     theta^2 g - (1/6) E_2 theta g - k1 E_4 g = 0.
 *
 * With g = q^mu sum a_n q^n and mu = m_i - k0/12 the coefficients obey
 *
 *     ((mu+n)^2 - (mu+n)/6 - k1) a_n = sum_{k=1}^{n} ((1/6) E2_k (mu+n-k) + k1 E4_k) a_{n-k}.
 *
 * The sum runs over integer numerators scaled to one running common
 * denominator, which is widened only when a new coefficient needs it.
 */
QExpansion frobenius_solve(const MLDEParams& params, Component which, long order, const SolveOptions& options = {});

/// The same solution from the untwisted equation expanded directly in f, in plain rational arithmetic.
QExpansion frobenius_solve_direct(const MLDEParams& params, Component which, long order);

/// D_{k0+2}(D_{k0} f) - k1 E_4 f.
QExpansion mlde_residual(const QExpansion& f, const MLDEParams& params);

struct SolutionPair {
    QExpansion f1, f2;
    MLDEParams params;
    enum class Method { frobenius, hypergeometric } method;
};

SolutionPair solve_pair(const MLDEParams& params, long order);

}  // namespace vvmf
