#include "vvmf/mlde.hpp"

#include "vvmf/classical_forms.hpp"

namespace vvmf {

std::string_view to_string(Component c) { return c == Component::f1 ? "f1" : "f2"; }

Component parse_component(std::string_view text) {
    if (text == "f1") return Component::f1;
    if (text == "f2") return Component::f2;
    throw ParameterError("unknown component '" + std::string(text) + "'");
}

MLDEParams derive_params(const Rational& m1, const Rational& m2) {
    Rational diff = m1 - m2;
    if (diff.is_integer())
        throw ParameterError("Q = 1: m1 - m2 = " + diff.to_string() + " is an integer, so rho(T) is scalar");
    Rational k0 = Rational(6) * (m1 + m2) - Rational(1);
    if (!k0.is_integer()) throw ParameterError("k0 = 6(m1 + m2) - 1 = " + k0.to_string() + " is not an integer");
    if (!diff.num().fits_slong_p() || !diff.den().fits_slong_p() || !k0.num().fits_slong_p())
        throw ParameterError("exponents too large");

    MLDEParams p;
    p.m1 = m1;
    p.m2 = m2;
    p.P = diff.num().get_si();
    p.Q = diff.den().get_si();
    p.k0 = k0.num().get_si();
    p.k1 = (Rational(36) * diff * diff - Rational(1)) / Rational(144);
    p.a = Rational(1, 12) + diff / Rational(2);
    p.b = Rational(1, 12) - diff / Rational(2);
    p.c = Rational(2, 3);
    return p;
}

std::pair<Rational, Rational> indicial_roots(const MLDEParams& params) {
    // x^2 - x/6 - k1 = 0  =>  x = 1/12 +- sqrt(1/36 + 4 k1) / 2
    Rational disc = Rational(1, 36) + Rational(4) * params.k1;
    auto root = exact_sqrt(disc);
    if (!root) throw DomainError("indicial discriminant " + disc.to_string() + " is not a rational square");
    Rational r1 = Rational(1, 12) + *root / Rational(2);
    Rational r2 = Rational(1, 12) - *root / Rational(2);
    Rational shift = Rational(params.k0, 12);
    if (r1 == params.m1 - shift) return {r1, r2};
    return {r2, r1};
}

namespace {

Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace

QExpansion frobenius_solve(const MLDEParams& params, Component which, long order, const SolveOptions& options) {
    if (order < 0) throw ParameterError("series order must be >= 0");
    if (params.Q < 2) throw ParameterError("frobenius_solve needs Q >= 2");
    const Rational shift_k0 = Rational(params.k0, 12);
    const Rational mu = params.exponent(which) - shift_k0;
    const Rational other = Rational(1, 6) - mu;
    const Rational& k1 = params.k1;

    const auto e2 = eisenstein_coefficients(2, order);
    const auto e4 = eisenstein_coefficients(4, order);

    // L * ((1/6) E2_k (mu + n - k) + k1 E4_k) = E2_k * A * (n - k) + C_k with integer A, C_k.
    const Integer L = lcm(Integer(6) * mu.den(), k1.den());
    const Integer A = L / 6;
    const Integer M0 = mu.num() * (A / mu.den());
    const Integer K = k1.num() * (L / k1.den());
    const auto N = static_cast<std::size_t>(order);
    std::vector<Integer> e2a(N + 1), ck(N + 1);
    for (std::size_t k = 1; k <= N; ++k) {
        e2a[k] = e2[k] * A;
        ck[k] = e2[k] * M0 + K * e4[k];
    }

    // B[j] = a_j * D for the running common denominator D of a_0..a_{n-1}.
    std::vector<Integer> B(N + 1);
    B[0] = 1;
    Integer D = 1;
    Integer X, T, scale_up;
    mpq_class an;
    for (std::size_t n = 1; n <= N; ++n) {
        X = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (sgn(B[n - k]) == 0) continue;
            T = e2a[k] * static_cast<unsigned long>(n - k);
            T += ck[k];
            mpz_addmul(X.get_mpz_t(), T.get_mpz_t(), B[n - k].get_mpz_t());
        }
        const Rational indicial = Rational(static_cast<long>(n)) * (Rational(static_cast<long>(n)) + mu - other);
        if (indicial.is_zero()) throw DomainError("vanishing indicial factor at n = " + std::to_string(n));
        an = mpq_class(X * indicial.den(), L * D * indicial.num());
        an.canonicalize();

        Integer widened = lcm(D, an.get_den());
        if (widened != D) {
            mpz_divexact(scale_up.get_mpz_t(), widened.get_mpz_t(), D.get_mpz_t());
            for (std::size_t j = 0; j < n; ++j) B[j] *= scale_up;
            D = widened;
        }
        B[n] = an.get_num() * (D / an.get_den());

        if (options.progress && options.progress_interval > 0 &&
            n % static_cast<std::size_t>(options.progress_interval) == 0)
            options.progress(static_cast<long>(n));
    }

    QExpansion twisted = QExpansion::from_integers(mu, std::move(B), D);
    return mul(eta_power(2 * params.k0, order), twisted);
}

QExpansion frobenius_solve_direct(const MLDEParams& params, Component which, long order) {
    if (order < 0) throw ParameterError("series order must be >= 0");
    if (params.Q < 2) throw ParameterError("frobenius_solve_direct needs Q >= 2");
    const auto N = static_cast<std::size_t>(order);
    const QExpansion E2 = eisenstein(2, order);
    const auto e2 = E2.coefficients();
    const auto e2sq = mul(E2, E2).coefficients();
    const auto e4 = eisenstein(4, order).coefficients();

    const Rational m = params.exponent(which);
    const Rational k0(params.k0);
    const Rational w1 = k0 / Rational(12);
    const Rational w2 = (k0 + Rational(2)) / Rational(12);
    const Rational w12 = w1 * w2;
    const Rational& k1 = params.k1;
    auto indicial = [&](const Rational& x) { return x * x - (w1 + w2) * x + w12 - k1; };

    std::vector<Rational> b(N + 1);
    b[0] = Rational(1);
    for (std::size_t n = 1; n <= N; ++n) {
        const Rational xn = m + Rational(static_cast<long>(n));
        Rational rhs;
        for (std::size_t k = 1; k <= n; ++k) {
            const Rational xk = m + Rational(static_cast<long>(n - k));
            Rational weight = -w1 * xn * e2[k] - w2 * xk * e2[k] + w12 * e2sq[k] - k1 * e4[k];
            rhs += weight * b[n - k];
        }
        const Rational ind = indicial(xn);
        if (ind.is_zero()) throw DomainError("vanishing indicial factor at n = " + std::to_string(n));
        b[n] = -rhs / ind;
    }
    return QExpansion::from_coefficients(m, b);
}

QExpansion mlde_residual(const QExpansion& f, const MLDEParams& params) {
    if (f.is_zero()) return f;
    const Rational k0(params.k0);
    QExpansion inner = serre_derivative(f, k0);
    QExpansion outer = serre_derivative(inner, k0 + Rational(2));
    Integer rel = -floor(-(f.precision() - f.leading_exponent()));
    QExpansion e4f = mul(eisenstein(4, rel.get_si() - 1), f);
    return subtract(outer, scale(e4f, params.k1));
}

SolutionPair solve_pair(const MLDEParams& params, long order) {
    return {frobenius_solve(params, Component::f1, order), frobenius_solve(params, Component::f2, order), params,
            SolutionPair::Method::frobenius};
}

}  // namespace vvmf
