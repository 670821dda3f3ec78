#include "vvmf/classical_forms.hpp"

#include <stdexcept>

namespace vvmf {

Integer divisor_sigma(long k, long n) {
    if (k < 0 || n < 1) throw ParameterError("divisor_sigma needs k >= 0 and n >= 1");
    Integer total = 0, term;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        total += term;
        long other = n / d;
        if (other != d) {
            mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(other), static_cast<unsigned long>(k));
            total += term;
        }
    }
    return total;
}

std::vector<Integer> eisenstein_coefficients(int k, long order) {
    long constant;
    switch (k) {
        case 2: constant = -24; break;
        case 4: constant = 240; break;
        case 6: constant = -504; break;
        default: throw ParameterError("eisenstein: unsupported weight " + std::to_string(k));
    }
    if (order < 0) throw ParameterError("series order must be >= 0");
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    Integer power;
    for (long d = 1; d <= order; ++d) {
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
        for (long m = d; m <= order; m += d) c[static_cast<std::size_t>(m)] += power;
    }
    for (auto& x : c) x *= constant;
    c[0] = 1;
    return c;
}

QExpansion eisenstein(int k, long order) {
    return QExpansion::from_integers(Rational(0), eisenstein_coefficients(k, order));
}

namespace {

// prod (1 - q^n) to the given order via the pentagonal number theorem.
QExpansion euler_product(long order) {
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (long k = 1;; ++k) {
        long p1 = k * (3 * k - 1) / 2, p2 = k * (3 * k + 1) / 2;
        if (p1 > order) break;
        int s = (k % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(p1)] += s;
        if (p2 <= order) c[static_cast<std::size_t>(p2)] += s;
    }
    return QExpansion::from_integers(Rational(0), std::move(c));
}

}  // namespace

QExpansion eta_power(long w, long order) {
    if (order < 0) throw ParameterError("series order must be >= 0");
    if (w == 0) return QExpansion::one(order);
    if (w < 0) return invert(eta_power(-w, order));
    QExpansion product = pow_rational(euler_product(order), Rational(w));
    return shift(product, Rational(w, 24));
}

QExpansion discriminant(long order) { return eta_power(24, order); }

QExpansion j_series(long order) {
    QExpansion e4 = eisenstein(4, order);
    return mul(mul(mul(e4, e4), e4), invert(discriminant(order)));
}

QExpansion j_inverse(long order) { return invert(j_series(order)); }

QExpansion serre_derivative(const QExpansion& f, const Rational& k) {
    if (f.is_zero()) return f;
    Integer rel = -floor(-(f.precision() - f.leading_exponent()));  // ceil
    long e2_order = rel.get_si() - 1;
    QExpansion correction = scale(mul(eisenstein(2, e2_order), f), k / Rational(12));
    return subtract(theta(f), correction);
}

FormCache::FormCache(long order, const std::vector<long>& eta_weights)
    : order_(order),
      e2_(eisenstein(2, order)),
      e4_(eisenstein(4, order)),
      e6_(eisenstein(6, order)),
      delta_(discriminant(order)) {
    j_ = mul(mul(mul(e4_, e4_), e4_), invert(delta_));
    j_inv_ = invert(j_);
    for (long w : eta_weights) eta_.emplace(w, vvmf::eta_power(w, order));
}

const QExpansion& FormCache::eta_power(long w) const {
    auto it = eta_.find(w);
    if (it == eta_.end()) throw std::out_of_range("eta power " + std::to_string(w) + " not cached");
    return it->second;
}

}  // namespace vvmf
