#pragma once

#include "vvmf/series.hpp"

#include <map>
#include <vector>

namespace vvmf {

/// sum_{d | n} d^k.
Integer divisor_sigma(long k, long n);

/// Integer coefficients 1, c sigma_{k-1}(1), ..., c sigma_{k-1}(order) of E_k for k in {2, 4, 6}.
std::vector<Integer> eisenstein_coefficients(int k, long order);
/// E_2 = 1 - 24 sum sigma_1(n) q^n, E_4 = 1 + 240 sum sigma_3(n) q^n, E_6 = 1 - 504 sum sigma_5(n) q^n.
QExpansion eisenstein(int k, long order);

/// eta^w = q^(w/24) prod_{n>=1} (1 - q^n)^w to relative order `order`.
QExpansion eta_power(long w, long order);
/// Delta = eta^24.
QExpansion discriminant(long order);
/// j = E_4^3 / Delta = q^-1 + 744 + 196884 q + ...
QExpansion j_series(long order);
/// 1/j = q - 744 q^2 + 356652 q^3 - ...
QExpansion j_inverse(long order);

/// D_k f = theta(f) - (k/12) E_2 f, with E_2 taken to the precision of f.
QExpansion serre_derivative(const QExpansion& f, const Rational& k);

/*
 * The classical q-expansions at one fixed relative order. Built eagerly in
 * the constructor and read-only afterwards.
 */
class FormCache {
public:
    explicit FormCache(long order, const std::vector<long>& eta_weights = {});

    long order() const { return order_; }
    const QExpansion& e2() const { return e2_; }
    const QExpansion& e4() const { return e4_; }
    const QExpansion& e6() const { return e6_; }
    const QExpansion& delta() const { return delta_; }
    const QExpansion& j() const { return j_; }
    const QExpansion& j_inverse() const { return j_inv_; }
    /// Throws std::out_of_range for a weight not requested at construction.
    const QExpansion& eta_power(long w) const;

private:
    long order_;
    QExpansion e2_, e4_, e6_, delta_, j_, j_inv_;
    std::map<long, QExpansion> eta_;
};

}  // namespace vvmf
