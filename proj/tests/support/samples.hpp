#pragma once

#include "vvmf/mlde.hpp"

#include <numeric>
#include <random>
#include <vector>

namespace vvmf::testing {

// Exponent pair with m1 - m2 = P/Q and m1 + m2 = (k0 + 1)/6.
inline MLDEParams pair_for(long P, long Q, long k0) {
    Rational diff(P, Q), sum(k0 + 1, 6);
    return derive_params((sum + diff) / Rational(2), (sum - diff) / Rational(2));
}

// Draws valid parameter sets: gcd(P, Q) = 1, 2 <= Q <= max_q, integral k0.
inline std::vector<MLDEParams> random_params(std::mt19937_64& rng, int count, long max_q = 12) {
    std::uniform_int_distribution<long> q(2, max_q), k0(-6, 12);
    std::vector<MLDEParams> out;
    while (static_cast<int>(out.size()) < count) {
        long Q = q(rng);
        std::uniform_int_distribution<long> p(-3 * Q, 3 * Q);
        long P = p(rng);
        if (P == 0 || std::gcd(P, Q) != 1) continue;
        out.push_back(pair_for(P, Q, k0(rng)));
    }
    return out;
}

// Pairs spanning Q = 2..12, including (3/10, 2/10) and (1/2, 1/3).
inline std::vector<MLDEParams> cross_oracle_grid() {
    return {
        derive_params(Rational(3, 10), Rational(2, 10)),
        derive_params(Rational(1, 2), Rational(1, 3)),
        derive_params(Rational(2, 10), Rational(3, 10)),
        pair_for(1, 2, 0),
        pair_for(1, 3, 1),
        derive_params(Rational(5, 12), Rational(1, 12)),
        pair_for(-1, 4, 2),
        derive_params(Rational(1, 10), Rational(-1, 10)),
        pair_for(2, 5, 3),
        pair_for(1, 7, 1),
        pair_for(-3, 8, 2),
        pair_for(2, 9, 0),
        pair_for(3, 11, 4),
        pair_for(5, 12, 1),
    };
}

}  // namespace vvmf::testing
