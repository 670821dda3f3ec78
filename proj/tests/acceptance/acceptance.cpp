// One line per acceptance criterion, then notes. Exit status 0 iff every criterion passes.

#include "samples.hpp"
#include "vvmf/classical_forms.hpp"
#include "vvmf/denominators.hpp"
#include "vvmf/hypergeom.hpp"
#include "vvmf/reproduction.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace vvmf;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::vector<std::string> notes;

Rational rising(const Rational& x, long n) {
    Rational r = 1;
    for (long k = 0; k < n; ++k) r = r * (x + Rational(k));
    return r;
}

std::string pair_name(const MLDEParams& p) { return "(" + p.m1.to_string() + ", " + p.m2.to_string() + ")"; }

Outcome published_denominators() {
    const ReproductionReport r = reproduce_published();
    if (!r.chosen) return {false, "no component/offset assignment matches all three denominators"};
    const auto& a = r.assignments[*r.chosen];
    std::ostringstream os;
    os << to_string(a.component) << " at offset " << a.offset << ", ";
    if (a.strict_match) {
        os << "exact match with leading coefficient 1";
    } else {
        os << "exact match after scaling by " << a.rescaling->to_string();
        notes.push_back("criterion 1: with leading coefficient 1 no assignment matches; the claimed denominators "
                        "hold for " + std::string(to_string(a.component)) + " times the constant " +
                        a.rescaling->value().to_string());
    }
    return {true, os.str()};
}

Outcome cross_oracle() {
    const auto grid = testing::cross_oracle_grid();
    std::set<long> qs;
    for (const auto& p : grid) {
        qs.insert(p.Q);
        for (Component w : {Component::f1, Component::f2})
            if (frobenius_solve(p, w, 300) != closed_form_solution(p, w, 300))
                return {false, pair_name(p) + " " + std::string(to_string(w)) + " differs"};
    }
    return {qs.size() == 11, std::to_string(grid.size()) + " pairs, Q in 2..12, 301 coefficients x 2 components equal"};
}

Outcome closed_products_identity() {
    long checked = 0;
    for (const auto& p : testing::cross_oracle_grid()) {
        const auto plus = closed_products(p.P, p.Q, 200, ProductBranch::plus);
        const auto minus = closed_products(p.P, p.Q, 200, ProductBranch::minus);
        const Rational one = 1;
        Rational fact = 1;
        for (long n = 0; n <= 200; ++n) {
            if (n > 0) fact = fact * Rational(n);
            const Rational c = rising(p.a, n) * rising(one + p.a - p.c, n) / (rising(one + p.a - p.b, n) * fact);
            const Rational cp = rising(p.b, n) * rising(one + p.b - p.c, n) / (rising(one + p.b - p.a, n) * fact);
            if (plus[n] != c || minus[n] != cp)
                return {false, pair_name(p) + " differs at n = " + std::to_string(n)};
            checked += 2;
        }
    }
    return {true, std::to_string(checked) + " coefficients equal"};
}

Outcome lemma() {
    std::ostringstream os;
    for (auto [P, Q] : std::vector<std::pair<long, long>>{{1, 10}, {-1, 10}, {1, 6}, {1, 7}, {3, 8}}) {
        const Verdict v = lemma_valuation_check(P, Q, 2000);
        if (!v.pass() || v.cases().empty())
            return {false, "(" + std::to_string(P) + ", " + std::to_string(Q) + ") failed"};
        os << "(" << P << "," << Q << "): " << v.cases().size() << " primes; ";
    }
    return {true, os.str()};
}

Outcome prop2() {
    const MLDEParams p = derive_params(Rational(3, 10), Rational(2, 10));
    const MLDEParams m = derive_params(Rational(2, 10), Rational(3, 10));
    const Verdict v = verify_prop2(p, frobenius_solve(p, Component::f1, 200), 101);
    const Verdict w = verify_prop2(m, frobenius_solve(m, Component::f2, 200), 101);
    // Independent recheck of every reported index.
    const QExpansion f1 = frobenius_solve(p, Component::f1, 200);
    for (auto prime : primes_in_progression(10, 1, 101)) {
        const long n = (static_cast<long>(prime) - 1) / 10;
        if (padic_valuation(f1.coefficient(n), static_cast<long>(prime)) != Valuation::finite(-1))
            return {false, "recheck failed at p = " + std::to_string(prime)};
    }
    return {v.pass() && w.pass() && v.cases().size() == 6 && w.cases().size() == 6,
            std::to_string(v.cases().size()) + " primes on f1 of (3/10, 2/10), " + std::to_string(w.cases().size()) +
                " on f2 of (2/10, 3/10)"};
}

Outcome identities() {
    const long N = 500;
    const QExpansion e4 = eisenstein(4, N), e6 = eisenstein(6, N), delta = discriminant(N);
    const QExpansion e4cubed = e4 * e4 * e4;
    const bool a = serre_derivative(eta_power(2, N), Rational(1)).is_zero();
    const bool b = serre_derivative(delta, Rational(12)).is_zero();
    const QExpansion c = e4cubed - e6 * e6 - Rational(1728) * delta;
    const QExpansion d = j_series(N) * delta - e4cubed;
    return {a && b && c.is_zero() && d.is_zero() && c.precision() >= N && d.precision() >= N,
            "D1(eta^2), D12(Delta), E4^3 - E6^2 - 1728 Delta, j Delta - E4^3 vanish to O(q^" +
                std::min(c.precision(), d.precision()).to_string() + ")"};
}

Outcome degenerate() {
    const MLDEParams p = derive_params(Rational(1, 2), Rational(1, 3));
    const QExpansion eta8 = eta_power(8, 500);
    const bool a = frobenius_solve(p, Component::f2, 500) == eta8;
    const bool b = closed_form_solution(p, Component::f2, 500) == eta8;
    return {a && b, std::string("recursion ") + (a ? "=" : "!=") + " eta^8, closed form " + (b ? "=" : "!=") +
                        " eta^8, 501 coefficients"};
}

Outcome indicial() {
    std::mt19937_64 rng(20240601);
    const auto draws = testing::random_params(rng, 120);
    for (const auto& p : draws) {
        const auto [r1, r2] = indicial_roots(p);
        if (r1 != p.a || r2 != p.b || r1 + r2 != Rational(1, 6)) return {false, "mismatch at " + pair_name(p)};
    }
    return {true, std::to_string(draws.size()) + " random draws"};
}

Outcome bounded_branch() {
    long stable = 0, total = 0;
    std::ostringstream clearing;
    for (auto [P, Q] : std::vector<std::pair<long, long>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}})
        for (long k0 : {0L, 3L}) {
            const MLDEParams p = testing::pair_for(P, Q, k0);
            for (Component w : {Component::f1, Component::f2}) {
                const BoundedResult b = bounded_check(frobenius_solve(p, w, 500));
                ++total;
                if (b.stabilized) {
                    ++stable;
                    if (b.clearing != 1)
                        clearing << " " << pair_name(p) << " " << to_string(w) << ": M = " << b.clearing.get_str();
                } else {
                    notes.push_back("criterion 9: " + pair_name(p) + " " + std::string(to_string(w)) +
                                    " did not stabilize by order 500 (last lcm growth at index " +
                                    std::to_string(b.growth.back().first) + ")");
                }
            }
        }
    if (!clearing.str().empty()) notes.push_back("criterion 9: clearing constants other than 1:" + clearing.str());
    return {stable == total, std::to_string(stable) + "/" + std::to_string(total) + " components stabilized at order 500"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"published denominators at indices 1000-1002", published_denominators},
        {"recursion equals closed form to order 300", cross_oracle},
        {"closed products equal Pochhammer ratios, n <= 200", closed_products_identity},
        {"valuation -1 of the closed products at progression primes <= 2000", lemma},
        {"first negative valuation is -1 at primes 10n + 1 <= 101", prop2},
        {"classical identities to order 500", identities},
        {"(1/2, 1/3) second solution equals eta^8 to order 500", degenerate},
        {"indicial roots", indicial},
        {"bounded denominators for Q <= 5", bounded_branch},
    };
    bool all = true;
    int index = 1;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::ostringstream t;
        t.precision(2);
        t << std::fixed << secs;
        std::cout << "criterion " << index++ << ": " << (o.pass ? "PASS" : "FAIL") << "  " << name << " -- " << o.detail
                  << " (" << t.str() << " s)" << std::endl;
    }
    for (const auto& n : notes) std::cout << "note: " << n << "\n";
    return all ? 0 : 1;
}
