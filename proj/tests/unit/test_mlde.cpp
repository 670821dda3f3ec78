#include "doctest.h"
#include "samples.hpp"
#include "vvmf/classical_forms.hpp"
#include "vvmf/mlde.hpp"

using namespace vvmf;

TEST_CASE("derived parameters") {
    auto p = derive_params(Rational(3, 10), Rational(2, 10));
    CHECK(p.P == 1);
    CHECK(p.Q == 10);
    CHECK(p.k0 == 2);
    CHECK(p.k1 == Rational(-1, 225));
    CHECK(p.a == Rational(2, 15));
    CHECK(p.b == Rational(1, 30));
    CHECK(p.c == Rational(2, 3));

    auto d = derive_params(Rational(1, 2), Rational(1, 3));
    CHECK(d.P == 1);
    CHECK(d.Q == 6);
    CHECK(d.k0 == 4);
    CHECK(d.k1 == 0);
    CHECK(d.a == Rational(1, 6));
    CHECK(d.b == 0);

    auto m = derive_params(Rational(2, 10), Rational(3, 10));
    CHECK(m.P == -1);
    CHECK(m.Q == 10);

    CHECK_THROWS_WITH_AS(derive_params(Rational(1, 5), Rational(1, 5)), doctest::Contains("Q = 1"), ParameterError);
    CHECK_THROWS_AS(derive_params(Rational(7, 5), Rational(2, 5)), ParameterError);
    CHECK_THROWS_AS(derive_params(Rational(1, 5), Rational(0)), ParameterError);
}

TEST_CASE("indicial roots") {
    auto p = derive_params(Rational(3, 10), Rational(2, 10));
    CHECK(indicial_roots(p) == std::pair{Rational(2, 15), Rational(1, 30)});
    auto d = derive_params(Rational(1, 2), Rational(1, 3));
    CHECK(indicial_roots(d) == std::pair{Rational(1, 6), Rational(0)});
    std::mt19937_64 rng(21);
    for (const auto& s : testing::random_params(rng, 50)) {
        auto [r1, r2] = indicial_roots(s);
        CHECK(r1 + r2 == Rational(1, 6));
        CHECK(r1 * r2 == -s.k1);
        CHECK(Rational(s.k0, 12) + r1 == s.m1);
        CHECK(Rational(s.k0, 12) + r2 == s.m2);
    }
}

TEST_CASE("degenerate pair gives eta^8") {
    auto d = derive_params(Rational(1, 2), Rational(1, 3));
    CHECK(frobenius_solve(d, Component::f2, 60) == eta_power(8, 60));
    CHECK(frobenius_solve_direct(d, Component::f2, 60) == eta_power(8, 60));
}

TEST_CASE("normalization and leading exponents") {
    std::mt19937_64 rng(22);
    for (const auto& s : testing::random_params(rng, 20)) {
        for (Component c : {Component::f1, Component::f2}) {
            auto f = frobenius_solve(s, c, 5);
            CHECK(f.leading_exponent() == s.exponent(c));
            CHECK(f.coefficient(0) == 1);
            CHECK(f.order() == 5);
        }
    }
    auto z = frobenius_solve(derive_params(Rational(3, 10), Rational(2, 10)), Component::f1, 0);
    CHECK(z.order() == 0);
}

TEST_CASE("twisted recursion agrees with the direct recursion") {
    std::mt19937_64 rng(23);
    auto samples = testing::random_params(rng, 25);
    for (const auto& s : testing::cross_oracle_grid()) samples.push_back(s);
    for (const auto& s : samples)
        for (Component c : {Component::f1, Component::f2})
            CHECK(frobenius_solve(s, c, 40) == frobenius_solve_direct(s, c, 40));
}

TEST_CASE("solutions annihilate the operator") {
    std::mt19937_64 rng(24);
    for (const auto& s : testing::random_params(rng, 10))
        for (Component c : {Component::f1, Component::f2}) CHECK(mlde_residual(frobenius_solve(s, c, 30), s).is_zero());
    auto p = derive_params(Rational(3, 10), Rational(2, 10));
    auto eta4 = eta_power(4, 30);
    auto residual = mlde_residual(eta4, p);
    CHECK(!residual.is_zero());
    CHECK(residual == Rational(1, 225) * (eisenstein(4, residual.order()) * eta_power(4, residual.order())));
    CHECK(mlde_residual(QExpansion::zero(5), p).is_zero());
}

TEST_CASE("progress callback") {
    auto p = derive_params(Rational(3, 10), Rational(2, 10));
    std::vector<long> seen;
    SolveOptions opt{[&](long n) { seen.push_back(n); }, 10};
    frobenius_solve(p, Component::f1, 35, opt);
    CHECK(seen == std::vector<long>{10, 20, 30});
}

TEST_CASE("component names") {
    CHECK(parse_component("f1") == Component::f1);
    CHECK(to_string(Component::f2) == "f2");
    CHECK_THROWS_AS(parse_component("f3"), ParameterError);
}
