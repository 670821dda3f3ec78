#include "doctest.h"
#include "vvmf/reproduction.hpp"

using namespace vvmf;

TEST_CASE("claim denominators") {
    auto claims = published_claims();
    REQUIRE(claims.size() == 3);
    CHECK(claims[0].denominator.exponent(3) == 2);
    CHECK(claims[0].denominator.exponent(13) == 1);
    for (auto q : primes_in_progression(10, 9, 10000)) CHECK(claims[0].denominator.exponent(q) == 1);
    CHECK(claims[0].denominator.exponent(10009) == 0);
    CHECK(claims[1].denominator.exponent(10009) == 1);
    CHECK(claims[1].denominator.exponent(13) == 0);
    CHECK(claims[2].denominator.exponent(919) == 0);
    CHECK(claims[2].denominator.exponent(929) == 1);
    CHECK(claims[2].denominator.exponent(3) == 0);
    CHECK(claims[1].denominator.size() == claims[0].denominator.size());
}

TEST_CASE("rescaling solver") {
    PrimeTable table(1000);
    // c * (1/7) must be integral and c * (5/3) must have denominator 3.
    auto c = solve_rescaling({Rational(1, 7), Rational(5, 3)}, {PrimeFactorization(), PrimeFactorization({{3, 1}})}, table);
    REQUIRE(c.has_value());
    CHECK(c->value() == 7);
    // Forced exponents that disagree.
    auto bad = solve_rescaling({Rational(1, 3), Rational(1, 9)},
                               {PrimeFactorization({{3, 1}}), PrimeFactorization({{3, 1}})}, table);
    CHECK(!bad.has_value());
    // A forced exponent violating another coefficient's integrality bound.
    auto bound = solve_rescaling({Rational(1, 9), Rational(1)},
                                 {PrimeFactorization(), PrimeFactorization({{3, 1}})}, table);
    CHECK(!bound.has_value());
    auto zero = solve_rescaling({Rational(0)}, {PrimeFactorization()}, table);
    CHECK(!zero.has_value());
}

TEST_CASE("small-scale sanity on the progression-bearing components") {
    auto p = derive_params(Rational(3, 10), Rational(2, 10));
    auto f1 = frobenius_solve(p, Component::f1, 3);
    auto f2 = frobenius_solve(p, Component::f2, 3);
    CHECK(padic_valuation(f1.coefficient(1), 11) == Valuation::finite(-1));
    CHECK(padic_valuation(f2.coefficient(2), 19) == Valuation::finite(-1));
    auto report = check_published_claims(p, f1, f2);
    CHECK(!report.pass());
    CHECK(report.assignments.size() == 4);
    for (const auto& a : report.assignments) CHECK(a.strict.empty());
}

TEST_CASE("full reproduction run") {
    auto report = reproduce_published();
    CHECK(report.order == 1002);
    REQUIRE(report.pass());
    const auto& chosen = report.assignments[*report.chosen];
    CHECK(chosen.component == Component::f2);
    CHECK(chosen.offset == 0);
    CHECK(!chosen.strict_match);
    CHECK(chosen.rescaled_match);
    CHECK(chosen.rescaling->to_string() == "7 * 17 * 19 * 23 * 37 * 43 * 47 * 53 * 67 * 73 * 83 * 97");
    // Before rescaling the only denominator primes off the progression 10n + 9 are small.
    for (const auto& c : chosen.strict)
        for (const auto& f : c.observed.factors())
            if (f.prime % 10 != 9) CHECK(f.prime < 100);
    for (const auto& a : report.assignments)
        if (&a != &chosen) CHECK(!a.rescaled_match);
}
