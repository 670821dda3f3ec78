#include "doctest.h"
#include "samples.hpp"
#include "vvmf/classical_forms.hpp"
#include "vvmf/denominators.hpp"
#include "vvmf/hypergeom.hpp"

using namespace vvmf;

namespace {

QExpansion S(Rational lead, std::vector<Rational> c) { return QExpansion::from_coefficients(lead, c); }

}  // namespace

TEST_CASE("analyze a hand-built series") {
    auto r = analyze(S(0, {1, Rational(1, 3), Rational(1, 9)}), 1, {0});
    CHECK(r.first_occurrence.size() == 1);
    CHECK(r.first_occurrence.at(3) == FirstOccurrence{1, -1});
    REQUIRE(r.lcm_prefix.size() == 3);
    CHECK(r.lcm_prefix[0].lcm.value() == 1);
    CHECK(r.lcm_prefix[1].lcm.value() == 3);
    CHECK(r.lcm_prefix[2].lcm.value() == 9);
    CHECK(r.per_index[2].progression_hits == std::vector<ProgressionHit>{{3, -2}});
}

TEST_CASE("analyze an integral series") {
    auto r = analyze(eta_power(8, 40), 10, {1, 9});
    CHECK(r.first_occurrence.empty());
    for (const auto& c : r.lcm_prefix) CHECK(c.lcm.empty());
    CHECK(r.residues == std::vector<long>{1, 9});
}

TEST_CASE("analyze the (3/10, 2/10) solution") {
    auto p = derive_params(Rational(3, 10), Rational(2, 10));
    auto f1 = frobenius_solve(p, Component::f1, 50);
    auto r = analyze(f1, 10, {1, -1}, {nullptr, 5});
    CHECK(r.residues == std::vector<long>{1, 9});
    CHECK(r.lcm_prefix.size() == 11);
    CHECK(r.lcm_prefix.back().n == 50);

    // Independent recomputation of every recorded valuation.
    for (const auto& [prime, occ] : r.first_occurrence) {
        CHECK(padic_valuation(f1.coefficient(occ.index), static_cast<long>(prime)) == Valuation::finite(occ.valuation));
        for (long m = 0; m < occ.index; ++m)
            CHECK(padic_valuation(f1.coefficient(m), static_cast<long>(prime)) >= Valuation::finite(0));
    }
    // Primes 10n + 1 enter exactly where the closed product C_n carries them.
    auto C = closed_products(1, 10, 50, ProductBranch::plus);
    for (auto prime : primes_in_progression(10, 1, 501)) {
        long n = (static_cast<long>(prime) - 1) / 10;
        REQUIRE(r.first_occurrence.count(prime));
        CHECK(r.first_occurrence.at(prime) == FirstOccurrence{n, -1});
        CHECK(padic_valuation(C[n], static_cast<long>(prime)) == Valuation::finite(-1));
    }
    for (std::size_t i = 1; i < r.lcm_prefix.size(); ++i)
        for (const auto& f : r.lcm_prefix[i - 1].lcm.factors()) CHECK(r.lcm_prefix[i].lcm.exponent(f.prime) >= f.exponent);
}

TEST_CASE("analyze flags residues beyond the sieve") {
    PrimeTable small(50);
    Integer big = Integer(10007) * 10009;
    auto r = analyze(QExpansion::from_integers(0, {big, 1}, big), 10, {7}, {&small, 1});
    REQUIRE(r.per_index[1].unfactored_residue.has_value());
    CHECK(*r.per_index[1].unfactored_residue == big);
    CHECK(!r.per_index[0].unfactored_residue.has_value());
}

TEST_CASE("Proposition-style certificate") {
    auto p = derive_params(Rational(3, 10), Rational(2, 10));
    auto v = verify_prop2(p, 101);
    CHECK(v.pass());
    CHECK(v.cases().size() == 6);

    auto mirrored = verify_prop2(derive_params(Rational(2, 10), Rational(3, 10)), 100);
    CHECK(mirrored.pass());
    CHECK(mirrored.cases().size() == 5);
    // Swapping the exponents swaps the components, so the primes 10n + 1 move to f2.
    CHECK(mirrored.cases()[0].description == "p=11 on f2");

    auto six = verify_prop2(derive_params(Rational(1, 2), Rational(1, 3)), 40);
    CHECK(six.pass());
    CHECK(six.cases()[0].description == "p=7 on f1");
    CHECK(six.cases()[2].description == "p=19 on f1");

    auto shallow = verify_prop2(p, frobenius_solve(p, Component::f1, 5), 101);
    CHECK(!shallow.pass());
    CHECK(shallow.inconclusive());

    CHECK_THROWS_AS(verify_prop2(derive_params(Rational(5, 12), Rational(1, 12)), 50), ParameterError);
}

TEST_CASE("classification") {
    auto c3 = classify(derive_params(Rational(5, 12), Rational(1, 12)));
    CHECK(c3.bounded_expected);
    CHECK(c3.Q == 3);
    auto c10 = classify(derive_params(Rational(3, 10), Rational(2, 10)));
    CHECK(!c10.bounded_expected);
    CHECK(c10.residue == 1);
    CHECK(c10.component == Component::f1);
    CHECK(c10.description == "unbounded: Q = 10 >= 6, progression 10n + 1 on component f1");
    auto c6 = classify(derive_params(Rational(1, 2), Rational(1, 3)));
    CHECK(!c6.bounded_expected);
    CHECK(c6.Q == 6);
    // Depends only on Q and the sign of P.
    for (long k0 : {-3L, 0L, 5L, 11L}) {
        auto c = classify(testing::pair_for(1, 10, k0));
        CHECK(c.description == c10.description);
        auto m = classify(testing::pair_for(-1, 10, k0));
        CHECK(m.component == Component::f2);
    }
}

TEST_CASE("bounded check") {
    auto integral = bounded_check(eta_power(8, 40));
    CHECK(integral.stabilized);
    CHECK(integral.clearing == 1);
    auto hand = bounded_check(S(0, {1, Rational(1, 2), Rational(1, 4), Rational(3, 4), Rational(5, 4), Rational(1, 4),
                                    Rational(7, 4), Rational(1, 4)}));
    CHECK(hand.stabilized);
    CHECK(hand.clearing == 4);
    auto p = derive_params(Rational(3, 10), Rational(2, 10));
    auto growing = bounded_check(frobenius_solve(p, Component::f1, 200));
    CHECK(!growing.stabilized);
    CHECK(growing.growth.back().first >= growing.window_start);
    CHECK_THROWS_AS(bounded_check(eta_power(1, 5), 0.0), ParameterError);
}
