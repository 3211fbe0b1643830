#include <doctest.h>

#include <cmath>

#include "core/rng.hpp"
#include "core/scalar_algebra.hpp"

using namespace fuzznorm;

TEST_CASE("t-norm closed forms") {
    CHECK(TNorm::standard_intersection().eval(0.3, 0.7) == doctest::Approx(0.3));
    CHECK(TNorm::bounded_difference().eval(0.5, 0.7) == doctest::Approx(0.2));
    CHECK(TNorm::drastic().eval(0.5, 0.7) == 0.0);
    CHECK(TNorm::algebraic_product().eval(0.5, 0.5) == doctest::Approx(0.25));

    // identity with 1 for every kind
    Rng rng(3);
    const TNorm kinds[] = {TNorm::standard_intersection(), TNorm::algebraic_product(),
                           TNorm::bounded_difference(), TNorm::drastic()};
    for (const auto& t : kinds)
        for (int i = 0; i < 100; ++i) {
            double a = rng.uniform();
            CHECK(t.eval(a, 1.0) == doctest::Approx(a).epsilon(1e-15));
        }

    CHECK_THROWS_AS(TNorm::standard_intersection().eval(1.2, 0.5), std::domain_error);
    CHECK_THROWS_AS(TNorm::standard_intersection().eval(0.5, -0.1), std::domain_error);
    CHECK_THROWS_AS(TNorm::from_name("nope"), ConfigError);
}

TEST_CASE("t-norm powers") {
    CHECK(TNorm::standard_intersection().power(0.4, 5) == doctest::Approx(0.4));
    CHECK(TNorm::algebraic_product().power(0.5, 3) == doctest::Approx(0.125));
    CHECK(TNorm::bounded_difference().power(0.9, 2) == doctest::Approx(0.8));

    // non-increasing in n
    Rng rng(11);
    for (const auto& t : {TNorm::standard_intersection(), TNorm::algebraic_product(),
                          TNorm::bounded_difference(), TNorm::drastic()}) {
        for (int i = 0; i < 50; ++i) {
            double a = rng.uniform();
            double prev = t.power(a, 1);
            for (int n = 2; n <= 6; ++n) {
                double cur = t.power(a, n);
                CHECK(cur <= prev + 1e-15);
                prev = cur;
            }
        }
    }
}

TEST_CASE("t-norm axiom check on the built-ins") {
    for (const auto& t : {TNorm::standard_intersection(), TNorm::algebraic_product(),
                          TNorm::bounded_difference(), TNorm::drastic()}) {
        AxiomReport rep = tnorm_axiom_check(t, 10000, 7, 1e-12);
        CHECK(rep.all_passed());
    }
}

TEST_CASE("drastic fails (T1) with witness a = 0.5") {
    AxiomReport rep = tnorm_axiom_check(TNorm::drastic(), 10000, 7, 1e-12);
    const AxiomFinding* t1 = rep.find("t1-positivity");
    REQUIRE(t1 != nullptr);
    CHECK(t1->informational);
    CHECK_FALSE(t1->passed);
    CHECK(t1->witness.at("a").get<double>() == doctest::Approx(0.5));
    CHECK(t1->witness.at("value").get<double>() == 0.0);
    CHECK(rep.all_passed());  // (T1) never gates
}

TEST_CASE("averaging pseudo-norm fails the identity axiom") {
    TNorm avg = TNorm::custom("averaging", [](double a, double b) { return 0.5 * (a + b); },
                              ContinuityClass::Continuous);
    AxiomReport rep = tnorm_axiom_check(avg, 10000, 7, 1e-12);
    const AxiomFinding* ident = rep.find("identity");
    REQUIRE(ident != nullptr);
    CHECK_FALSE(ident->passed);
    CHECK(ident->witness.at("a").get<double>() == doctest::Approx(0.5));
    CHECK(ident->witness.at("value").get<double>() == doctest::Approx(0.75));
    CHECK_FALSE(rep.all_passed());
}

TEST_CASE("phi closed forms and inverse") {
    CHECK(PhiFunction::abs_power(2.0)(-3.0) == doctest::Approx(9.0));
    CHECK(PhiFunction::abs()(1.0) == doctest::Approx(1.0));
    CHECK(PhiFunction::abs_power(0.5)(1.0) == doctest::Approx(1.0));
    CHECK(PhiFunction::rational_example(1)(1.0) == doctest::Approx(1.0));
    CHECK(PhiFunction::rational_example(2)(1.0) == doctest::Approx(1.0));

    CHECK(PhiFunction::abs_power(2.0).inverse(9.0, 1e-10) == doctest::Approx(3.0));
    CHECK(PhiFunction::abs().inverse(1.0, 1e-10) == doctest::Approx(1.0));
    CHECK(PhiFunction::abs_power(3.0).inverse(8.0, 1e-10) == doctest::Approx(2.0));

    // inverse ∘ eval is the identity on (0, inf) for the power family
    for (const auto& f : {PhiFunction::abs(), PhiFunction::abs_power(0.5),
                          PhiFunction::abs_power(2.0), PhiFunction::rational_example(1)}) {
        for (double c : {1e-3, 0.1, 1.0, 7.5, 1e3}) {
            double y = f(c);
            CHECK(f.inverse(y, 1e-12) == doctest::Approx(c).epsilon(1e-8));
        }
    }

    CHECK_THROWS_AS(PhiFunction::abs().inverse(-1.0, 1e-10), std::domain_error);
}

TEST_CASE("phi axiom check") {
    CHECK(phi_axiom_check(PhiFunction::abs(), 1000, 1e-12).all_passed());
    CHECK(phi_axiom_check(PhiFunction::abs_power(0.5), 1000, 1e-12).all_passed());
    CHECK(phi_axiom_check(PhiFunction::abs_power(2.0), 1000, 1e-12).all_passed());
    CHECK(phi_axiom_check(PhiFunction::rational_example(1), 1000, 1e-12).all_passed());

    PhiFunction c1 = PhiFunction::custom("constant-one", [](double) { return 1.0; });
    AxiomReport rep = phi_axiom_check(c1, 1000, 1e-12);
    CHECK_FALSE(rep.find("phi3-strictly-increasing")->passed);
    CHECK_FALSE(rep.find("phi4-limits")->passed);
    CHECK_FALSE(rep.all_passed());
}
