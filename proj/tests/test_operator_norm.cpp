#include <doctest.h>

#include <cmath>

#include "core/operator_norm.hpp"
#include "core/rng.hpp"

using namespace fuzznorm;

namespace {

FuzzySpace rec_space(int dim = 2, double p = 1.0) {
    return FuzzySpace("rec", CrispFunctional(dim, p), Profile::reciprocal(),
                      TNorm::standard_intersection(), p == 1.0 ? std::optional<double>(1.0)
                                                               : std::nullopt);
}

FuzzySpace step_space(int dim = 2) {
    return FuzzySpace("step", CrispFunctional(dim, 1.0), Profile::step(0.5),
                      TNorm::standard_intersection(), 1.0);
}

LinearOperator scaled_identity(double c, const FuzzySpace& sp) {
    int n = sp.dimension();
    return LinearOperator(c * Matrix::Identity(n, n), sp, sp);
}

const std::vector<double> kGrid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

}  // namespace

TEST_CASE("g closed forms on the reciprocal space") {
    FuzzySpace y = rec_space();
    OperatorNormCalculator ident(scaled_identity(1.0, y), 64, 7);
    CHECK(ident.g_alpha(0.5) == doctest::Approx(1.0).epsilon(1e-10));

    OperatorNormCalculator dbl(scaled_identity(2.0, y), 64, 7);
    CHECK(dbl.g_alpha(0.75) == doctest::Approx(6.0).epsilon(1e-10));

    OperatorNormCalculator zero(scaled_identity(0.0, y), 64, 7);
    for (double a : kGrid) CHECK(zero.g_alpha(a) == 0.0);

    // sampled direction sup agrees with the SVD closed form from below
    Rng rng(3);
    for (int i = 0; i < 10; ++i) {
        Matrix a(2, 2);
        a << rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian();
        OperatorNormCalculator c(LinearOperator(a, y, y), 512, 7);
        CHECK(c.direction_sup() ==
              doctest::Approx(c.direction_sup_closed_form()).epsilon(2e-4));
        CHECK(c.direction_sup() <= c.direction_sup_closed_form() + 1e-12);
    }
}

TEST_CASE("operator fuzzy norm values") {
    FuzzySpace y = rec_space();
    OperatorNormCalculator ident(scaled_identity(1.0, y), 64, 7);
    CHECK(ident.norm(1.0) == doctest::Approx(0.5).epsilon(2e-6));
    CHECK(ident.norm(-1.0) == 0.0);
    CHECK(ident.norm(0.0) == 0.0);

    OperatorNormCalculator dbl(scaled_identity(2.0, y), 64, 7);
    CHECK(dbl.norm(2.0) == doctest::Approx(0.5).epsilon(2e-6));

    OperatorNormCalculator zero(scaled_identity(0.0, y), 64, 7);
    CHECK(zero.norm(0.01) == 1.0);
    CHECK(zero.norm(0.0) == 0.0);  // the (0,0) corner

    // N(I, s) = s / (1 + s)
    for (double s : {0.5, 1.0, 3.0}) {
        CHECK(std::fabs(ident.norm(s) - s / (1.0 + s)) <= 1e-6);
        CHECK(*ident.norm_closed_form(s) == doctest::Approx(s / (1.0 + s)));
    }
}

TEST_CASE("norm is monotone in s and bisection matches the closed form") {
    FuzzySpace y = rec_space();
    Rng rng(9);
    for (int i = 0; i < 6; ++i) {
        Matrix a(2, 2);
        a << rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian();
        OperatorNormCalculator c(LinearOperator(a, y, y), 128, 7);
        double prev = 0.0;
        for (double s = 0.25; s <= 8.0; s *= 2.0) {
            double v = c.norm(s, 1e-7);
            CHECK(v >= prev - 1e-6);
            CHECK(std::fabs(v - *c.norm_closed_form(s)) <= 1e-6);
            prev = v;
        }
    }
}

TEST_CASE("phi-scaling identity for p in {1, 2}") {
    for (double p : {1.0, 2.0}) {
        FuzzySpace sp = rec_space(2, p);
        OperatorNormCalculator base(scaled_identity(1.0, sp), 64, 7);
        for (double lam : {2.0, 3.0, 0.5}) {
            OperatorNormCalculator scaled(scaled_identity(lam, sp), 64, 7);
            for (double s : {0.5, 1.0, 3.0}) {
                double lhs = scaled.norm(s);
                double rhs = base.norm(s / sp.phi()(lam));
                CHECK(std::fabs(lhs - rhs) <= 2e-6);
            }
        }
    }
}

TEST_CASE("preconditions are rejected at configuration") {
    // non-NVI domain
    CHECK_THROWS_AS(OperatorNormCalculator(
                        LinearOperator(Matrix::Identity(2, 2), step_space(), rec_space()), 16, 7),
                    PreconditionError);
    // drastic codomain t-norm is not lower semicontinuous
    FuzzySpace bad("drastic", CrispFunctional(2, 1.0), Profile::reciprocal(), TNorm::drastic(),
                   1.0);
    CHECK_THROWS_AS(OperatorNormCalculator(
                        LinearOperator(Matrix::Identity(2, 2), rec_space(), bad), 16, 7),
                    PreconditionError);
}

TEST_CASE("g is monotone on the grid") {
    FuzzySpace y = rec_space();
    Rng rng(21);
    for (int i = 0; i < 8; ++i) {
        Matrix a(2, 2);
        a << rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian();
        OperatorNormProfile prof =
            opnorm_profile(OperatorNormCalculator(LinearOperator(a, y, y), 64, 7), kGrid);
        CHECK(prof.monotone);
    }
}

TEST_CASE("operator norm level infimum matches g") {
    FuzzySpace y = rec_space();
    OperatorNormCalculator dbl(scaled_identity(2.0, y), 64, 7);
    // N(2I, s) = s/(s+2); inf{s : N >= alpha} solves to 2 alpha/(1-alpha)
    for (double alpha : {0.25, 0.5, 0.75}) {
        double want = 2.0 * alpha / (1.0 - alpha);
        CHECK(dbl.level_infimum(alpha, false) == doctest::Approx(want).epsilon(1e-5));
        CHECK(dbl.level_infimum(alpha, true) == doctest::Approx(want).epsilon(1e-5));
    }
    OperatorNormCalculator zero(scaled_identity(0.0, y), 16, 7);
    CHECK(zero.level_infimum(0.5, false) == 0.0);
}

TEST_CASE("opnorm axiom fleet") {
    FuzzySpace y = rec_space();
    Rng rng(31);
    std::vector<LinearOperator> fleet;
    fleet.push_back(scaled_identity(1.0, y));
    fleet.push_back(scaled_identity(2.0, y));
    for (int i = 0; i < 4; ++i) {
        Matrix a(2, 2);
        a << rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian();
        fleet.emplace_back(a, y, y);
    }
    fleet.push_back(scaled_identity(0.0, y));

    AxiomReport rep = opnorm_axiom_check(fleet, {2.0, 3.0, 0.5}, {0.5, 1.0, 3.0}, kGrid, 7,
                                         1e-6, 1e-9, 64);
    CHECK(rep.all_passed());
    CHECK(rep.find("niv-k-triangle")->passed);
    CHECK(rep.find("niii-scaling")->passed);
}
