#include <doctest.h>

#include "core/sequences.hpp"

using namespace fuzznorm;

namespace {

FuzzySpace reciprocal_space() {
    return FuzzySpace("rec", CrispFunctional(2, 1.0), Profile::reciprocal(),
                      TNorm::standard_intersection(), 1.0);
}

Vector vec2(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

}  // namespace

TEST_CASE("decay family alpha-fuzzy trace has the closed form 2||v||/n") {
    FuzzySpace sp = reciprocal_space();
    Vector x = vec2(1, 0), v = vec2(0, 2);
    SequenceSpec seq = SequenceSpec::power_decay(x, v, 1.0);

    SeqVerdict verdict = seq_convergence(sp, seq, SeqMode::alpha_fuzzy(0.5), 500, 2e-2);
    CHECK(verdict.outcome == SeqOutcome::Converges);
    // lambda_n = q_strict(1 - alpha) * ||v|| / n = 2 * 2 / n at alpha = 1/2
    for (const auto& row : verdict.trace) {
        int n = row.at("n").get<int>();
        double lam = row.at("lambda").get<double>();
        CHECK(lam == doctest::Approx(4.0 / n).epsilon(1e-7));
    }
}

TEST_CASE("classical and l-fuzzy convergence verdicts") {
    FuzzySpace sp = reciprocal_space();
    Vector x = vec2(1, 0), v = vec2(0, 1);
    std::vector<double> grid{0.1, 0.3, 0.5, 0.7, 0.9};

    SequenceSpec decay = SequenceSpec::power_decay(x, v, 1.0);
    CHECK(seq_convergence(sp, decay, SeqMode::classical(), 1000, 2e-2).outcome ==
          SeqOutcome::Converges);
    CHECK(seq_convergence(sp, decay, SeqMode::l_fuzzy(grid), 1000, 2e-1).outcome ==
          SeqOutcome::Converges);

    SequenceSpec constant = SequenceSpec::table_of({x}, x);
    SeqVerdict cv = seq_convergence(sp, constant, SeqMode::alpha_fuzzy(0.5), 200, 1e-9);
    CHECK(cv.outcome == SeqOutcome::Converges);
    for (const auto& row : cv.trace) CHECK(row.at("lambda").get<double>() == 0.0);

    SequenceSpec offset = SequenceSpec::table_of({x + v}, x);
    SeqVerdict ov = seq_convergence(sp, offset, SeqMode::classical(), 500, 2e-2);
    CHECK(ov.outcome == SeqOutcome::Diverges);
    CHECK_FALSE(ov.witness.is_null());
    CHECK(seq_convergence(sp, offset, SeqMode::alpha_fuzzy(0.5), 500, 2e-2).outcome ==
          SeqOutcome::Diverges);
}

TEST_CASE("geometric decay converges") {
    FuzzySpace sp = reciprocal_space();
    SequenceSpec seq = SequenceSpec::geometric(vec2(0, 0), vec2(3, 1), 0.5);
    CHECK(seq_convergence(sp, seq, SeqMode::alpha_fuzzy(0.3), 60, 1e-9).outcome ==
          SeqOutcome::Converges);
}

TEST_CASE("cauchy verdicts") {
    FuzzySpace sp = reciprocal_space();
    Vector x = vec2(1, 0), v = vec2(0, 1);
    std::vector<double> grid{0.1, 0.5, 0.9};

    SequenceSpec decay = SequenceSpec::power_decay(x, v, 1.0);
    CHECK(seq_cauchy(sp, decay, SeqMode::alpha_fuzzy(0.5), 1000, 2e-2).outcome ==
          SeqOutcome::Converges);
    CHECK(seq_cauchy(sp, decay, SeqMode::classical(), 1000, 2e-2).outcome ==
          SeqOutcome::Converges);

    SequenceSpec constant = SequenceSpec::table_of({x}, x);
    CHECK(seq_cauchy(sp, constant, SeqMode::l_fuzzy(grid), 200, 1e-12).outcome ==
          SeqOutcome::Converges);

    // the constant offset is Cauchy even though it misses the declared limit
    SequenceSpec offset = SequenceSpec::table_of({x + v}, x);
    CHECK(seq_cauchy(sp, offset, SeqMode::alpha_fuzzy(0.5), 200, 1e-12).outcome ==
          SeqOutcome::Converges);
    CHECK(seq_convergence(sp, offset, SeqMode::alpha_fuzzy(0.5), 200, 1e-2).outcome ==
          SeqOutcome::Diverges);

    SequenceSpec alternating = SequenceSpec::table_of({x + v, x - v}, x);
    SeqVerdict av = seq_cauchy(sp, alternating, SeqMode::alpha_fuzzy(0.5), 200, 1e-2);
    CHECK(av.outcome == SeqOutcome::Diverges);
    CHECK_FALSE(av.witness.is_null());
    CHECK(av.witness.contains("n"));
    CHECK(av.witness.contains("m"));
}

TEST_CASE("sequence spec validation") {
    CHECK_THROWS_AS(SequenceSpec::power_decay(vec2(0, 0), vec2(1, 0), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(SequenceSpec::geometric(vec2(0, 0), vec2(1, 0), 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(SequenceSpec::table_of({}, vec2(0, 0)), std::invalid_argument);

    SequenceSpec tab = SequenceSpec::table_of({vec2(1, 0), vec2(2, 0)}, vec2(0, 0));
    CHECK(tab.at(1) == vec2(1, 0));
    CHECK(tab.at(2) == vec2(2, 0));
    CHECK(tab.at(3) == vec2(1, 0));  // cyclic
}
