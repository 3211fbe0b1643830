// Acceptance suite: one line per criterion, pinned tolerances, exit code =
// number of failures. Criterion 12 drives the CLI binary end to end.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "core/completeness.hpp"
#include "core/operator_norm.hpp"
#include "core/rng.hpp"
#include "core/runner.hpp"

using namespace fuzznorm;

namespace {

int g_failed = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail = "") {
    std::printf("[%s] C%-2d %s%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failed;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FuzzySpace rec_space(const std::string& name, int dim, double p = 1.0) {
    return FuzzySpace(name, CrispFunctional(dim, p), Profile::reciprocal(),
                      TNorm::standard_intersection(),
                      p == 1.0 ? std::optional<double>(1.0) : std::nullopt);
}

FuzzySpace step_space(const std::string& name, int dim) {
    return FuzzySpace(name, CrispFunctional(dim, 1.0), Profile::step(0.5),
                      TNorm::standard_intersection(), 1.0);
}

const std::vector<double> kGrid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

// ---- C1: t-norm axioms at 1e-12 on 1e4 triples, averaging control -------
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& t : {TNorm::standard_intersection(), TNorm::algebraic_product(),
                          TNorm::bounded_difference(), TNorm::drastic()}) {
        AxiomReport rep = tnorm_axiom_check(t, 10000, 7, 1e-12);
        if (!rep.all_passed()) {
            ok = false;
            detail = t.name() + " failed an axiom";
        }
    }
    TNorm avg = TNorm::custom("averaging", [](double a, double b) { return 0.5 * (a + b); },
                              ContinuityClass::Continuous);
    const AxiomFinding* ident = tnorm_axiom_check(avg, 10000, 7, 1e-12).find("identity");
    if (ident->passed || ident->witness.is_null()) {
        ok = false;
        detail = "averaging control did not fail identity with a witness";
    }
    double secs = seconds_since(t0);
    if (secs >= 1.0) {
        ok = false;
        detail = "runtime " + std::to_string(secs) + "s >= 1s";
    }
    report(1, ok, "t-norm axioms on 1e4 triples at 1e-12 + averaging control", detail);
}

// ---- C2: level-infimum bisection vs closed-form quantiles at 1e-9 -------
void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    FuzzySpace rec = rec_space("rec", 2);
    FuzzySpace st = step_space("step", 2);
    double worst = 0.0;
    Rng rng(7, "acceptance-c2");
    for (const FuzzySpace* sp : {&rec, &st}) {
        for (int i = 0; i < 100; ++i) {
            Vector x(2);
            double scale = rng.log_uniform(0.1, 10.0);
            x << rng.gaussian() * scale, rng.gaussian() * scale;
            if (x.isZero(0.0)) continue;
            double nx = x.norm();
            for (double alpha : kGrid) {
                double got = sp->level_value(x, alpha, false);
                double want = sp->profile().kind() == ProfileKind::Reciprocal
                                  ? nx / (1.0 - alpha)
                                  : (alpha <= 0.5 ? 0.0 : nx);
                worst = std::max(worst, std::fabs(got - want));
            }
        }
    }
    double secs = seconds_since(t0);
    bool ok = worst <= 1e-9 && secs < 5.0;
    std::ostringstream d;
    d << "worst |bisect - closed| = " << worst << ", " << secs << "s";
    report(2, ok, "level-infimum bisection matches the quantile closed forms at 1e-9",
           d.str());
}

// ---- C3: bN1-bN5 for reciprocal p in {1,2} and step p=1 at 1e-9 ---------
void criterion_3() {
    bool ok = true;
    std::string detail;
    struct Row {
        FuzzySpace sp;
        const char* label;
    };
    const Row rows[] = {{rec_space("rec-p1", 2, 1.0), "reciprocal p=1"},
                        {rec_space("rec-p2", 2, 2.0), "reciprocal p=2 (K=2)"},
                        {step_space("step-p1", 2), "step p=1"}};
    for (const auto& row : rows) {
        AxiomReport rep = axiom_check_bn(row.sp, 10000, 7, 1e-9);
        if (!rep.all_passed() || !rep.find("bn4-triangle")->passed ||
            !rep.find("crisp-b-triangle")->passed) {
            ok = false;
            detail = std::string(row.label) + " failed";
        }
    }
    report(3, ok,
           "bN1-bN5 on 1e4 tuples at 1e-9 incl. the K=2^(p-1) triangle for p=2", detail);
}

// ---- C4: the continuous-but-unbounded counterexample ---------------------
void criterion_4() {
    auto t0 = std::chrono::steady_clock::now();
    CounterexampleReport rep = counterexample_suite(2, kGrid, 512, 1000, 7);
    bool ok = rep.continuous && !rep.bounded && rep.matches_expected;
    std::string detail;
    for (const auto& e : rep.certificate.entries) {
        if (e.alpha < 0.5 - 1e-12) {
            if (e.unbounded || std::fabs(e.m - 2.0 / (1.0 - e.alpha)) > 1e-6) {
                ok = false;
                detail = "M_alpha off the closed form at alpha=" + std::to_string(e.alpha);
            }
        } else if (!e.unbounded) {
            ok = false;
            detail = "expected UNBOUNDED at alpha=" + std::to_string(e.alpha);
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 10.0) {
        ok = false;
        detail = "runtime " + std::to_string(secs) + "s >= 10s";
    }
    report(4, ok,
           "counterexample: continuous, unbounded exactly on alpha >= 0.5, "
           "M = 2/(1-alpha) within 1e-6",
           detail);
}

// ---- C5: definition equivalence with zero violations ---------------------
void criterion_5() {
    FuzzySpace x = step_space("X", 2), y = rec_space("Y", 2);
    LinearOperator doubling(2.0 * Matrix::Identity(2, 2), x, y);
    LinearOperator ident(Matrix::Identity(2, 2), y, y);

    bool ok = true;
    std::string detail;
    BoundednessCertificate dc = bounded_certificate(doubling, kGrid, 512, 7);
    EquivalenceVerdict e1 = defn_equivalence_check(doubling, dc, 10000, 7);
    BoundednessCertificate ic = bounded_certificate(ident, kGrid, 512, 7);
    EquivalenceVerdict e2 = defn_equivalence_check(ident, ic, 10000, 7);
    if (!e1.passed || !e2.passed) {
        ok = false;
        detail = "violations on the certified constants";
    }
    if (e1.premise_hits == 0 || e2.premise_hits == 0) {
        ok = false;
        detail = "sampler never hit the relation-(1) premise";
    }
    EquivalenceVerdict halved = defn_equivalence_check(doubling, dc, 10000, 7, 0.5);
    if (halved.passed || halved.witness.is_null()) {
        ok = false;
        detail = "halved constants produced no witness";
    }
    report(5, ok,
           "Eq.(1)<->Eq.(2) equivalence: zero violations on 1e4 samples per certified "
           "(T,alpha); halved M yields a witness",
           detail);
}

// ---- C6: finite-dimension boundedness sweep ------------------------------
void criterion_6() {
    SweepReport good = finite_dim_boundedness_sweep(rec_space("dom", 3), rec_space("cod", 2),
                                                    50, kGrid, 512, 7);
    SweepReport gate = finite_dim_boundedness_sweep(step_space("dom", 2), rec_space("cod", 2),
                                                    50, kGrid, 512, 7);
    bool ok = good.precondition_ok && good.all_bounded && good.operators_checked == 50 &&
              !gate.precondition_ok && gate.operators_checked == 0;
    report(6, ok,
           "50 random operators between NVI spaces certified bounded at every grid alpha; "
           "step domain refuses the theorem",
           ok ? "" : "sweep outcome mismatch");
}

// ---- C7: independence constants and the Lemma 2.1 inequality ------------
void criterion_7() {
    bool ok = true;
    std::string detail;
    struct Case {
        FuzzySpace sp;
        std::vector<Vector> basis;
        double alpha;
    };
    Vector skew1(2), skew2(2);
    skew1 << 2.0, 0.0;
    skew2 << 1.0, 1.0;
    std::vector<Case> cases;
    cases.push_back({rec_space("r2", 2),
                     {Vector::Unit(2, 0), Vector::Unit(2, 1)}, 0.5});
    cases.push_back({rec_space("r3", 3),
                     {Vector::Unit(3, 0), Vector::Unit(3, 1), Vector::Unit(3, 2)}, 0.3});
    cases.push_back({rec_space("r2s", 2), {skew1, skew2}, 0.5});
    for (const auto& c : cases) {
        IndependenceConstant ic = independence_constant(c.sp, c.basis, c.alpha, 24);
        if (!(ic.positivity_checked && ic.positivity_ok && ic.c_alpha > 0.0)) {
            ok = false;
            detail = "c_alpha not positive on an NVI space";
        }
        Lemma21Verdict lv = lemma21_inequality_check(c.sp, ic, 1000, 7, 1e-9);
        if (!lv.passed) {
            ok = false;
            std::ostringstream d;
            d << lv.violations << " violations beyond 1e-9";
            detail = d.str();
        }
    }
    report(7, ok,
           "Lemma 2.1: c_alpha > 0 on NVI spaces; inequality holds on 1e3 coefficient "
           "vectors per basis at 1e-9",
           detail);
}

// ---- C8: operator norm closed form ---------------------------------------
void criterion_8() {
    FuzzySpace y = rec_space("Y", 2);
    OperatorNormCalculator ident(LinearOperator(Matrix::Identity(2, 2), y, y), 512, 7);
    OperatorNormCalculator zero(LinearOperator(Matrix::Zero(2, 2), y, y), 512, 7);

    bool ok = true;
    std::string detail;
    for (double s : {0.5, 1.0, 3.0}) {
        double got = ident.norm(s);
        if (std::fabs(got - s / (1.0 + s)) > 1e-6) {
            ok = false;
            detail = "N(I, " + std::to_string(s) + ") off the closed form";
        }
        if (zero.norm(s) != 1.0) {
            ok = false;
            detail = "N(0, s) != 1 for s > 0";
        }
    }
    for (double s : {-2.0, -0.5, 0.0}) {
        if (ident.norm(s) != 0.0 || zero.norm(s) != 0.0) {
            ok = false;
            detail = "N(T, s) != 0 for s <= 0";
        }
    }
    report(8, ok, "operator norm: N(I,s) = s/(1+s) within 1e-6; N(0,s)=1; N(T,s<=0)=0",
           detail);
}

// ---- C9: Thm 4.1 axioms ----------------------------------------------------
void criterion_9() {
    bool ok = true;
    std::string detail;

    // scaling for p in {1, 2} within 2e-6
    for (double p : {1.0, 2.0}) {
        FuzzySpace sp = rec_space("S", 2, p);
        Matrix a(2, 2);
        a << 1.0, 0.5, -0.25, 0.75;
        for (const Matrix& m : {Matrix(Matrix::Identity(2, 2)), a}) {
            OperatorNormCalculator base(LinearOperator(m, sp, sp), 512, 7);
            for (double lam : {2.0, 3.0, 0.5}) {
                OperatorNormCalculator scaled(LinearOperator(lam * m, sp, sp), 512, 7);
                for (double s : {0.5, 1.0, 3.0}) {
                    double lhs = scaled.norm(s);
                    double rhs = base.norm(s / sp.phi()(lam));
                    if (std::fabs(lhs - rhs) > 2e-6) {
                        ok = false;
                        detail = "scaling identity beyond 2e-6 at p=" + std::to_string(p);
                    }
                }
            }
        }
    }

    // K-weighted triangle with the min t-norm: 100 random pairs, zero
    // violations beyond 1e-9 (closed-form N on the common reciprocal space
    // keeps equality cases exact)
    FuzzySpace y = rec_space("Y", 2);
    Rng rng(7, "acceptance-c9");
    const double k_const = y.b_constant();
    int violations = 0;
    bool monotone_ok = true;
    for (int pair = 0; pair < 100; ++pair) {
        Matrix a(2, 2), b(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                a(i, j) = rng.gaussian();
                b(i, j) = rng.gaussian();
            }
        OperatorNormCalculator ca(LinearOperator(a, y, y), 128, 7);
        OperatorNormCalculator cb(LinearOperator(b, y, y), 128, 7);
        OperatorNormCalculator cs(LinearOperator(a + b, y, y), 128, 7);
        for (double s : {0.5, 1.0, 3.0}) {
            for (double t : {0.5, 1.0, 3.0}) {
                double lhs = *cs.norm_closed_form(s + k_const * t);
                double rhs = std::min(*ca.norm_closed_form(s), *cb.norm_closed_form(t));
                if (lhs + 1e-9 < rhs) ++violations;
            }
        }
        if (!opnorm_profile(ca, kGrid).monotone || !opnorm_profile(cs, kGrid).monotone)
            monotone_ok = false;
    }
    if (violations > 0) {
        ok = false;
        detail = std::to_string(violations) + " triangle violations beyond 1e-9";
    }
    if (!monotone_ok) {
        ok = false;
        detail = "g not monotone on the grid";
    }
    report(9, ok,
           "operator-norm axioms: phi-scaling within 2e-6 (p in {1,2}); K-weighted "
           "triangle on 100 pairs at 1e-9; g monotone",
           detail);
}

// ---- C10: uniqueness floors ------------------------------------------------
void criterion_10() {
    FuzzySpace y = rec_space("Y", 2);
    Vector x(2), v(2), w(2);
    x << 1.0, 0.0;
    v << 0.0, 1.0;
    w << 1.0, 0.0;
    bool ok = true;
    std::string detail;
    for (double alpha : {0.25, 0.5, 0.75}) {
        SequenceSpec seq = SequenceSpec::power_decay(x, v, 1.0);
        std::vector<Vector> decoys{x + w, x + 2.5 * w};
        UniquenessVerdict uv = limit_uniqueness_probe(y, seq, decoys, alpha, 1000, 1e-6);
        if (!uv.passed) {
            ok = false;
            detail = "probe failed";
            continue;
        }
        double q_strict = 1.0 / alpha;  // strict quantile at level 1 - alpha
        const double dist[] = {1.0, 2.5};
        for (int i = 0; i < 2; ++i) {
            double predicted = q_strict * dist[i];
            if (std::fabs(uv.decoys[i].floor - predicted) > 1e-6) {
                ok = false;
                std::ostringstream d;
                d << "floor " << uv.decoys[i].floor << " vs predicted " << predicted;
                detail = d.str();
            }
        }
    }
    report(10, ok, "uniqueness probe: decoy floors match q_strict(1-alpha)*rho(x-y) "
                   "within 1e-6",
           detail);
}

// ---- C11: completeness instances -------------------------------------------
void criterion_11() {
    FuzzySpace y = rec_space("Y", 2);
    Matrix base(2, 2);
    base << 1.0, 0.25, -0.5, 2.0;
    OperatorSequence seq;
    seq.decay = OperatorSequence::Decay::InverseK;
    seq.base = base;
    seq.perturbation = 0.5 * Matrix::Identity(2, 2);
    seq.n_max = 1000;

    OperatorLimitResult lim = operator_seq_limit(seq, y, y, kGrid, 1e-2, 512, 7);
    bool ok = lim.ok && lim.cauchy_outcome == SeqOutcome::Converges && lim.limit_bounded;
    std::string detail;
    double entry_err =
        lim.limit.size() ? (lim.limit - base).cwiseAbs().maxCoeff() : 1.0;
    if (entry_err > 1e-9) {
        ok = false;
        std::ostringstream d;
        d << "entrywise recovery error " << entry_err;
        detail = d.str();
    }
    for (double r : lim.opnorm_residuals) {
        if (r >= 1e-2) {
            ok = false;
            detail = "operator-norm residual above 1e-2 at the horizon";
        }
    }
    report(11, ok,
           "T + S/k recovered to 1e-9 at horizon 1e3; operator-norm residuals below 1e-2 "
           "at every grid alpha",
           detail);
}

// ---- C12: byte-identical records from the CLI ------------------------------
void criterion_12() {
#ifndef FUZZNORM_CLI_PATH
    report(12, false, "determinism", "CLI path not configured");
#else
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "fuzznorm-acceptance";
    fs::create_directories(dir);
    fs::path out1 = dir / "run1.jsonl", out2 = dir / "run2.jsonl";

    auto run = [&](const fs::path& out) {
        std::string cmd = std::string("\"") + FUZZNORM_CLI_PATH + "\" verify-all --seed 7 " +
                          "--quiet --out \"" + out.string() + "\"";
        return std::system(cmd.c_str());
    };
    int rc1 = run(out1);
    int rc2 = run(out2);

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string a = slurp(out1), b = slurp(out2);
    bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    std::string detail;
    if (rc1 != 0 || rc2 != 0) detail = "CLI exited non-zero";
    else if (a.empty()) detail = "no records written";
    else if (a != b) detail = "records differ between runs";
    report(12, ok, "verify-all twice with --seed 7 produces byte-identical records", detail);
#endif
}

}  // namespace

int main() {
    std::printf("fuzznorm acceptance suite\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::printf("%s: %d of 12 criteria failed\n", g_failed == 0 ? "OK" : "FAILED", g_failed);
    return g_failed;
}
