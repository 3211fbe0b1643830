#include "core/operators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "core/rng.hpp"

namespace fuzznorm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Json vector_to_json(const Vector& v) {
    Json arr = Json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Matrix whiten(const Matrix& a, const CrispFunctional& dom, const CrispFunctional& cod) {
    Matrix m = a;
    if (cod.weighted()) m = cod.weights().array().sqrt().matrix().asDiagonal() * m;
    if (dom.weighted()) m = m * dom.weights().array().rsqrt().matrix().asDiagonal();
    return m;
}

}  // namespace

LinearOperator::LinearOperator(Matrix a, FuzzySpace domain, FuzzySpace codomain)
    : a_(std::move(a)), domain_(std::move(domain)), codomain_(std::move(codomain)) {
    if (a_.cols() != domain_.dimension() || a_.rows() != codomain_.dimension())
        throw std::invalid_argument("operator matrix shape does not match the space pair");
    if (!domain_.phi().same_as(codomain_.phi()))
        throw std::invalid_argument("domain and codomain must share the homogeneity phi");
    if (domain_.b_constant() != codomain_.b_constant())
        throw std::invalid_argument("domain and codomain must share the b-constant K");
    Matrix w = whiten(a_, domain_.rho(), codomain_.rho());
    base_gain_ = w.isZero(0.0)
                     ? 0.0
                     : Eigen::JacobiSVD<Matrix>(w).singularValues()(0);
}

int default_sphere_samples(int dimension) {
    if (dimension <= 1) return 1;
    if (dimension <= 3) return 512;
    return 4096;
}

std::vector<Vector> unit_sphere_directions(const CrispFunctional& rho, int count,
                                           std::uint64_t seed) {
    const int n = rho.dimension();
    if (count < 1) throw std::invalid_argument("direction count must be >= 1");
    std::vector<Vector> dirs;
    dirs.reserve(static_cast<std::size_t>(count));

    if (n == 1) {
        dirs.push_back(Vector::Constant(1, 1.0));
    } else if (n == 2) {
        for (int i = 0; i < count; ++i) {
            double theta = 3.14159265358979323846 * (i + 0.5) / count;
            Vector v(2);
            v << std::cos(theta), std::sin(theta);
            dirs.push_back(v);
        }
    } else if (n == 3) {
        // Fibonacci hemisphere
        const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
        for (int i = 0; i < count; ++i) {
            double z = (i + 0.5) / count;  // hemisphere z in (0,1)
            double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            double phi_ang = 2.0 * 3.14159265358979323846 * std::fmod(i / golden, 1.0);
            Vector v(3);
            v << r * std::cos(phi_ang), r * std::sin(phi_ang), z;
            dirs.push_back(v);
        }
    } else {
        Rng rng(seed, "sphere-directions");
        for (int i = 0; i < count; ++i) {
            Vector v(n);
            double nrm = 0.0;
            while (nrm < 1e-12) {
                for (int j = 0; j < n; ++j) v[j] = rng.gaussian();
                nrm = v.norm();
            }
            dirs.push_back(v);
        }
    }
    for (auto& v : dirs) v /= rho.base_norm(v);
    return dirs;
}

double boundedness_ratio(const LinearOperator& T, const Vector& x, double alpha,
                         double level_tol) {
    if (x.isZero(0.0)) throw std::invalid_argument("boundedness ratio needs x != 0");
    const double K = T.domain().b_constant();
    // bisection tolerances track the operand scale so the ratio's relative
    // precision is scale invariant, matching the homogeneity being measured
    Vector tx = T.apply(x);
    double rho_y = T.codomain().rho()(tx);
    double num = rho_y == 0.0
                     ? 0.0
                     : T.codomain().level_value(tx, alpha, false, level_tol * rho_y) / K;
    if (num == 0.0) return 0.0;
    double den = T.domain().level_value(x, 1.0 - alpha, false,
                                        level_tol * T.domain().rho()(x));
    if (den == 0.0) return kInf;
    return num / den;
}

Json CertificateEntry::to_json() const {
    Json j;
    j["alpha"] = alpha;
    if (unbounded) {
        j["unbounded"] = true;
    } else {
        j["m"] = m;
        j["m_sampled"] = m_sampled;
    }
    if (m_closed_form) j["m_closed_form"] = *m_closed_form;
    if (witness_direction.size() > 0) j["witness_direction"] = vector_to_json(witness_direction);
    return j;
}

bool BoundednessCertificate::all_finite() const {
    return std::none_of(entries.begin(), entries.end(),
                        [](const CertificateEntry& e) { return e.unbounded; });
}

std::vector<double> BoundednessCertificate::unbounded_alphas() const {
    std::vector<double> out;
    for (const auto& e : entries)
        if (e.unbounded) out.push_back(e.alpha);
    return out;
}

const CertificateEntry* BoundednessCertificate::at(double alpha) const {
    for (const auto& e : entries)
        if (std::fabs(e.alpha - alpha) < 1e-12) return &e;
    return nullptr;
}

Json BoundednessCertificate::to_json() const {
    Json j;
    j["sphere_samples"] = sphere_samples;
    j["seed"] = seed;
    Json arr = Json::array();
    for (const auto& e : entries) arr.push_back(e.to_json());
    j["entries"] = arr;
    return j;
}

BoundednessCertificate bounded_certificate(const LinearOperator& T,
                                           const std::vector<double>& alpha_grid,
                                           int sphere_samples, std::uint64_t seed,
                                           double ceiling) {
    if (sphere_samples <= 0) sphere_samples = default_sphere_samples(T.domain().dimension());
    BoundednessCertificate cert;
    cert.sphere_samples = sphere_samples;
    cert.seed = seed;

    auto dirs = unit_sphere_directions(T.domain().rho(), sphere_samples, seed);
    const double K = T.domain().b_constant();
    const double p = T.domain().phi().exponent();

    for (double alpha : alpha_grid) {
        CertificateEntry e;
        e.alpha = alpha;
        // the denominator is direction-independent on the unit-rho sphere
        double den = T.domain().level_value(dirs.front(), 1.0 - alpha, false);

        double sup = 0.0;
        Vector arg;
        for (const auto& d : dirs) {
            double num = T.codomain().level_value(T.apply(d), alpha, false) / K;
            double ratio;
            if (num == 0.0) {
                ratio = 0.0;
            } else if (den == 0.0) {
                e.unbounded = true;
                e.witness_direction = d;
                break;
            } else {
                ratio = num / den;
            }
            if (ratio > ceiling) {
                e.unbounded = true;
                e.witness_direction = d;
                break;
            }
            if (ratio >= sup) {
                sup = ratio;
                arg = d;
            }
        }

        // separable closed form: gain^p * qY(alpha) / (K * qX(1-alpha))
        double qy = T.codomain().quantile(alpha, false);
        double qx = T.domain().quantile(1.0 - alpha, false);
        double gp = std::pow(T.base_gain(), p);
        if (gp == 0.0) {
            e.m_closed_form = 0.0;
        } else if (qx == 0.0) {
            if (!e.unbounded) {
                e.unbounded = true;
                e.witness_direction = arg.size() ? arg : dirs.front();
            }
        } else {
            e.m_closed_form = gp * qy / (K * qx);
        }

        if (!e.unbounded) {
            e.m_sampled = sup;
            e.m = e.m_closed_form ? std::max(sup, *e.m_closed_form) : sup;
            e.witness_direction = arg;
        }
        cert.entries.push_back(std::move(e));
    }
    return cert;
}

EquivalenceVerdict defn_equivalence_check(const LinearOperator& T,
                                          const BoundednessCertificate& cert, int sample_count,
                                          std::uint64_t seed, double m_scale, double slack) {
    EquivalenceVerdict v;
    const double K = T.domain().b_constant();
    const int n = T.domain().dimension();

    Rng rng(seed, "defn-equivalence");
    for (const auto& entry : cert.entries) {
        if (entry.unbounded) continue;
        const double alpha = entry.alpha;
        const double m = entry.m * m_scale;
        for (int i = 0; i < sample_count; ++i) {
            Vector x(n);
            double scale = rng.log_uniform(1e-1, 1e1);
            for (int j = 0; j < n; ++j) x[j] = rng.gaussian() * scale;
            if (x.isZero(0.0)) continue;
            ++v.samples;

            double den = T.domain().level_value(x, 1.0 - alpha, false);
            double t_base = (m > 0.0 && den > 0.0) ? m * den : T.domain().rho()(x) + 1e-6;
            double t = t_base * std::exp(rng.uniform(-1.5, 1.5));
            double s = t * (1.0 + rng.uniform(0.0, 1.0));

            // relation (1): N1(x, t/M) >= 1-alpha  =>  N2(Tx, Ks) >= alpha
            double premise = T.domain().norm(x, m > 0.0 ? t / m : kInf);
            if (premise >= 1.0 - alpha) {
                ++v.premise_hits;
                double conclusion = T.codomain().norm(T.apply(x), K * s);
                if (conclusion + 1e-12 < alpha) {
                    ++v.violations_eq1;
                    if (v.witness.is_null())
                        v.witness = Json{{"relation", "eq1"}, {"alpha", alpha},
                                         {"x", vector_to_json(x)}, {"t", t}, {"s", s},
                                         {"conclusion", conclusion}};
                }
            }

            // relation (2): d_alpha(Tx)/K <= M * d_{1-alpha}(x)
            double lhs = T.codomain().level_value(T.apply(x), alpha, false) / K;
            double rhs = m * den;
            if (lhs > rhs + slack * std::max(1.0, rhs)) {
                ++v.violations_eq2;
                if (v.witness.is_null())
                    v.witness = Json{{"relation", "eq2"}, {"alpha", alpha},
                                     {"x", vector_to_json(x)}, {"lhs", lhs}, {"rhs", rhs}};
            }
        }
    }
    v.passed = v.violations_eq1 == 0 && v.violations_eq2 == 0;
    return v;
}

ContinuityVerdict continuity_probe(const LinearOperator& T,
                                   const std::vector<Vector>& base_points,
                                   const std::vector<Vector>& directions, double rate_q,
                                   int n_max, double tol) {
    if (base_points.empty() || directions.empty())
        throw std::invalid_argument("continuity probe needs base points and directions");
    ContinuityVerdict cv;
    std::vector<char> base_continuous;

    for (const auto& base : base_points) {
        bool all_ok = true;
        for (const auto& dir : directions) {
            SequenceSpec dom_seq = SequenceSpec::power_decay(base, dir, rate_q);
            SeqVerdict dom = seq_convergence(T.domain(), dom_seq, SeqMode::classical(), n_max, tol);

            // images: T x_k = T base + k^{-q} (T dir), again a decay family
            SequenceSpec img_seq =
                SequenceSpec::power_decay(T.apply(base), T.apply(dir), rate_q);
            SeqVerdict img = seq_convergence(T.codomain(), img_seq, SeqMode::classical(), n_max, tol);

            bool holds = dom.outcome != SeqOutcome::Converges ||
                         img.outcome == SeqOutcome::Converges;
            all_ok = all_ok && holds;
            cv.probes.push_back(Json{{"base", vector_to_json(base)},
                                     {"direction", vector_to_json(dir)},
                                     {"domain", to_string(dom.outcome)},
                                     {"image", to_string(img.outcome)}});
            if (!holds && cv.witness.is_null()) cv.witness = cv.probes.back();
        }
        base_continuous.push_back(all_ok ? 1 : 0);
        cv.continuous = cv.continuous && all_ok;
    }

    cv.agree_across_points =
        std::all_of(base_continuous.begin(), base_continuous.end(),
                    [&](char c) { return c == base_continuous.front(); });
    return cv;
}

Json CounterexampleReport::to_json() const {
    Json j;
    j["continuous"] = continuous;
    j["bounded"] = bounded;
    j["unbounded_alphas"] = unbounded_alphas;
    j["matches_expected"] = matches_expected;
    return j;
}

CounterexampleReport counterexample_suite(int dimension, const std::vector<double>& alpha_grid,
                                          int sphere_samples, int n_max, std::uint64_t seed) {
    FuzzySpace x_space("X_step", CrispFunctional(dimension, 1.0), Profile::step(0.5),
                       TNorm::standard_intersection(), 1.0);
    FuzzySpace y_space("Y_reciprocal", CrispFunctional(dimension, 1.0), Profile::reciprocal(),
                       TNorm::standard_intersection(), 1.0);
    LinearOperator doubling(2.0 * Matrix::Identity(dimension, dimension), x_space, y_space);

    CounterexampleReport rep;

    std::vector<Vector> bases{Vector::Zero(dimension)};
    bases.push_back(Vector::Unit(dimension, 0));
    bases.push_back(Vector::Constant(dimension, 1.0 / std::sqrt(double(dimension))));
    std::vector<Vector> dirs;
    for (int i = 0; i < dimension; ++i) dirs.push_back(Vector::Unit(dimension, i));
    dirs.push_back(Vector::Constant(dimension, 1.0 / std::sqrt(double(dimension))));

    // threshold scaled to the horizon: image gaps decay like 4/(n t) here
    double tol = std::max(2e-2, 8.0 / n_max);
    rep.continuity = continuity_probe(doubling, bases, dirs, 1.0, n_max, tol);
    rep.continuous = rep.continuity.continuous;

    rep.certificate = bounded_certificate(doubling, alpha_grid, sphere_samples, seed);
    rep.bounded = rep.certificate.all_finite();
    rep.unbounded_alphas = rep.certificate.unbounded_alphas();

    bool split_correct = true;
    for (const auto& e : rep.certificate.entries) {
        bool expect_unbounded = e.alpha >= 0.5 - 1e-12;
        if (e.unbounded != expect_unbounded) split_correct = false;
    }
    rep.matches_expected = rep.continuous && !rep.bounded && split_correct;
    return rep;
}

// --- Lemma 2.1 ------------------------------------------------------------

namespace {

// All compositions of `total` into `parts` non-negative integers.
void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 1) {
        cur.push_back(total);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int i = 0; i <= total; ++i) {
        cur.push_back(i);
        compositions(total - i, parts - 1, cur, emit);
        cur.pop_back();
    }
}

// Pairwise mass-transfer coordinate descent on the simplex; f is convex on
// each sign-pattern face, so golden-section on every transfer direction
// converges to the face minimum.
template <class F>
void refine_on_simplex(Vector& w, double& best, F&& f, int sweeps) {
    const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
    const int n = static_cast<int>(w.size());
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double lo = -w[i], hi = w[j];  // delta moved from j to i
                if (hi - lo < 1e-14) continue;
                double a = lo, b = hi;
                double x1 = b - inv_golden * (b - a);
                double x2 = a + inv_golden * (b - a);
                auto probe = [&](double delta) {
                    Vector t = w;
                    t[i] += delta;
                    t[j] -= delta;
                    return f(t);
                };
                double f1 = probe(x1), f2 = probe(x2);
                for (int it = 0; it < 60 && b - a > 1e-13; ++it) {
                    if (f1 < f2) {
                        b = x2;
                        x2 = x1;
                        f2 = f1;
                        x1 = b - inv_golden * (b - a);
                        f1 = probe(x1);
                    } else {
                        a = x1;
                        x1 = x2;
                        f1 = f2;
                        x2 = a + inv_golden * (b - a);
                        f2 = probe(x2);
                    }
                }
                double delta = 0.5 * (a + b);
                double fd = probe(delta);
                if (fd < best) {
                    best = fd;
                    w[i] += delta;
                    w[j] -= delta;
                }
            }
        }
    }
}

}  // namespace

IndependenceConstant independence_constant(const FuzzySpace& sp,
                                           const std::vector<Vector>& basis, double alpha,
                                           int grid_resolution) {
    if (basis.empty()) throw std::invalid_argument("basis must be non-empty");
    if (grid_resolution < 2) throw std::invalid_argument("grid resolution must be >= 2");
    const int n = static_cast<int>(basis.size());
    Matrix b(sp.dimension(), n);
    for (int i = 0; i < n; ++i) {
        if (basis[i].size() != sp.dimension()) throw std::invalid_argument("dimension mismatch");
        b.col(i) = basis[i];
    }
    if (Eigen::ColPivHouseholderQR<Matrix>(b).rank() < n)
        throw std::invalid_argument("basis vectors are linearly dependent");

    const double K = sp.b_constant();
    auto objective = [&](const Vector& beta) {
        return sp.level_value(b * beta, 1.0 - alpha, false) / K;
    };

    IndependenceConstant ic;
    ic.basis = basis;
    ic.alpha = alpha;
    ic.grid_resolution = grid_resolution;
    double best = kInf;
    Vector best_beta;

    // sign patterns with the first coordinate positive (the objective is even)
    const int patterns = 1 << (n - 1);
    for (int mask = 0; mask < patterns; ++mask) {
        Vector sign(n);
        sign[0] = 1.0;
        for (int i = 1; i < n; ++i) sign[i] = (mask >> (i - 1)) & 1 ? -1.0 : 1.0;

        double face_best = kInf;
        Vector face_w;
        std::vector<int> cur;
        compositions(grid_resolution, n, cur, [&](const std::vector<int>& comp) {
            Vector w(n);
            for (int i = 0; i < n; ++i) w[i] = double(comp[i]) / grid_resolution;
            double val = objective(sign.cwiseProduct(w));
            if (val < face_best) {
                face_best = val;
                face_w = w;
            }
        });
        auto face_obj = [&](const Vector& w) { return objective(sign.cwiseProduct(w)); };
        refine_on_simplex(face_w, face_best, face_obj, 24);

        if (face_best < best) {
            best = face_best;
            best_beta = sign.cwiseProduct(face_w);
        }
    }

    ic.c_alpha = best;
    ic.minimizing_coeffs = best_beta;
    if (sp.satisfies_nvi()) {
        ic.positivity_checked = true;
        ic.positivity_ok = best > 0.0;
    }
    return ic;
}

Lemma21Verdict lemma21_inequality_check(const FuzzySpace& sp, const IndependenceConstant& ic,
                                        int sample_count, std::uint64_t seed, double tol,
                                        double c_scale) {
    Lemma21Verdict v;
    const int n = static_cast<int>(ic.basis.size());
    Matrix b(sp.dimension(), n);
    for (int i = 0; i < n; ++i) b.col(i) = ic.basis[i];
    const double K = sp.b_constant();
    const auto& phi = sp.phi();
    const double c = c_scale * ic.c_alpha;

    Rng rng(seed, "lemma21");
    for (int i = 0; i < sample_count; ++i) {
        Vector beta(n);
        if (i == 0) {
            beta = ic.minimizing_coeffs;  // equality case first
        } else {
            double scale = rng.log_uniform(1e-3, 1e3);
            for (int j = 0; j < n; ++j) beta[j] = rng.uniform(-2.0, 2.0) * scale;
        }
        double s1 = beta.cwiseAbs().sum();
        if (s1 < 1e-9) continue;
        ++v.samples;

        double lhs = sp.level_value(b * beta, 1.0 - ic.alpha, false) / K;
        double rhs = c / phi(1.0 / s1);
        if (lhs + tol < rhs) {
            ++v.violations;
            if (v.witness.is_null())
                v.witness = Json{{"beta", vector_to_json(beta)}, {"lhs", lhs}, {"rhs", rhs}};
        }
    }
    v.passed = v.violations == 0;
    return v;
}

// --- Thm 3.1 / Lemma 3.1 ---------------------------------------------------

SubspaceVerdict subspace_check(const LinearOperator& T1, const LinearOperator& T2, double k1,
                               double k2, const std::vector<double>& alpha_grid,
                               int sphere_samples, int pair_samples, std::uint64_t seed,
                               double tol) {
    if (k1 == 0.0 || k2 == 0.0) throw std::invalid_argument("scalars must be non-zero");
    if (!T1.domain().same_structure(T2.domain()) || !T1.codomain().same_structure(T2.codomain()))
        throw std::invalid_argument("operators must share domain and codomain");

    const auto& cod = T1.codomain();
    const double K = cod.b_constant();
    const auto& phi = T1.domain().phi();

    // beta(alpha): smallest grid level whose t-norm square clears alpha
    SubspaceVerdict v;
    std::vector<double> betas;
    for (double alpha : alpha_grid) {
        double beta = std::ceil(alpha * 1000.0) / 1000.0;
        while (beta < 1.0 && cod.tnorm().eval(beta, beta) < alpha) beta += 1e-3;
        if (beta >= 1.0)
            throw PreconditionError("no beta < 1 with tnorm(beta,beta) >= alpha; codomain "
                                    "t-norm is not continuous at (1,1)");
        betas.push_back(beta);
    }
    v.beta_of_alpha = betas;

    BoundednessCertificate c1 = bounded_certificate(T1, betas, sphere_samples, seed);
    BoundednessCertificate c2 = bounded_certificate(T2, betas, sphere_samples, seed);
    if (!c1.all_finite() || !c2.all_finite())
        throw PreconditionError("operands are not certified bounded at the shifted levels");

    LinearOperator combo(k1 * T1.matrix() + k2 * T2.matrix(), T1.domain(), T1.codomain());
    v.combo_certificate = bounded_certificate(combo, alpha_grid, sphere_samples, seed);
    v.combo_bounded = v.combo_certificate.all_finite();

    v.bound_holds = v.combo_bounded;
    for (std::size_t i = 0; i < alpha_grid.size() && v.bound_holds; ++i) {
        double lhs = v.combo_certificate.entries[i].m;
        double rhs = phi(k1) * c1.entries[i].m + phi(k2) * c2.entries[i].m;
        if (lhs > rhs + tol * std::max(1.0, rhs)) {
            v.bound_holds = false;
            v.witness = Json{{"alpha", alpha_grid[i]}, {"combo_m", lhs}, {"bound", rhs}};
        }
    }

    // Lemma 3.1 in the codomain: d_alpha(x+y)/K <= d_beta(x) + d_beta(y)
    Rng rng(seed, "lemma31-pairs");
    const int n = cod.dimension();
    v.lemma31_holds = true;
    for (std::size_t gi = 0; gi < alpha_grid.size(); ++gi) {
        double alpha = alpha_grid[gi], beta = betas[gi];
        for (int i = 0; i < pair_samples; ++i) {
            Vector x(n), y(n);
            double scale = rng.log_uniform(1e-1, 1e1);
            for (int j = 0; j < n; ++j) {
                x[j] = rng.gaussian() * scale;
                y[j] = rng.gaussian() * scale;
            }
            double lhs = cod.level_value(x + y, alpha, false) / K;
            double rhs = cod.level_value(x, beta, false) + cod.level_value(y, beta, false);
            if (lhs > rhs + tol * std::max(1.0, rhs)) {
                ++v.lemma31_violations;
                v.lemma31_holds = false;
                if (v.witness.is_null())
                    v.witness = Json{{"alpha", alpha}, {"beta", beta}, {"lhs", lhs}, {"rhs", rhs}};
            }
        }
    }
    return v;
}

SweepReport finite_dim_boundedness_sweep(const FuzzySpace& domain, const FuzzySpace& codomain,
                                         int operator_count,
                                         const std::vector<double>& alpha_grid,
                                         int sphere_samples, std::uint64_t seed) {
    SweepReport rep;
    if (!domain.satisfies_nvi()) {
        rep.witness = Json{{"reason", "domain does not satisfy NVI; the finite-dimension "
                                      "boundedness theorem is not asserted"}};
        return rep;
    }
    rep.precondition_ok = true;

    Rng rng(seed, "boundedness-sweep");
    const int rows = codomain.dimension(), cols = domain.dimension();
    for (int k = 0; k < operator_count; ++k) {
        Matrix a = Matrix::Zero(rows, cols);
        if (k > 0) {  // keep the zero operator in the fleet
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) a(i, j) = rng.gaussian();
        }
        LinearOperator op(a, domain, codomain);
        BoundednessCertificate cert = bounded_certificate(op, alpha_grid, sphere_samples,
                                                          seed + static_cast<std::uint64_t>(k));
        ++rep.operators_checked;
        if (cert.all_finite()) {
            ++rep.bounded_count;
        } else if (rep.witness.is_null()) {
            rep.witness = Json{{"operator_index", k},
                               {"unbounded_alphas", cert.unbounded_alphas()}};
        }
    }
    rep.all_bounded = rep.bounded_count == rep.operators_checked;
    return rep;
}

}  // namespace fuzznorm
