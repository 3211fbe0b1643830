#include "core/operator_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fuzznorm {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

OperatorNormCalculator::OperatorNormCalculator(LinearOperator op, int sphere_samples,
                                               std::uint64_t seed)
    : op_(std::move(op)),
      sphere_samples_(sphere_samples > 0 ? sphere_samples
                                         : default_sphere_samples(op_.domain().dimension())),
      seed_(seed) {
    if (!op_.domain().satisfies_nvi())
        throw PreconditionError("operator norm needs an NVI domain (positive level infima "
                                "for x != 0); profile '" +
                                std::string(to_string(op_.domain().profile().kind())) +
                                "' never vanishes");
    if (!op_.codomain().tnorm().lower_semicontinuous())
        throw PreconditionError("operator norm needs a lower-semicontinuous codomain t-norm; '" +
                                op_.codomain().tnorm().name() + "' is declared not to be");

    auto dirs = unit_sphere_directions(op_.domain().rho(), sphere_samples_, seed_);
    dir_sup_ = 0.0;
    for (const auto& d : dirs) dir_sup_ = std::max(dir_sup_, op_.codomain().rho()(op_.apply(d)));
}

double OperatorNormCalculator::direction_sup_closed_form() const {
    return std::pow(op_.base_gain(), op_.domain().phi().exponent());
}

double OperatorNormCalculator::g_alpha(double alpha) const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
    if (dir_sup_ == 0.0) return 0.0;
    double qx = op_.domain().quantile(1.0 - alpha, false);
    if (qx == 0.0) return kInf;  // unreachable under NVI
    return dir_sup_ * op_.codomain().quantile(alpha, false) / qx;
}

double OperatorNormCalculator::g_alpha_closed_form(double alpha) const {
    double gp = direction_sup_closed_form();
    if (gp == 0.0) return 0.0;
    double qx = op_.domain().quantile(1.0 - alpha, false);
    if (qx == 0.0) return kInf;
    return gp * op_.codomain().quantile(alpha, false) / qx;
}

double OperatorNormCalculator::norm(double s, double alpha_tol) const {
    if (!(alpha_tol > 0.0)) throw std::invalid_argument("alpha_tol must be positive");
    if (s <= 0.0) return 0.0;  // forced by NI

    const double eps = 1e-12;
    if (g_alpha(1.0 - eps) <= s) return 1.0;  // every level passes: sup capped at 1
    if (g_alpha(eps) > s) return 0.0;         // empty level set

    double lo = eps, hi = 1.0 - eps;  // g(lo) <= s, g(hi) > s
    while (hi - lo > alpha_tol) {
        double mid = 0.5 * (lo + hi);
        (g_alpha(mid) <= s ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::optional<double> OperatorNormCalculator::norm_closed_form(double s) const {
    if (op_.domain().profile().kind() != ProfileKind::Reciprocal ||
        op_.codomain().profile().kind() != ProfileKind::Reciprocal)
        return std::nullopt;
    if (s <= 0.0) return 0.0;
    // g(alpha) = S* alpha/(1-alpha), so the level set boundary is s/(s+S*)
    if (dir_sup_ == 0.0) return 1.0;
    return s / (s + dir_sup_);
}

double OperatorNormCalculator::level_infimum(double alpha, bool strict, double s_tol,
                                             double alpha_tol) const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
    auto hit = [&](double s) {
        double v = norm(s, alpha_tol);
        return strict ? v > alpha : v >= alpha;
    };
    if (hit(1e-300)) return 0.0;
    double hi = 1.0;
    int doublings = 0;
    while (!hit(hi)) {
        hi *= 2.0;
        if (++doublings > 200)
            throw std::runtime_error("operator norm level infimum failed to bracket");
    }
    double lo = doublings == 0 ? 0.0 : hi * 0.5;
    while (hi - lo > s_tol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval below fp resolution
        (hit(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

Json OperatorNormProfile::to_json() const {
    Json j;
    j["sphere_samples"] = sphere_samples;
    j["seed"] = seed;
    j["monotone"] = monotone;
    Json rows = Json::array();
    for (auto [a, v] : g) rows.push_back(Json::array({a, v}));
    j["g"] = rows;
    return j;
}

OperatorNormProfile opnorm_profile(const OperatorNormCalculator& calc,
                                   const std::vector<double>& alpha_grid) {
    OperatorNormProfile prof;
    prof.sphere_samples = calc.sphere_samples();
    prof.seed = calc.seed();
    double prev = -kInf;
    for (double a : alpha_grid) {
        double v = calc.g_alpha(a);
        if (v < prev - 1e-12) prof.monotone = false;
        prev = v;
        prof.g.emplace_back(a, v);
    }
    return prof;
}

AxiomReport opnorm_axiom_check(const std::vector<LinearOperator>& fleet,
                               const std::vector<double>& scalars,
                               const std::vector<double>& s_grid,
                               const std::vector<double>& alpha_grid, std::uint64_t seed,
                               double alpha_tol, double tol, int sphere_samples) {
    if (fleet.empty()) throw std::invalid_argument("fleet must be non-empty");
    AxiomReport rep;
    rep.subject = "operator-fuzzy-norm";

    AxiomFinding ni{"ni-zero-left"}, nii{"nii-only-zero"}, niii{"niii-scaling"},
        niv{"niv-k-triangle"}, nv_mono{"nv-monotone"}, nv_lim{"nv-limit"},
        g_mono{"g-monotone"};

    auto record = [](AxiomFinding& f, double violation, const Json& w) {
        if (violation > f.worst) f.worst = violation;
        if (f.passed) {
            f.passed = false;
            f.witness = w;
        }
    };

    const double K = fleet.front().domain().b_constant();
    for (const auto& t : fleet) {
        if (!t.domain().same_structure(fleet.front().domain()) ||
            !t.codomain().same_structure(fleet.front().codomain()))
            throw std::invalid_argument("fleet operators must share domain and codomain");
    }
    std::vector<OperatorNormCalculator> calcs;
    calcs.reserve(fleet.size());
    for (const auto& t : fleet) calcs.emplace_back(t, sphere_samples, seed);

    for (std::size_t ci = 0; ci < calcs.size(); ++ci) {
        const auto& c = calcs[ci];

        for (double s : {-1.0, -0.25, 0.0})
            if (c.norm(s, alpha_tol) != 0.0)
                record(ni, c.norm(s, alpha_tol), Json{{"op", ci}, {"s", s}});

        bool all_one = true;
        double prev = -1.0;
        for (double s : s_grid) {
            double v = c.norm(s, alpha_tol);
            if (v < 1.0 - 2.0 * alpha_tol) all_one = false;
            if (v < prev - 2.0 * alpha_tol)
                record(nv_mono, prev - v, Json{{"op", ci}, {"s", s}});
            prev = v;
        }
        if (all_one != c.op().is_zero())
            record(nii, 1.0, Json{{"op", ci}, {"all_one", all_one}});

        double far = c.norm(std::max(1.0, c.direction_sup()) * 1e9, alpha_tol);
        if (far < 1.0 - 1e-6 - 2.0 * alpha_tol)
            record(nv_lim, 1.0 - far, Json{{"op", ci}, {"value", far}});

        const auto& phi = c.op().domain().phi();
        for (double lam : scalars) {
            OperatorNormCalculator scaled(
                LinearOperator(lam * c.op().matrix(), c.op().domain(), c.op().codomain()),
                sphere_samples, seed);
            for (double s : s_grid) {
                double lhs = scaled.norm(s, alpha_tol);
                double rhs = c.norm(s / phi(lam), alpha_tol);
                double viol = std::fabs(lhs - rhs);
                if (viol > 2.0 * alpha_tol)
                    record(niii, viol, Json{{"op", ci}, {"lambda", lam}, {"s", s}});
            }
        }

        double prev_g = -kInf;
        for (double a : alpha_grid) {
            double g = c.g_alpha(a);
            if (g < prev_g - 1e-12) record(g_mono, prev_g - g, Json{{"op", ci}, {"alpha", a}});
            prev_g = g;
        }
    }

    // NIV on all ordered pairs; closed-form N when available keeps equality
    // cases exact
    for (std::size_t i = 0; i < calcs.size(); ++i) {
        for (std::size_t j = 0; j < calcs.size(); ++j) {
            LinearOperator sum(calcs[i].op().matrix() + calcs[j].op().matrix(),
                               calcs[i].op().domain(), calcs[i].op().codomain());
            OperatorNormCalculator csum(sum, sphere_samples, seed);
            for (double s : s_grid) {
                for (double t : s_grid) {
                    auto lhs_cf = csum.norm_closed_form(s + K * t);
                    auto r1_cf = calcs[i].norm_closed_form(s);
                    auto r2_cf = calcs[j].norm_closed_form(t);
                    double lhs, rhs, slack;
                    if (lhs_cf && r1_cf && r2_cf) {
                        lhs = *lhs_cf;
                        rhs = calcs[i].op().codomain().tnorm().eval(*r1_cf, *r2_cf);
                        slack = tol;
                    } else {
                        lhs = csum.norm(s + K * t, alpha_tol);
                        rhs = calcs[i].op().codomain().tnorm().eval(
                            calcs[i].norm(s, alpha_tol), calcs[j].norm(t, alpha_tol));
                        slack = 2.0 * alpha_tol + tol;
                    }
                    if (lhs + slack < rhs)
                        record(niv, rhs - lhs,
                               Json{{"op1", i}, {"op2", j}, {"s", s}, {"t", t},
                                    {"lhs", lhs}, {"rhs", rhs}});
                }
            }
        }
    }

    rep.findings = {ni, nii, niii, niv, nv_mono, nv_lim, g_mono};
    return rep;
}

}  // namespace fuzznorm
