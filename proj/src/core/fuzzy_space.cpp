#include "core/fuzzy_space.hpp"

#include <cmath>
#include <stdexcept>

#include "core/rng.hpp"

namespace fuzznorm {

CrispFunctional::CrispFunctional(int dimension, double exponent_p, Vector weights)
    : dimension_(dimension), exponent_(exponent_p), weights_(std::move(weights)) {
    if (dimension_ < 1) throw std::invalid_argument("dimension must be >= 1");
    if (!(exponent_ >= 1.0)) throw std::invalid_argument("exponent p must be >= 1");
    if (weights_.size() > 0) {
        if (weights_.size() != dimension_)
            throw std::invalid_argument("weight vector length must match dimension");
        if ((weights_.array() <= 0.0).any())
            throw std::invalid_argument("weights must be positive");
    }
}

double CrispFunctional::base_norm(const Vector& x) const {
    if (x.size() != dimension_) throw std::invalid_argument("dimension mismatch");
    if (weights_.size() > 0) return std::sqrt((weights_.array() * x.array().square()).sum());
    return x.norm();
}

double CrispFunctional::operator()(const Vector& x) const {
    double b = base_norm(x);
    return exponent_ == 1.0 ? b : std::pow(b, exponent_);
}

PhiFunction CrispFunctional::homogeneity() const {
    return exponent_ == 1.0 ? PhiFunction::abs() : PhiFunction::abs_power(exponent_);
}

bool CrispFunctional::same_as(const CrispFunctional& other) const {
    return dimension_ == other.dimension_ && exponent_ == other.exponent_ &&
           weights_.size() == other.weights_.size() &&
           (weights_.size() == 0 || weights_ == other.weights_);
}

FuzzySpace::FuzzySpace(std::string name, CrispFunctional rho, Profile profile, TNorm tnorm,
                       std::optional<double> b_constant)
    : name_(std::move(name)), rho_(std::move(rho)), profile_(std::move(profile)),
      phi_(rho_.homogeneity()), tnorm_(std::move(tnorm)),
      b_constant_(b_constant.value_or(rho_.default_b_constant())) {
    if (!(b_constant_ >= 1.0)) throw std::invalid_argument("b-constant K must be >= 1");
}

double FuzzySpace::norm(const Vector& x, double t) const {
    if (x.size() != dimension()) throw std::invalid_argument("dimension mismatch");
    if (t <= 0.0) return 0.0;
    double r = rho_(x);
    if (r == 0.0) return 1.0;
    return profile_.value(t / r);
}

LevelValue FuzzySpace::level_infimum(const Vector& x, double alpha, bool strict,
                                     double tol) const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    LevelValue lv{x, alpha, strict, 0.0};

    double r = rho_(x);
    if (r == 0.0) return lv;  // N(0, t) = 1 for every t > 0

    auto hit = [&](double t) {
        double v = norm(x, t);
        return strict ? v > alpha : v >= alpha;
    };

    // structurally zero infimum: the predicate already holds at a tiny t
    if (hit(r * 1e-18)) return lv;

    double hi = r;
    int doublings = 0;
    while (!hit(hi)) {
        hi *= 2.0;
        if (++doublings > kMaxBracketDoublings)
            throw std::runtime_error("level infimum bracket failed to grow: profile does not "
                                     "reach the requested level");
    }
    double lo = doublings == 0 ? r * 1e-18 : hi * 0.5;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval below fp resolution
        (hit(mid) ? hi : lo) = mid;
    }
    lv.value = 0.5 * (lo + hi);
    return lv;
}

double FuzzySpace::level_value(const Vector& x, double alpha, bool strict, double tol) const {
    return level_infimum(x, alpha, strict, tol).value;
}

double FuzzySpace::level_closed_form(const Vector& x, double alpha, bool strict) const {
    double r = rho_(x);
    return r == 0.0 ? 0.0 : r * profile_.quantile(alpha, strict);
}

bool FuzzySpace::same_structure(const FuzzySpace& other) const {
    return rho_.same_as(other.rho_) && profile_.same_as(other.profile_) &&
           b_constant_ == other.b_constant_;
}

Json FuzzySpace::to_json() const {
    Json j;
    j["name"] = name_;
    j["dimension"] = dimension();
    j["profile"] = profile_.to_json();
    j["exponent"] = rho_.exponent();
    j["K"] = b_constant_;
    j["tnorm"] = tnorm_.name();
    j["satisfies_nvi"] = satisfies_nvi();
    if (rho_.weighted()) {
        Json w = Json::array();
        for (int i = 0; i < rho_.weights().size(); ++i) w.push_back(rho_.weights()[i]);
        j["weights"] = w;
    }
    return j;
}

AxiomReport axiom_check_bn(const FuzzySpace& sp, int sample_count, std::uint64_t seed,
                           double tol) {
    if (sample_count < 1) throw std::invalid_argument("sample_count must be >= 1");
    AxiomReport rep;
    rep.subject = sp.name();

    const int n = sp.dimension();
    const double K = sp.b_constant();
    const auto& phi = sp.phi();

    AxiomFinding bn1{"bn1-zero-left"}, bn2_zero{"bn2-at-origin"}, bn2_def{"bn2-definite"},
        bn3{"bn3-scaling"}, bn4{"bn4-triangle"}, bn5_mono{"bn5-monotone"},
        bn5_lim{"bn5-limit"};
    AxiomFinding bn4_skew{"bn4_skew"};
    bn4_skew.informational = true;
    bn4_skew.note = K == 1.0 ? "skewed window s+Kt; coincides with bn4-triangle for K = 1"
                             : "skewed window s+Kt; the profile construction only guarantees "
                               "the symmetric window K(s+t) for K > 1";
    AxiomFinding crisp_def{"crisp-definite"}, crisp_hom{"crisp-homogeneity"},
        crisp_tri{"crisp-b-triangle"};
    AxiomFinding nvi{"nvi-flag"};
    nvi.informational = true;
    nvi.witness = Json{{"satisfies_nvi", sp.satisfies_nvi()}};

    auto record = [](AxiomFinding& f, double violation, const Json& w) {
        if (violation > f.worst) f.worst = violation;
        if (f.passed) {
            f.passed = false;
            f.witness = w;
        }
    };

    Rng rng(seed, "bn-axioms");
    auto random_vec = [&](double scale) {
        Vector v(n);
        for (int i = 0; i < n; ++i) v[i] = rng.gaussian() * scale;
        return v;
    };

    const Vector theta = Vector::Zero(n);

    for (int i = 0; i < sample_count; ++i) {
        double scale = rng.log_uniform(1e-2, 1e2);
        Vector x = random_vec(scale);
        Vector y = random_vec(scale);
        double c = rng.signed_log_uniform(1e-2, 1e2);
        double s = rng.log_uniform(1e-3, 1e3) * scale;
        double t = rng.log_uniform(1e-3, 1e3) * scale;

        // bn1
        double v_neg = sp.norm(x, -t);
        double v_zero = sp.norm(x, 0.0);
        if (v_neg != 0.0 || v_zero != 0.0)
            record(bn1, std::max(v_neg, v_zero), Json{{"t", -t}});

        // bn2, both directions
        if (sp.norm(theta, t) != 1.0) record(bn2_zero, 1.0 - sp.norm(theta, t), Json{{"t", t}});
        double rx = sp.rho()(x);
        if (rx > 0.0) {
            double small = sp.norm(x, 0.5 * rx);
            if (!(small < 1.0)) record(bn2_def, 1.0, Json{{"rho", rx}, {"value", small}});
        }

        // bn3: N(cx, t) = N(x, t / phi(c))
        double pc = phi(c);
        if (pc != 0.0) {
            double lhs = sp.norm(c * x, t);
            double rhs = sp.norm(x, t / pc);
            double viol = std::fabs(lhs - rhs);
            if (viol > tol) record(bn3, viol, Json{{"c", c}, {"t", t}});
        }

        // bn4, symmetric gate plus informational skewed window
        double nx = sp.norm(x, s);
        double ny = sp.norm(y, t);
        double bound = sp.tnorm().eval(nx, ny);
        double lhs_sym = sp.norm(x + y, K * (s + t));
        if (lhs_sym + tol < bound)
            record(bn4, bound - lhs_sym, Json{{"s", s}, {"t", t}, {"lhs", lhs_sym}, {"rhs", bound}});
        double lhs_skew = sp.norm(x + y, s + K * t);
        if (lhs_skew + tol < bound)
            record(bn4_skew, bound - lhs_skew,
                   Json{{"s", s}, {"t", t}, {"lhs", lhs_skew}, {"rhs", bound}});

        // bn5 monotone on an ordered pair
        double t_lo = std::min(s, t), t_hi = std::max(s, t);
        double diff = sp.norm(x, t_lo) - sp.norm(x, t_hi);
        if (diff > tol) record(bn5_mono, diff, Json{{"t1", t_lo}, {"t2", t_hi}});

        // bn5 limit, finite horizon
        if (rx > 0.0) {
            double far = sp.norm(x, rx * 1e9);
            if (far < 1.0 - 1e-6) record(bn5_lim, 1.0 - far, Json{{"t_over_rho", 1e9}});
        }

        // crisp carrier invariants
        if (rx <= 0.0 && x.norm() > 0.0) record(crisp_def, 1.0, Json{{"rho", rx}});
        double hom = std::fabs(sp.rho()(c * x) - pc * rx);
        double hom_scale = std::max(1.0, pc * rx);
        if (hom > tol * hom_scale)
            record(crisp_hom, hom / hom_scale, Json{{"c", c}});
        double tri = sp.rho()(x + y) - K * (rx + sp.rho()(y));
        double tri_scale = std::max(1.0, K * (rx + sp.rho()(y)));
        if (tri > tol * tri_scale)
            record(crisp_tri, tri / tri_scale, Json{{"rho_xy", sp.rho()(x + y)}});
    }

    rep.findings = {bn1,      bn2_zero, bn2_def, bn3,      bn4,      bn4_skew,
                    bn5_mono, bn5_lim,  nvi,     crisp_def, crisp_hom, crisp_tri};
    return rep;
}

}  // namespace fuzznorm
