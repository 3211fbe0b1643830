#include "core/scalar_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "core/rng.hpp"

namespace fuzznorm {

namespace {

void require_unit(double v, const char* arg) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::domain_error(std::string("t-norm argument ") + arg + " outside [0,1]");
    }
}

}  // namespace

const char* to_string(TNormKind k) {
    switch (k) {
        case TNormKind::StandardIntersection: return "standard-intersection";
        case TNormKind::AlgebraicProduct: return "algebraic-product";
        case TNormKind::BoundedDifference: return "bounded-difference";
        case TNormKind::Drastic: return "drastic";
        case TNormKind::Custom: return "custom";
    }
    return "?";
}

const char* to_string(ContinuityClass c) {
    switch (c) {
        case ContinuityClass::Continuous: return "continuous";
        case ContinuityClass::LowerSemicontinuous: return "lower-semicontinuous";
        case ContinuityClass::None: return "none";
    }
    return "?";
}

TNorm::TNorm(TNormKind kind, ContinuityClass cont, std::string name,
             std::function<double(double, double)> fn)
    : kind_(kind), continuity_(cont), name_(std::move(name)), fn_(std::move(fn)) {}

TNorm TNorm::standard_intersection() {
    return TNorm(TNormKind::StandardIntersection, ContinuityClass::Continuous,
                 "standard-intersection", {});
}

TNorm TNorm::algebraic_product() {
    return TNorm(TNormKind::AlgebraicProduct, ContinuityClass::Continuous,
                 "algebraic-product", {});
}

TNorm TNorm::bounded_difference() {
    return TNorm(TNormKind::BoundedDifference, ContinuityClass::Continuous,
                 "bounded-difference", {});
}

TNorm TNorm::drastic() {
    return TNorm(TNormKind::Drastic, ContinuityClass::None, "drastic", {});
}

TNorm TNorm::custom(std::string name, std::function<double(double, double)> fn,
                    ContinuityClass declared) {
    return TNorm(TNormKind::Custom, declared, std::move(name), std::move(fn));
}

TNorm TNorm::from_name(const std::string& name) {
    if (name == "standard-intersection" || name == "min") return standard_intersection();
    if (name == "algebraic-product" || name == "product") return algebraic_product();
    if (name == "bounded-difference") return bounded_difference();
    if (name == "drastic") return drastic();
    throw ConfigError("unknown t-norm kind: '" + name + "'");
}

double TNorm::eval(double a, double b) const {
    require_unit(a, "a");
    require_unit(b, "b");
    switch (kind_) {
        case TNormKind::StandardIntersection:
            return std::min(a, b);
        case TNormKind::AlgebraicProduct:
            return a * b;
        case TNormKind::BoundedDifference:
            return std::max(0.0, a + b - 1.0);
        case TNormKind::Drastic:
            if (b == 1.0) return a;
            if (a == 1.0) return b;
            return 0.0;
        case TNormKind::Custom:
            return fn_(a, b);
    }
    return 0.0;
}

double TNorm::power(double a, int n) const {
    if (n < 1) throw std::domain_error("t-norm power requires n >= 1");
    double acc = a;
    for (int i = 1; i < n; ++i) acc = eval(acc, a);
    return acc;
}

AxiomReport tnorm_axiom_check(const TNorm& t, int sample_count, std::uint64_t seed, double tol) {
    if (sample_count < 1) throw std::invalid_argument("sample_count must be >= 1");
    AxiomReport rep;
    rep.subject = t.name();

    AxiomFinding identity{"identity"}, comm{"commutativity"}, assoc{"associativity"},
        mono{"monotonicity"}, range{"range"};
    AxiomFinding t1{"t1-positivity"};
    t1.informational = true;
    t1.note = "a > 0 implies a*a > 0; surfaced only, never gates";

    auto record = [](AxiomFinding& f, double violation, const Json& w) {
        if (violation > f.worst) f.worst = violation;
        if (f.passed) {
            f.passed = false;
            f.witness = w;
        }
    };

    // Canonical probes first so witnesses are reproducible and readable.
    const double canon[] = {0.5, 0.25, 0.75, 1.0 / 3.0, 0.9, 0.1, 0.0, 1.0};
    const int n_canon = static_cast<int>(std::size(canon));

    Rng rng(seed, "tnorm-axioms");
    for (int i = 0; i < sample_count; ++i) {
        double a, b, c;
        if (i < n_canon) {
            a = canon[i];
            b = canon[(i + 1) % n_canon];
            c = canon[(i + 3) % n_canon];
        } else {
            a = rng.uniform();
            b = rng.uniform();
            c = rng.uniform();
        }

        double ab = t.eval(a, b);
        if (ab < -tol || ab > 1.0 + tol) {
            record(range, std::max(-ab, ab - 1.0), Json{{"a", a}, {"b", b}, {"value", ab}});
        }

        double vi = std::fabs(t.eval(a, 1.0) - a);
        if (vi > tol) record(identity, vi, Json{{"a", a}, {"value", t.eval(a, 1.0)}});

        double vc = std::fabs(ab - t.eval(b, a));
        if (vc > tol) record(comm, vc, Json{{"a", a}, {"b", b}});

        double va = std::fabs(t.eval(ab, c) - t.eval(a, t.eval(b, c)));
        if (va > tol) record(assoc, va, Json{{"a", a}, {"b", b}, {"c", c}});

        // monotonicity on ordered pairs built from two more draws
        double a2 = (i < n_canon) ? canon[(i + 2) % n_canon] : rng.uniform();
        double c2 = (i < n_canon) ? canon[(i + 5) % n_canon] : rng.uniform();
        double lo1 = std::min(a, a2), hi1 = std::max(a, a2);
        double lo2 = std::min(c, c2), hi2 = std::max(c, c2);
        double vm = t.eval(lo1, lo2) - t.eval(hi1, hi2);
        if (vm > tol) {
            record(mono, vm,
                   Json{{"a", lo1}, {"b", hi1}, {"c", lo2}, {"d", hi2}});
        }

        double aa = (i < n_canon) ? canon[i] : rng.uniform();
        if (aa > 0.0 && t.eval(aa, aa) <= 0.0) {
            record(t1, aa, Json{{"a", aa}, {"value", t.eval(aa, aa)}});
        }
    }

    rep.findings = {identity, comm, assoc, mono, range, t1};

    if (t.continuity_class() == ContinuityClass::LowerSemicontinuous) {
        // approach-from-below probe: liminf along (a-d, b-d) must not drop
        // below the value at (a, b)
        AxiomFinding lsc{"lower-semicontinuity-probe"};
        lsc.informational = true;
        Rng prng(seed, "tnorm-lsc");
        int probes = std::min(sample_count, 256);
        for (int i = 0; i < probes; ++i) {
            double a = prng.uniform(0.05, 1.0), b = prng.uniform(0.05, 1.0);
            double v = t.eval(a, b);
            double approached = 0.0;
            for (double d : {1e-3, 1e-5, 1e-7, 1e-9}) {
                approached = t.eval(std::max(0.0, a - d), std::max(0.0, b - d));
            }
            double gap = v - approached;
            if (gap > 1e-6 && gap > lsc.worst) {
                lsc.worst = gap;
                lsc.passed = false;
                lsc.witness = Json{{"a", a}, {"b", b}, {"gap", gap}};
            }
        }
        rep.findings.push_back(lsc);
    }

    return rep;
}

// ---------------------------------------------------------------------------

const char* to_string(PhiKind k) {
    switch (k) {
        case PhiKind::Abs: return "abs";
        case PhiKind::AbsPower: return "abs-power";
        case PhiKind::RationalExample: return "rational-example";
        case PhiKind::Custom: return "custom";
    }
    return "?";
}

PhiFunction::PhiFunction(PhiKind kind, std::string name, double exponent, int n,
                         std::function<double(double)> fn)
    : kind_(kind), name_(std::move(name)), exponent_(exponent), rational_n_(n),
      fn_(std::move(fn)) {}

PhiFunction PhiFunction::abs() { return PhiFunction(PhiKind::Abs, "abs", 1.0, 1, {}); }

PhiFunction PhiFunction::abs_power(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("abs-power exponent must be positive");
    return PhiFunction(PhiKind::AbsPower, "abs-power(" + std::to_string(p) + ")", p, 1, {});
}

PhiFunction PhiFunction::rational_example(int n) {
    if (n < 1) throw std::invalid_argument("rational-example order must be >= 1");
    return PhiFunction(PhiKind::RationalExample, "rational-example(" + std::to_string(n) + ")",
                       0.0, n, {});
}

PhiFunction PhiFunction::custom(std::string name, std::function<double(double)> fn) {
    return PhiFunction(PhiKind::Custom, std::move(name), 0.0, 1, std::move(fn));
}

double PhiFunction::operator()(double c) const {
    switch (kind_) {
        case PhiKind::Abs:
            return std::fabs(c);
        case PhiKind::AbsPower:
            return std::pow(std::fabs(c), exponent_);
        case PhiKind::RationalExample: {
            double a = std::fabs(c);
            return 2.0 * std::pow(a, 2.0 * rational_n_) / (a + 1.0);
        }
        case PhiKind::Custom:
            return fn_(c);
    }
    return 0.0;
}

double PhiFunction::inverse(double y, double tol) const {
    if (!(y > 0.0)) throw std::domain_error("phi inverse requires y > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("phi inverse requires tol > 0");
    const PhiFunction& f = *this;

    double lo = 1.0, hi = 1.0;
    int guard = 0;
    while (f(lo) > y) {
        lo *= 0.5;
        if (++guard > 2000) throw std::domain_error("phi inverse: y below achievable range");
    }
    guard = 0;
    while (f(hi) < y) {
        hi *= 2.0;
        if (++guard > 2000) throw std::domain_error("phi inverse: y above achievable range");
    }
    // invariant: f(lo) <= y <= f(hi)
    while (true) {
        double mid = 0.5 * (lo + hi);
        double v = f(mid);
        if (std::fabs(v - y) <= tol) return mid;
        if (hi - lo < std::numeric_limits<double>::epsilon() * hi) return mid;
        (v < y ? lo : hi) = mid;
    }
}

bool PhiFunction::same_as(const PhiFunction& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case PhiKind::Abs: return true;
        case PhiKind::AbsPower: return exponent_ == other.exponent_;
        case PhiKind::RationalExample: return rational_n_ == other.rational_n_;
        case PhiKind::Custom: return name_ == other.name_;
    }
    return false;
}

AxiomReport phi_axiom_check(const PhiFunction& f, int grid_size, double tol) {
    if (grid_size < 8) throw std::invalid_argument("phi grid_size must be >= 8");
    AxiomReport rep;
    rep.subject = f.name();

    AxiomFinding even{"phi1-even"}, unit{"phi2-unit"}, increasing{"phi3-strictly-increasing"},
        limits{"phi4-limits"};

    const double lo = 1e-6, hi = 1e6;
    const double low_threshold = 1e-3, high_threshold = 1e3;

    double v1 = std::fabs(f(1.0) - 1.0);
    if (v1 > tol) {
        unit.passed = false;
        unit.worst = v1;
        unit.witness = Json{{"phi(1)", f(1.0)}};
    }

    double prev = f(lo);
    double prev_t = lo;
    for (int i = 0; i < grid_size; ++i) {
        double u = static_cast<double>(i) / (grid_size - 1);
        double tpt = lo * std::pow(hi / lo, u);

        double ve = std::fabs(f(-tpt) - f(tpt));
        if (ve > tol) {
            if (ve > even.worst) even.worst = ve;
            if (even.passed) {
                even.passed = false;
                even.witness = Json{{"t", tpt}, {"phi(t)", f(tpt)}, {"phi(-t)", f(-tpt)}};
            }
        }

        if (i > 0) {
            double gap = f(tpt) - prev;
            if (!(gap > 0.0)) {
                double viol = -gap;
                if (viol >= increasing.worst) increasing.worst = viol;
                if (increasing.passed) {
                    increasing.passed = false;
                    increasing.witness =
                        Json{{"t1", prev_t}, {"t2", tpt}, {"phi(t1)", prev}, {"phi(t2)", f(tpt)}};
                }
            }
            prev = f(tpt);
            prev_t = tpt;
        }
    }

    // inclusive: |t|^{1/2} sits exactly on both thresholds
    double at_lo = f(lo), at_hi = f(hi);
    if (!(at_lo <= low_threshold * (1.0 + 1e-9)) ||
        !(at_hi >= high_threshold * (1.0 - 1e-9))) {
        limits.passed = false;
        limits.worst = std::max(at_lo - low_threshold, high_threshold - at_hi);
        limits.witness = Json{{"phi(1e-6)", at_lo}, {"phi(1e6)", at_hi},
                              {"low_threshold", low_threshold},
                              {"high_threshold", high_threshold}};
    }

    rep.findings = {even, unit, increasing, limits};
    return rep;
}

}  // namespace fuzznorm
