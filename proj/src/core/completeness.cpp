#include "core/completeness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzznorm {

double OperatorSequence::coeff(int k) const {
    if (k < 1) throw std::invalid_argument("sequence index must be >= 1");
    switch (decay) {
        case Decay::InverseK: return 1.0 / k;
        case Decay::Geometric: return std::pow(rate, k);
        case Decay::Alternating: return (k % 2 == 0) ? 1.0 : -1.0;
        case Decay::Linear: return static_cast<double>(k);
    }
    return 0.0;
}

const char* to_string(OperatorSequence::Decay d) {
    switch (d) {
        case OperatorSequence::Decay::InverseK: return "inverse-k";
        case OperatorSequence::Decay::Geometric: return "geometric";
        case OperatorSequence::Decay::Alternating: return "alternating";
        case OperatorSequence::Decay::Linear: return "linear";
    }
    return "?";
}

namespace {

void check_preconditions(const OperatorSequence& seq, const FuzzySpace& domain,
                         const FuzzySpace& codomain, int sphere_samples, std::uint64_t seed) {
    // constructing a calculator for the first difference runs the
    // operator-norm hypothesis checks once up front
    Matrix d = seq.at(1) - seq.at(2);
    OperatorNormCalculator probe(LinearOperator(d, domain, codomain), sphere_samples, seed);
    (void)probe;
}

}  // namespace

OperatorCauchyVerdict operator_seq_cauchy(const OperatorSequence& seq, const FuzzySpace& domain,
                                          const FuzzySpace& codomain,
                                          const std::vector<double>& alpha_grid, double tol,
                                          int sphere_samples, std::uint64_t seed) {
    if (alpha_grid.empty()) throw std::invalid_argument("alpha grid must be non-empty");
    check_preconditions(seq, domain, codomain, sphere_samples, seed);

    std::vector<int> idx = index_ladder(seq.n_max);
    if (seq.n_max > 2) idx.push_back(seq.n_max - 1);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

    OperatorCauchyVerdict v;
    const int tail_from = seq.n_max / 2;
    const int window_from = tail_from / 2;
    double window_worst = 0.0, tail_worst = 0.0;
    bool window_seen = false;
    std::pair<int, int> tail_witness{0, 0};
    double witness_alpha = 0.0;
    std::vector<double> per_alpha_tail(alpha_grid.size(), 0.0);

    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            Matrix d = seq.at(idx[i]) - seq.at(idx[j]);
            const bool zero_diff = d.isZero(0.0);  // lambda is 0 exactly
            std::optional<OperatorNormCalculator> calc;
            if (!zero_diff)
                calc.emplace(LinearOperator(d, domain, codomain), sphere_samples, seed);
            for (std::size_t gi = 0; gi < alpha_grid.size(); ++gi) {
                double alpha = alpha_grid[gi];
                double lam =
                    zero_diff ? 0.0 : calc->level_infimum(1.0 - alpha, /*strict=*/true);
                if (idx[i] >= tail_from) {
                    per_alpha_tail[gi] = std::max(per_alpha_tail[gi], lam);
                    if (lam > tail_worst) {
                        tail_worst = lam;
                        tail_witness = {idx[i], idx[j]};
                        witness_alpha = alpha;
                    }
                } else if (idx[i] >= window_from && idx[j] < tail_from) {
                    window_seen = true;
                    window_worst = std::max(window_worst, lam);
                }
            }
        }
    }
    for (std::size_t gi = 0; gi < alpha_grid.size(); ++gi)
        v.trace.push_back(Json{{"alpha", alpha_grid[gi]}, {"tail_worst", per_alpha_tail[gi]}});

    v.tail_worst = tail_worst;
    v.outcome = classify_cauchy_tail(tail_worst, window_worst, window_seen, tol);
    if (v.outcome == SeqOutcome::Diverges)
        v.witness = Json{{"n", tail_witness.first}, {"m", tail_witness.second},
                         {"alpha", witness_alpha}, {"lambda", tail_worst}};
    return v;
}

OperatorLimitResult operator_seq_limit(const OperatorSequence& seq, const FuzzySpace& domain,
                                       const FuzzySpace& codomain,
                                       const std::vector<double>& alpha_grid, double tol,
                                       int sphere_samples, std::uint64_t seed) {
    OperatorLimitResult res;
    OperatorCauchyVerdict cauchy =
        operator_seq_cauchy(seq, domain, codomain, alpha_grid, tol, sphere_samples, seed);
    res.cauchy_outcome = cauchy.outcome;
    if (cauchy.outcome != SeqOutcome::Converges) {
        res.witness = Json{{"reason", "sequence is not Cauchy at the horizon"},
                           {"cauchy", to_string(cauchy.outcome)}};
        return res;
    }
    if (!seq.decays()) {
        res.witness = Json{{"reason", "no decay model declared for this family"}};
        return res;
    }

    // two-parameter model per entry: M(k) = L + a(k) * S, solved from two
    // horizon samples and validated at a third
    const int k1 = seq.n_max, k2 = std::max(1, seq.n_max / 2), k3 = std::max(1, seq.n_max / 4);
    const double a1 = seq.coeff(k1), a2 = seq.coeff(k2), a3 = seq.coeff(k3);
    Matrix m1 = seq.at(k1), m2 = seq.at(k2), m3 = seq.at(k3);
    Matrix s_est = (m1 - m2) / (a1 - a2);
    res.limit = (a2 * m1 - a1 * m2) / (a2 - a1);

    Matrix predicted3 = res.limit + a3 * s_est;
    double scale = std::max(1.0, m3.cwiseAbs().maxCoeff());
    res.model_residual = (m3 - predicted3).cwiseAbs().maxCoeff() / scale;
    if (res.model_residual > 1e-8) {
        res.witness = Json{{"reason", "iterates do not follow the declared decay model"},
                           {"model_residual", res.model_residual}};
        return res;
    }

    LinearOperator limit_op(res.limit, domain, codomain);
    BoundednessCertificate cert =
        bounded_certificate(limit_op, alpha_grid, sphere_samples, seed);
    res.limit_bounded = cert.all_finite();

    Matrix d = seq.at(seq.n_max) - res.limit;
    if (d.isZero(0.0)) {
        res.opnorm_residuals.assign(alpha_grid.size(), 0.0);
    } else {
        OperatorNormCalculator calc(LinearOperator(d, domain, codomain), sphere_samples, seed);
        for (double alpha : alpha_grid)
            res.opnorm_residuals.push_back(calc.level_infimum(alpha, /*strict=*/false));
    }

    res.ok = res.limit_bounded;
    if (!res.limit_bounded)
        res.witness = Json{{"reason", "recovered limit failed the boundedness certificate"}};
    return res;
}

UniquenessVerdict limit_uniqueness_probe(const FuzzySpace& sp, const SequenceSpec& seq,
                                         const std::vector<Vector>& decoys, double alpha,
                                         int n_max, double tol) {
    if (!sp.tnorm().lower_semicontinuous())
        throw PreconditionError("uniqueness of l-fuzzy limits needs a lower-semicontinuous "
                                "t-norm");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
    if (n_max < 8) throw std::invalid_argument("n_max must be >= 8");

    UniquenessVerdict v;
    auto lambda_at = [&](const Vector& y, int k) {
        return sp.level_value(seq.at(k) - y, 1.0 - alpha, /*strict=*/true);
    };

    const int ks[3] = {std::max(1, n_max / 4), std::max(2, n_max / 2), n_max};
    // quadratic Richardson extrapolation of lambda in the decay
    // coefficient; table families have no model, so the raw tail minimum
    // stands in
    auto extrapolate = [&](const Vector& y, double& tail_min) {
        if (seq.family == SequenceSpec::Family::Table) {
            double mn = lambda_at(y, ks[2]);
            for (int k = n_max / 2; k <= n_max; k += std::max(1, n_max / 16))
                mn = std::min(mn, lambda_at(y, k));
            tail_min = mn;
            return mn;
        }
        double e0 = seq.decay_coeff(ks[0]), e1 = seq.decay_coeff(ks[1]),
               e2 = seq.decay_coeff(ks[2]);
        double l0 = lambda_at(y, ks[0]), l1 = lambda_at(y, ks[1]), l2 = lambda_at(y, ks[2]);
        Eigen::Matrix3d vand;
        vand << 1, e0, e0 * e0, 1, e1, e1 * e1, 1, e2, e2 * e2;
        Eigen::Vector3d rhs(l0, l1, l2);
        tail_min = std::min({l0, l1, l2});
        return Eigen::Vector3d(vand.colPivHouseholderQr().solve(rhs))(0);
    };

    double unused = 0.0;
    double limit_lambda = extrapolate(seq.limit, unused);
    v.true_limit_final = lambda_at(seq.limit, n_max);
    bool limit_ok = std::fabs(limit_lambda) <= tol;

    v.passed = limit_ok;
    for (const auto& y : decoys) {
        if ((y - seq.limit).isZero(0.0))
            throw std::invalid_argument("decoy equals the limit candidate; not a decoy");
        DecoyFloor df;
        df.decoy = y;
        df.floor = extrapolate(y, df.tail_min);
        df.positive = df.floor > tol;
        if (!df.positive && v.witness.is_null())
            v.witness = Json{{"decoy_floor", df.floor}};
        v.passed = v.passed && df.positive;
        v.decoys.push_back(std::move(df));
    }
    if (!limit_ok && v.witness.is_null())
        v.witness = Json{{"true_limit_lambda_extrapolated", limit_lambda}};
    return v;
}

}  // namespace fuzznorm
