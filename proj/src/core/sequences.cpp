#include "core/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzznorm {

Vector SequenceSpec::at(int k) const {
    if (k < 1) throw std::invalid_argument("sequence index must be >= 1");
    switch (family) {
        case Family::PowerDecay:
        case Family::GeometricDecay:
            return limit + decay_coeff(k) * direction;
        case Family::Table:
            return table[static_cast<std::size_t>(k - 1) % table.size()];
    }
    return limit;
}

double SequenceSpec::decay_coeff(int k) const {
    switch (family) {
        case Family::PowerDecay: return std::pow(static_cast<double>(k), -rate);
        case Family::GeometricDecay: return std::pow(rate, k);
        case Family::Table: return 0.0;
    }
    return 0.0;
}

SequenceSpec SequenceSpec::power_decay(Vector limit, Vector v, double q) {
    if (!(q > 0.0)) throw std::invalid_argument("power decay rate q must be positive");
    SequenceSpec s;
    s.family = Family::PowerDecay;
    s.limit = std::move(limit);
    s.direction = std::move(v);
    s.rate = q;
    return s;
}

SequenceSpec SequenceSpec::geometric(Vector limit, Vector v, double r) {
    if (!(std::fabs(r) < 1.0)) throw std::invalid_argument("geometric decay needs |r| < 1");
    SequenceSpec s;
    s.family = Family::GeometricDecay;
    s.limit = std::move(limit);
    s.direction = std::move(v);
    s.rate = r;
    return s;
}

SequenceSpec SequenceSpec::table_of(std::vector<Vector> points, Vector limit) {
    if (points.empty()) throw std::invalid_argument("table sequence needs at least one point");
    SequenceSpec s;
    s.family = Family::Table;
    s.limit = std::move(limit);
    s.direction = Vector::Zero(s.limit.size());
    s.table = std::move(points);
    return s;
}

const char* to_string(SeqOutcome o) {
    switch (o) {
        case SeqOutcome::Converges: return "converges";
        case SeqOutcome::Inconclusive: return "inconclusive";
        case SeqOutcome::Diverges: return "diverges";
    }
    return "?";
}

SeqMode SeqMode::classical() { return SeqMode{Kind::Classical, 0.0, {}}; }

SeqMode SeqMode::alpha_fuzzy(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
    return SeqMode{Kind::AlphaFuzzy, alpha, {}};
}

SeqMode SeqMode::l_fuzzy(std::vector<double> grid) {
    if (grid.empty()) throw std::invalid_argument("l-fuzzy mode needs an alpha grid");
    return SeqMode{Kind::LFuzzy, 0.0, std::move(grid)};
}

std::vector<int> index_ladder(int n_max) {
    std::vector<int> idx;
    int k = 1;
    while (k < n_max) {
        idx.push_back(k);
        k = std::max(k + 1, static_cast<int>(std::lround(k * 1.5)));
    }
    idx.push_back(n_max);
    return idx;
}

SeqOutcome classify_cauchy_tail(double tail_worst, double window_worst, bool window_seen,
                                double tol) {
    if (tail_worst <= tol) return SeqOutcome::Converges;
    if (!window_seen) return SeqOutcome::Inconclusive;
    if (tail_worst < 0.75 * window_worst) return SeqOutcome::Inconclusive;  // still shrinking
    return SeqOutcome::Diverges;
}

namespace {

constexpr double kStallSlack = 1e-12;
const double kClassicalTGrid[] = {0.5, 1.0, 2.0};

SeqOutcome combine(SeqOutcome a, SeqOutcome b) {
    if (a == SeqOutcome::Diverges || b == SeqOutcome::Diverges) return SeqOutcome::Diverges;
    if (a == SeqOutcome::Inconclusive || b == SeqOutcome::Inconclusive)
        return SeqOutcome::Inconclusive;
    return SeqOutcome::Converges;
}

// Verdict from a finite trace heading toward a goal: reached the goal,
// stalled short of it, or still moving.
SeqOutcome trace_outcome(double final_gap, double mid_gap, double tol) {
    if (final_gap <= tol) return SeqOutcome::Converges;
    if (final_gap >= mid_gap - kStallSlack) return SeqOutcome::Diverges;
    return SeqOutcome::Inconclusive;
}

SeqVerdict convergence_alpha(const FuzzySpace& sp, const SequenceSpec& seq, double alpha,
                             int n_max, double tol) {
    SeqVerdict v;
    auto ladder = index_ladder(n_max);
    std::vector<double> lambdas;
    lambdas.reserve(ladder.size());
    for (int k : ladder) {
        Vector diff = seq.at(k) - seq.limit;
        double lam = sp.level_value(diff, 1.0 - alpha, /*strict=*/true);
        lambdas.push_back(lam);
        v.trace.push_back(Json{{"n", k}, {"alpha", alpha}, {"lambda", lam}});
    }
    double final_gap = lambdas.back();
    double mid_gap = lambdas[lambdas.size() / 2];
    v.outcome = trace_outcome(final_gap, mid_gap, tol);
    if (v.outcome == SeqOutcome::Diverges)
        v.witness = Json{{"n", ladder.back()}, {"alpha", alpha}, {"lambda", final_gap}};
    return v;
}

}  // namespace

SeqVerdict seq_convergence(const FuzzySpace& sp, const SequenceSpec& seq, const SeqMode& mode,
                           int n_max, double tol) {
    if (n_max < 4) throw std::invalid_argument("n_max must be >= 4");
    if (seq.limit.size() != sp.dimension()) throw std::invalid_argument("dimension mismatch");

    switch (mode.kind) {
        case SeqMode::Kind::Classical: {
            SeqVerdict v;
            v.outcome = SeqOutcome::Converges;
            auto ladder = index_ladder(n_max);
            for (double t : kClassicalTGrid) {
                std::vector<double> gaps;
                for (int k : ladder) {
                    double nv = sp.norm(seq.at(k) - seq.limit, t);
                    gaps.push_back(1.0 - nv);
                    v.trace.push_back(Json{{"n", k}, {"t", t}, {"value", nv}});
                }
                SeqOutcome o = trace_outcome(gaps.back(), gaps[gaps.size() / 2], tol);
                if (o == SeqOutcome::Diverges && v.witness.is_null())
                    v.witness = Json{{"n", ladder.back()}, {"t", t}, {"value", 1.0 - gaps.back()}};
                v.outcome = combine(v.outcome, o);
            }
            return v;
        }
        case SeqMode::Kind::AlphaFuzzy:
            return convergence_alpha(sp, seq, mode.alpha, n_max, tol);
        case SeqMode::Kind::LFuzzy: {
            SeqVerdict v;
            v.outcome = SeqOutcome::Converges;
            for (double a : mode.alpha_grid) {
                SeqVerdict sub = convergence_alpha(sp, seq, a, n_max, tol);
                v.outcome = combine(v.outcome, sub.outcome);
                if (v.witness.is_null() && !sub.witness.is_null()) v.witness = sub.witness;
                for (auto& row : sub.trace) v.trace.push_back(std::move(row));
            }
            return v;
        }
    }
    return {};
}

SeqVerdict seq_cauchy(const FuzzySpace& sp, const SequenceSpec& seq, const SeqMode& mode,
                      int n_max, double tol) {
    if (n_max < 4) throw std::invalid_argument("n_max must be >= 4");
    if (seq.limit.size() != sp.dimension()) throw std::invalid_argument("dimension mismatch");

    std::vector<int> idx;
    if (n_max <= 64) {
        for (int k = 1; k <= n_max; ++k) idx.push_back(k);
    } else {
        idx = index_ladder(n_max);
        idx.push_back(n_max - 1);  // keep an adjacent tail pair
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    }

    auto pair_gap = [&](int a, int b, double level_or_t, bool classical) {
        Vector diff = seq.at(a) - seq.at(b);
        if (classical) return 1.0 - sp.norm(diff, level_or_t);
        return sp.level_value(diff, level_or_t, /*strict=*/true);
    };

    auto scan = [&](double param, bool classical, double alpha_for_trace) {
        // worst gap over pairs entirely in the tail [n_max/2, n_max] vs the
        // preceding window [n_max/4, n_max/2)
        double window_worst = 0.0, tail_worst = 0.0;
        bool window_seen = false;
        std::pair<int, int> tail_witness{0, 0};
        SeqVerdict v;
        int tail_from = n_max / 2;
        int window_from = tail_from / 2;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            for (std::size_t j = i + 1; j < idx.size(); ++j) {
                double g = pair_gap(idx[i], idx[j], param, classical);
                if (idx[i] >= tail_from) {
                    if (g > tail_worst) {
                        tail_worst = g;
                        tail_witness = {idx[i], idx[j]};
                    }
                } else if (idx[i] >= window_from && idx[j] < tail_from) {
                    window_seen = true;
                    window_worst = std::max(window_worst, g);
                }
            }
        }
        Json probe = classical ? Json{{"t", param}} : Json{{"alpha", alpha_for_trace}};
        probe["tail_worst"] = tail_worst;
        probe["window_worst"] = window_worst;
        v.trace.push_back(probe);
        v.outcome = classify_cauchy_tail(tail_worst, window_worst, window_seen, tol);
        if (v.outcome == SeqOutcome::Diverges)
            v.witness = Json{{"n", tail_witness.first}, {"m", tail_witness.second},
                             {"gap", tail_worst}};
        return v;
    };

    switch (mode.kind) {
        case SeqMode::Kind::Classical: {
            SeqVerdict v;
            v.outcome = SeqOutcome::Converges;
            for (double t : kClassicalTGrid) {
                SeqVerdict sub = scan(t, true, 0.0);
                v.outcome = combine(v.outcome, sub.outcome);
                if (v.witness.is_null() && !sub.witness.is_null()) v.witness = sub.witness;
                for (auto& row : sub.trace) v.trace.push_back(std::move(row));
            }
            return v;
        }
        case SeqMode::Kind::AlphaFuzzy:
            return scan(1.0 - mode.alpha, false, mode.alpha);
        case SeqMode::Kind::LFuzzy: {
            SeqVerdict v;
            v.outcome = SeqOutcome::Converges;
            for (double a : mode.alpha_grid) {
                SeqVerdict sub = scan(1.0 - a, false, a);
                v.outcome = combine(v.outcome, sub.outcome);
                if (v.witness.is_null() && !sub.witness.is_null()) v.witness = sub.witness;
                for (auto& row : sub.trace) v.trace.push_back(std::move(row));
            }
            return v;
        }
    }
    return {};
}

}  // namespace fuzznorm
