#pragma once

#include <vector>

#include "core/fuzzy_space.hpp"

namespace fuzznorm {

// Deterministic generator of x_k in R^n. Tables are cyclic
// (x_k = table[(k-1) mod size]), which also covers constant-offset and
// alternating negative controls.
struct SequenceSpec {
    enum class Family { PowerDecay, GeometricDecay, Table };

    Family family = Family::PowerDecay;
    Vector limit;      // candidate limit
    Vector direction;  // perturbation v (decay families)
    double rate = 1.0; // q for x + k^{-q} v, r for x + r^k v
    std::vector<Vector> table;

    Vector at(int k) const;  // k >= 1
    double decay_coeff(int k) const;

    static SequenceSpec power_decay(Vector limit, Vector v, double q);
    static SequenceSpec geometric(Vector limit, Vector v, double r);  // |r| < 1
    static SequenceSpec table_of(std::vector<Vector> points, Vector limit);
};

enum class SeqOutcome { Converges, Inconclusive, Diverges };
const char* to_string(SeqOutcome o);

struct SeqMode {
    enum class Kind { Classical, AlphaFuzzy, LFuzzy };
    Kind kind = Kind::Classical;
    double alpha = 0.5;               // AlphaFuzzy
    std::vector<double> alpha_grid;   // LFuzzy

    static SeqMode classical();
    static SeqMode alpha_fuzzy(double alpha);
    static SeqMode l_fuzzy(std::vector<double> grid);
};

struct SeqVerdict {
    SeqOutcome outcome = SeqOutcome::Inconclusive;
    Json witness;              // null unless Diverges
    std::vector<Json> trace;   // per-index probe values
};

// Classical mode samples N(x_n - x, t) on a fixed t-grid and requires the
// final value to clear 1 - tol; alpha-fuzzy tracks the strict level infimum
// lambda_n at level 1 - alpha down to tol; l-fuzzy sweeps the grid.
// Stalled traces produce Diverges with a witness, anything in between is
// Inconclusive.
SeqVerdict seq_convergence(const FuzzySpace& sp, const SequenceSpec& seq, const SeqMode& mode,
                           int n_max, double tol);

// Same thresholds applied to pair differences x_n - x_m over a
// deterministic index ladder (full scan when n_max <= 64).
SeqVerdict seq_cauchy(const FuzzySpace& sp, const SequenceSpec& seq, const SeqMode& mode,
                      int n_max, double tol);

// Geometric index ladder 1, 2, 3, 4, 6, ... n_max used by finite-horizon
// sequence verdicts.
std::vector<int> index_ladder(int n_max);

// Finite-horizon Cauchy classification from pair gaps: a tail below tol is
// Cauchy; otherwise the tail window must improve markedly on the preceding
// window (both windows span the same factor of indices) or the family is
// declared divergent.
SeqOutcome classify_cauchy_tail(double tail_worst, double window_worst, bool window_seen,
                                double tol);

}  // namespace fuzznorm
