#include "core/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fuzznorm {

namespace {

Vector parse_vector(const Json& j) {
    if (!j.is_array()) throw ConfigError("expected a numeric array");
    Vector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = j[i].get<double>();
    return v;
}

template <class T>
T field(const Json& j, const char* key, T fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    return it->get<T>();
}

SequenceSpec sequence_from_json(const Json& j) {
    std::string family = j.at("family").get<std::string>();
    Vector limit = parse_vector(j.at("limit"));
    if (family == "power-decay")
        return SequenceSpec::power_decay(limit, parse_vector(j.at("direction")),
                                         field(j, "rate", 1.0));
    if (family == "geometric")
        return SequenceSpec::geometric(limit, parse_vector(j.at("direction")),
                                       field(j, "rate", 0.5));
    if (family == "table") {
        std::vector<Vector> pts;
        for (const auto& p : j.at("points")) pts.push_back(parse_vector(p));
        return SequenceSpec::table_of(std::move(pts), limit);
    }
    throw ConfigError("unknown sequence family '" + family + "'");
}

OperatorSequence::Decay decay_from_name(const std::string& name) {
    if (name == "inverse-k") return OperatorSequence::Decay::InverseK;
    if (name == "geometric") return OperatorSequence::Decay::Geometric;
    if (name == "alternating") return OperatorSequence::Decay::Alternating;
    if (name == "linear") return OperatorSequence::Decay::Linear;
    throw ConfigError("unknown operator-sequence decay '" + name + "'");
}

}  // namespace

Matrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open matrix file '" + path + "'");
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows < 1 || cols < 1)
        throw ConfigError("matrix file '" + path + "' must start with 'rows cols'");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!(in >> m(i, j)))
                throw ConfigError("matrix file '" + path + "' ended before " +
                                  std::to_string(rows * cols) + " entries");
    return m;
}

Matrix parse_matrix_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw ConfigError("matrix must be an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw ConfigError("matrix rows have inconsistent lengths");
        for (int c = 0; c < cols; ++c) m(i, c) = j[i][c].get<double>();
    }
    return m;
}

FuzzySpace space_from_json(const std::string& name, const Json& j) {
    try {
        int dim = j.at("dimension").get<int>();
        double p = field(j, "exponent", 1.0);
        Vector weights;
        if (j.contains("weights")) weights = parse_vector(j.at("weights"));
        CrispFunctional rho(dim, p, weights);

        const Json& pj = j.at("profile");
        std::string kind = pj.at("kind").get<std::string>();
        Profile prof = Profile::reciprocal();
        if (kind == "step") {
            prof = Profile::step(pj.at("h").get<double>());
        } else if (kind == "reciprocal") {
            prof = Profile::reciprocal();
        } else if (kind == "piecewise-linear") {
            std::vector<std::pair<double, double>> knots;
            for (const auto& k : pj.at("knots"))
                knots.emplace_back(k[0].get<double>(), k[1].get<double>());
            prof = Profile::piecewise_linear(std::move(knots));
        } else {
            throw ConfigError("unknown profile kind '" + kind + "'");
        }

        TNorm tn = TNorm::from_name(field<std::string>(j, "tnorm", "standard-intersection"));
        std::optional<double> k;
        if (j.contains("K")) k = j.at("K").get<double>();
        return FuzzySpace(name, rho, prof, tn, k);
    } catch (const Json::exception& e) {
        throw ConfigError("space '" + name + "': " + e.what());
    }
}

const FuzzySpace& RunConfig::space(const std::string& name) const {
    for (const auto& s : spaces)
        if (s.name == name) return s.space;
    throw ConfigError("unknown space '" + name + "'");
}

bool RunConfig::has_space(const std::string& name) const {
    for (const auto& s : spaces)
        if (s.name == name) return true;
    return false;
}

RunConfig RunConfig::defaults() {
    RunConfig c;
    TNorm min_t = TNorm::standard_intersection();

    c.spaces.push_back({"X_step", FuzzySpace("X_step", CrispFunctional(2, 1.0),
                                             Profile::step(0.5), min_t, 1.0)});
    c.spaces.push_back({"Y_rec", FuzzySpace("Y_rec", CrispFunctional(2, 1.0),
                                            Profile::reciprocal(), min_t, 1.0)});
    c.spaces.push_back({"Z_rec3", FuzzySpace("Z_rec3", CrispFunctional(3, 1.0),
                                             Profile::reciprocal(), min_t, 1.0)});
    c.spaces.push_back({"W_rec_p2", FuzzySpace("W_rec_p2", CrispFunctional(2, 2.0),
                                               Profile::reciprocal(), min_t)});

    Matrix i2 = Matrix::Identity(2, 2);
    c.operators.push_back({"T_double", "X_step", "Y_rec", 2.0 * i2});
    c.operators.push_back({"I_rec", "Y_rec", "Y_rec", i2});
    c.operators.push_back({"T2_rec", "Y_rec", "Y_rec", 2.0 * i2});

    Vector x(2), v(2), w(2);
    x << 1.0, 0.0;
    v << 0.0, 1.0;
    w << 1.0, 0.0;
    c.sequences.push_back(
        {"decay", "Y_rec", SequenceSpec::power_decay(x, v, 1.0), "converges", "converges"});
    c.sequences.push_back(
        {"constant", "Y_rec", SequenceSpec::table_of({x}, x), "converges", "converges"});
    // a constant offset converges to the wrong point: Cauchy but divergent
    c.sequences.push_back(
        {"offset", "Y_rec", SequenceSpec::table_of({x + v}, x), "diverges", "converges"});
    c.sequences.push_back(
        {"alternating", "Y_rec", SequenceSpec::table_of({x + v, x - v}, x), "diverges",
         "diverges"});

    OperatorSequence decaying;
    decaying.decay = OperatorSequence::Decay::InverseK;
    decaying.base = i2;
    decaying.perturbation = 0.5 * i2;
    decaying.n_max = c.horizon;
    c.operator_sequences.push_back({"op_decay", "Y_rec", "Y_rec", decaying, "converges"});

    OperatorSequence alternating = decaying;
    alternating.decay = OperatorSequence::Decay::Alternating;
    alternating.base = 1.5 * i2;
    c.operator_sequences.push_back({"op_alternating", "Y_rec", "Y_rec", alternating, "diverges"});

    UniquenessDef uq;
    uq.space = "Y_rec";
    uq.seq = SequenceSpec::power_decay(x, v, 1.0);
    uq.decoys = {x + w};
    uq.alpha = 0.5;
    c.uniqueness.push_back(std::move(uq));

    c.sweeps.push_back({"Z_rec3", "Y_rec", 50});
    c.sweeps.push_back({"X_step", "Y_rec", 50});  // precondition-unmet demonstration

    BasisDef basis;
    basis.space = "Y_rec";
    basis.vectors = {Vector::Unit(2, 0), Vector::Unit(2, 1)};
    basis.alpha = 0.5;
    c.bases.push_back(std::move(basis));
    return c;
}

RunConfig RunConfig::from_json(const Json& j, const std::string& base_dir) {
    if (j.is_null()) return defaults();
    // an explicit config describes the whole lab: absent sections are
    // empty, not the built-in defaults (those apply only with no config)
    RunConfig c;
    try {
        c.seed = field<std::uint64_t>(j, "seed", c.seed);
        if (j.contains("alpha_grid")) {
            c.alpha_grid.clear();
            for (const auto& a : j.at("alpha_grid")) c.alpha_grid.push_back(a.get<double>());
        }
        c.tol = field(j, "tol", c.tol);
        c.sphere_samples = field(j, "samples", c.sphere_samples);
        c.sample_count = field(j, "sample_count", c.sample_count);
        c.horizon = field(j, "horizon", c.horizon);
        c.seq_tol = field(j, "seq_tol", c.seq_tol);
        c.alpha_tol = field(j, "alpha_tol", c.alpha_tol);

        if (j.contains("spaces")) {
            for (const auto& [name, sj] : j.at("spaces").items())
                c.spaces.push_back({name, space_from_json(name, sj)});
        }
        if (j.contains("operators")) {
            for (const auto& [name, oj] : j.at("operators").items()) {
                OperatorDef d;
                d.name = name;
                d.domain = oj.at("domain").get<std::string>();
                d.codomain = oj.at("codomain").get<std::string>();
                if (oj.contains("matrix")) {
                    d.matrix = parse_matrix_json(oj.at("matrix"));
                } else if (oj.contains("matrix_file")) {
                    auto p = std::filesystem::path(base_dir) /
                             oj.at("matrix_file").get<std::string>();
                    d.matrix = load_matrix_file(p.string());
                } else if (oj.contains("identity_scale")) {
                    if (!c.has_space(d.domain))
                        throw ConfigError("operator '" + name + "': unknown domain '" +
                                          d.domain + "'");
                    int dim = c.space(d.domain).dimension();
                    d.matrix = oj.at("identity_scale").get<double>() *
                               Matrix::Identity(dim, dim);
                } else {
                    throw ConfigError("operator '" + name +
                                      "' needs matrix, matrix_file or identity_scale");
                }
                c.operators.push_back(std::move(d));
            }
        }
        if (j.contains("sequences")) {
            for (const auto& [name, sj] : j.at("sequences").items()) {
                SequenceDef d;
                d.name = name;
                d.space = sj.at("space").get<std::string>();
                d.spec = sequence_from_json(sj);
                d.expect = field<std::string>(sj, "expect", "");
                d.expect_cauchy = field<std::string>(sj, "expect_cauchy", "");
                c.sequences.push_back(std::move(d));
            }
        }
        if (j.contains("operator_sequences")) {
            for (const auto& [name, sj] : j.at("operator_sequences").items()) {
                OperatorSeqDef d;
                d.name = name;
                d.domain = sj.at("domain").get<std::string>();
                d.codomain = sj.at("codomain").get<std::string>();
                d.seq.decay = decay_from_name(sj.at("decay").get<std::string>());
                d.seq.rate = field(sj, "rate", 0.5);
                d.seq.base = parse_matrix_json(sj.at("base"));
                d.seq.perturbation = parse_matrix_json(sj.at("perturbation"));
                d.seq.n_max = field(sj, "horizon", c.horizon);
                d.expect_cauchy = field<std::string>(sj, "expect_cauchy", "");
                c.operator_sequences.push_back(std::move(d));
            }
        }
        if (j.contains("uniqueness")) {
            for (const auto& uj : j.at("uniqueness")) {
                UniquenessDef d;
                d.space = uj.at("space").get<std::string>();
                d.seq = sequence_from_json(uj.at("sequence"));
                for (const auto& dj : uj.at("decoys")) d.decoys.push_back(parse_vector(dj));
                d.alpha = field(uj, "alpha", 0.5);
                c.uniqueness.push_back(std::move(d));
            }
        }
        if (j.contains("sweeps")) {
            for (const auto& sj : j.at("sweeps")) {
                SweepDef d;
                d.domain = sj.at("domain").get<std::string>();
                d.codomain = sj.at("codomain").get<std::string>();
                d.count = field(sj, "count", 50);
                c.sweeps.push_back(std::move(d));
            }
        }
        if (j.contains("bases")) {
            for (const auto& bj : j.at("bases")) {
                BasisDef d;
                d.space = bj.at("space").get<std::string>();
                for (const auto& vj : bj.at("vectors")) d.vectors.push_back(parse_vector(vj));
                d.alpha = field(bj, "alpha", 0.5);
                c.bases.push_back(std::move(d));
            }
        }
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    // cross-reference validation with key names in the diagnostics
    for (const auto& o : c.operators) {
        if (!c.has_space(o.domain))
            throw ConfigError("operator '" + o.name + "': unknown domain '" + o.domain + "'");
        if (!c.has_space(o.codomain))
            throw ConfigError("operator '" + o.name + "': unknown codomain '" + o.codomain + "'");
    }
    for (const auto& s : c.sequences)
        if (!c.has_space(s.space))
            throw ConfigError("sequence '" + s.name + "': unknown space '" + s.space + "'");
    return c;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }
    return from_json(j, std::filesystem::path(path).parent_path().string());
}

void RunConfig::apply_overrides(const Json& overrides) {
    if (overrides.is_null()) return;
    seed = field<std::uint64_t>(overrides, "seed", seed);
    if (overrides.contains("alpha_grid")) {
        alpha_grid.clear();
        for (const auto& a : overrides.at("alpha_grid")) alpha_grid.push_back(a.get<double>());
    }
    tol = field(overrides, "tol", tol);
    sphere_samples = field(overrides, "samples", sphere_samples);
    sample_count = field(overrides, "sample_count", sample_count);
    horizon = field(overrides, "horizon", horizon);
}

}  // namespace fuzznorm
