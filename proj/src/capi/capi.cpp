#include "fuzznorm/fuzznorm.h"

#include <cstring>
#include <exception>
#include <string>

#include "core/config.hpp"
#include "core/operator_norm.hpp"
#include "core/operators.hpp"
#include "core/runner.hpp"
#include "core/scalar_algebra.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fzn_status fail(fzn_status code, const char* what) {
    g_last_error = what;
    return code;
}

// Maps core exceptions onto status codes; every API body runs inside.
template <class Fn>
fzn_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const fuzznorm::PreconditionError& e) {
        return fail(FZN_ERROR_PRECONDITION, e.what());
    } catch (const fuzznorm::ConfigError& e) {
        return fail(FZN_ERROR_PARSE, e.what());
    } catch (const std::domain_error& e) {
        return fail(FZN_ERROR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(FZN_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::runtime_error& e) {
        return fail(FZN_ERROR_NO_CONVERGENCE, e.what());
    } catch (const std::exception& e) {
        return fail(FZN_ERROR_INTERNAL, e.what());
    }
}

fuzznorm::ContinuityClass continuity_from_name(const char* name) {
    std::string s = name ? name : "";
    if (s == "continuous") return fuzznorm::ContinuityClass::Continuous;
    if (s == "lower-semicontinuous") return fuzznorm::ContinuityClass::LowerSemicontinuous;
    if (s == "none") return fuzznorm::ContinuityClass::None;
    throw std::invalid_argument("unknown continuity class '" + s + "'");
}

fuzznorm::Vector to_vector(const double* x, int dim) {
    if (!x || dim < 1) throw std::invalid_argument("null or empty vector");
    fuzznorm::Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = x[i];
    return v;
}

}  // namespace

struct fzn_tnorm {
    fuzznorm::TNorm impl;
};
struct fzn_phi {
    fuzznorm::PhiFunction impl;
};
struct fzn_space {
    fuzznorm::FuzzySpace impl;
};
struct fzn_operator {
    fuzznorm::LinearOperator impl;
};

extern "C" {

const char* fzn_version(void) { return "0.1.0"; }

const char* fzn_last_error(void) { return g_last_error.c_str(); }

void fzn_string_free(char* s) { delete[] s; }

/* --- t-norms ------------------------------------------------------------ */

fzn_status fzn_tnorm_create(const char* kind, fzn_tnorm** out) {
    return guarded([&]() {
        if (!kind || !out) throw std::invalid_argument("null argument");
        *out = new fzn_tnorm{fuzznorm::TNorm::from_name(kind)};
        return FZN_OK;
    });
}

fzn_status fzn_tnorm_create_custom(const char* name, double (*fn)(double, double, void*),
                                   void* user, const char* continuity, fzn_tnorm** out) {
    return guarded([&]() {
        if (!name || !fn || !out) throw std::invalid_argument("null argument");
        auto wrapped = [fn, user](double a, double b) { return fn(a, b, user); };
        *out = new fzn_tnorm{
            fuzznorm::TNorm::custom(name, wrapped, continuity_from_name(continuity))};
        return FZN_OK;
    });
}

void fzn_tnorm_destroy(fzn_tnorm* t) { delete t; }

fzn_status fzn_tnorm_eval(const fzn_tnorm* t, double a, double b, double* out) {
    return guarded([&]() {
        if (!t || !out) throw std::invalid_argument("null argument");
        *out = t->impl.eval(a, b);
        return FZN_OK;
    });
}

fzn_status fzn_tnorm_power(const fzn_tnorm* t, double a, int n, double* out) {
    return guarded([&]() {
        if (!t || !out) throw std::invalid_argument("null argument");
        *out = t->impl.power(a, n);
        return FZN_OK;
    });
}

fzn_status fzn_tnorm_axiom_check(const fzn_tnorm* t, int sample_count, uint64_t seed,
                                 double tol, char** report_json) {
    return guarded([&]() {
        if (!t || !report_json) throw std::invalid_argument("null argument");
        auto rep = fuzznorm::tnorm_axiom_check(t->impl, sample_count, seed, tol);
        *report_json = dup_string(rep.to_json().dump());
        return FZN_OK;
    });
}

/* --- phi functions -------------------------------------------------------- */

fzn_status fzn_phi_create(const char* kind, double param, fzn_phi** out) {
    return guarded([&]() {
        if (!kind || !out) throw std::invalid_argument("null argument");
        std::string k = kind;
        if (k == "abs")
            *out = new fzn_phi{fuzznorm::PhiFunction::abs()};
        else if (k == "abs-power")
            *out = new fzn_phi{fuzznorm::PhiFunction::abs_power(param)};
        else if (k == "rational-example")
            *out = new fzn_phi{fuzznorm::PhiFunction::rational_example(static_cast<int>(param))};
        else
            throw std::invalid_argument("unknown phi kind '" + k + "'");
        return FZN_OK;
    });
}

fzn_status fzn_phi_create_custom(const char* name, double (*fn)(double, void*), void* user,
                                 fzn_phi** out) {
    return guarded([&]() {
        if (!name || !fn || !out) throw std::invalid_argument("null argument");
        auto wrapped = [fn, user](double c) { return fn(c, user); };
        *out = new fzn_phi{fuzznorm::PhiFunction::custom(name, wrapped)};
        return FZN_OK;
    });
}

void fzn_phi_destroy(fzn_phi* f) { delete f; }

fzn_status fzn_phi_eval(const fzn_phi* f, double c, double* out) {
    return guarded([&]() {
        if (!f || !out) throw std::invalid_argument("null argument");
        *out = f->impl(c);
        return FZN_OK;
    });
}

fzn_status fzn_phi_inverse(const fzn_phi* f, double y, double tol, double* out) {
    return guarded([&]() {
        if (!f || !out) throw std::invalid_argument("null argument");
        *out = f->impl.inverse(y, tol);
        return FZN_OK;
    });
}

fzn_status fzn_phi_axiom_check(const fzn_phi* f, int grid_size, double tol,
                               char** report_json) {
    return guarded([&]() {
        if (!f || !report_json) throw std::invalid_argument("null argument");
        auto rep = fuzznorm::phi_axiom_check(f->impl, grid_size, tol);
        *report_json = dup_string(rep.to_json().dump());
        return FZN_OK;
    });
}

/* --- spaces ---------------------------------------------------------------- */

fzn_status fzn_space_create(const char* json_spec, fzn_space** out) {
    return guarded([&]() {
        if (!json_spec || !out) throw std::invalid_argument("null argument");
        fuzznorm::Json j;
        try {
            j = fuzznorm::Json::parse(json_spec);
        } catch (const fuzznorm::Json::parse_error& e) {
            throw fuzznorm::ConfigError(e.what());
        }
        *out = new fzn_space{fuzznorm::space_from_json("space", j)};
        return FZN_OK;
    });
}

void fzn_space_destroy(fzn_space* s) { delete s; }

fzn_status fzn_space_dimension(const fzn_space* s, int* out) {
    return guarded([&]() {
        if (!s || !out) throw std::invalid_argument("null argument");
        *out = s->impl.dimension();
        return FZN_OK;
    });
}

fzn_status fzn_space_satisfies_nvi(const fzn_space* s, int* out) {
    return guarded([&]() {
        if (!s || !out) throw std::invalid_argument("null argument");
        *out = s->impl.satisfies_nvi() ? 1 : 0;
        return FZN_OK;
    });
}

fzn_status fzn_space_norm_eval(const fzn_space* s, const double* x, int dim, double t,
                               double* out) {
    return guarded([&]() {
        if (!s || !out) throw std::invalid_argument("null argument");
        fuzznorm::Vector v = to_vector(x, dim);
        if (dim != s->impl.dimension())
            return fail(FZN_ERROR_DIMENSION_MISMATCH, "vector length does not match the space");
        *out = s->impl.norm(v, t);
        return FZN_OK;
    });
}

fzn_status fzn_space_level_infimum(const fzn_space* s, const double* x, int dim, double alpha,
                                   int strict, double tol, double* out) {
    return guarded([&]() {
        if (!s || !out) throw std::invalid_argument("null argument");
        fuzznorm::Vector v = to_vector(x, dim);
        if (dim != s->impl.dimension())
            return fail(FZN_ERROR_DIMENSION_MISMATCH, "vector length does not match the space");
        *out = s->impl.level_value(v, alpha, strict != 0,
                                   tol > 0.0 ? tol : fuzznorm::FuzzySpace::kDefaultLevelTol);
        return FZN_OK;
    });
}

fzn_status fzn_space_axiom_check(const fzn_space* s, int sample_count, uint64_t seed,
                                 double tol, char** report_json) {
    return guarded([&]() {
        if (!s || !report_json) throw std::invalid_argument("null argument");
        auto rep = fuzznorm::axiom_check_bn(s->impl, sample_count, seed, tol);
        *report_json = dup_string(rep.to_json().dump());
        return FZN_OK;
    });
}

/* --- operators -------------------------------------------------------------- */

fzn_status fzn_operator_create(const fzn_space* domain, const fzn_space* codomain,
                               const double* row_major, int rows, int cols,
                               fzn_operator** out) {
    return guarded([&]() {
        if (!domain || !codomain || !row_major || !out)
            throw std::invalid_argument("null argument");
        if (rows < 1 || cols < 1) throw std::invalid_argument("matrix must be non-empty");
        fuzznorm::Matrix a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a(i, j) = row_major[i * cols + j];
        if (cols != domain->impl.dimension() || rows != codomain->impl.dimension())
            return fail(FZN_ERROR_DIMENSION_MISMATCH,
                        "matrix shape does not match the space pair");
        *out = new fzn_operator{fuzznorm::LinearOperator(a, domain->impl, codomain->impl)};
        return FZN_OK;
    });
}

void fzn_operator_destroy(fzn_operator* t) { delete t; }

fzn_status fzn_operator_apply(const fzn_operator* t, const double* x, int x_dim, double* y,
                              int y_dim) {
    return guarded([&]() {
        if (!t || !y) throw std::invalid_argument("null argument");
        fuzznorm::Vector v = to_vector(x, x_dim);
        if (x_dim != t->impl.domain().dimension() || y_dim != t->impl.codomain().dimension())
            return fail(FZN_ERROR_DIMENSION_MISMATCH, "vector lengths do not match");
        fuzznorm::Vector r = t->impl.apply(v);
        for (int i = 0; i < y_dim; ++i) y[i] = r[i];
        return FZN_OK;
    });
}

fzn_status fzn_operator_boundedness_ratio(const fzn_operator* t, const double* x, int dim,
                                          double alpha, double* out) {
    return guarded([&]() {
        if (!t || !out) throw std::invalid_argument("null argument");
        fuzznorm::Vector v = to_vector(x, dim);
        if (dim != t->impl.domain().dimension())
            return fail(FZN_ERROR_DIMENSION_MISMATCH, "vector length does not match");
        *out = fuzznorm::boundedness_ratio(t->impl, v, alpha);
        return FZN_OK;
    });
}

fzn_status fzn_operator_certificate(const fzn_operator* t, const double* alpha_grid,
                                    int grid_len, int sphere_samples, uint64_t seed,
                                    char** report_json) {
    return guarded([&]() {
        if (!t || !alpha_grid || grid_len < 1 || !report_json)
            throw std::invalid_argument("null argument");
        std::vector<double> grid(alpha_grid, alpha_grid + grid_len);
        auto cert = fuzznorm::bounded_certificate(t->impl, grid, sphere_samples, seed);
        *report_json = dup_string(cert.to_json().dump());
        return FZN_OK;
    });
}

fzn_status fzn_operator_g_alpha(const fzn_operator* t, double alpha, int sphere_samples,
                                uint64_t seed, double* out) {
    return guarded([&]() {
        if (!t || !out) throw std::invalid_argument("null argument");
        fuzznorm::OperatorNormCalculator calc(t->impl, sphere_samples, seed);
        *out = calc.g_alpha(alpha);
        return FZN_OK;
    });
}

fzn_status fzn_operator_fuzzy_norm(const fzn_operator* t, double s, double alpha_tol,
                                   int sphere_samples, uint64_t seed, double* out) {
    return guarded([&]() {
        if (!t || !out) throw std::invalid_argument("null argument");
        fuzznorm::OperatorNormCalculator calc(t->impl, sphere_samples, seed);
        *out = calc.norm(s, alpha_tol > 0.0
                                ? alpha_tol
                                : fuzznorm::OperatorNormCalculator::kDefaultAlphaTol);
        return FZN_OK;
    });
}

/* --- runner --------------------------------------------------------------- */

fzn_status fzn_run(const char* subcommand, const char* config_json,
                   const char* overrides_json, fzn_emit_cb emit, void* user, int* failures) {
    return guarded([&]() {
        if (!subcommand) throw std::invalid_argument("null subcommand");
        fuzznorm::Json overrides;
        if (overrides_json && *overrides_json) {
            try {
                overrides = fuzznorm::Json::parse(overrides_json);
            } catch (const fuzznorm::Json::parse_error& e) {
                throw fuzznorm::ConfigError(e.what());
            }
        }
        // "base_dir" anchors relative matrix_file references (the caller
        // holds the config's location; we only see its text)
        std::string base_dir = overrides.is_object() && overrides.contains("base_dir")
                                   ? overrides.at("base_dir").get<std::string>()
                                   : ".";
        fuzznorm::RunConfig cfg;
        if (config_json && *config_json) {
            fuzznorm::Json j;
            try {
                j = fuzznorm::Json::parse(config_json);
            } catch (const fuzznorm::Json::parse_error& e) {
                throw fuzznorm::ConfigError(e.what());
            }
            cfg = fuzznorm::RunConfig::from_json(j, base_dir);
        } else {
            cfg = fuzznorm::RunConfig::defaults();
        }
        if (!overrides.is_null()) cfg.apply_overrides(overrides);

        fuzznorm::RunResult res = fuzznorm::run_subcommand(subcommand, cfg);
        if (emit) {
            for (const auto& rec : res.records) emit(0, rec.to_line().c_str(), user);
            std::string table = fuzznorm::summary_table(res.records);
            std::size_t start = 0;
            while (start < table.size()) {
                std::size_t end = table.find('\n', start);
                if (end == std::string::npos) end = table.size();
                emit(1, table.substr(start, end - start).c_str(), user);
                start = end + 1;
            }
            for (const auto& plot : res.plots) {
                for (auto [x, y] : plot.rows) {
                    std::string line = plot.name + " " +
                                       fuzznorm::Json(x).dump() + " " +
                                       fuzznorm::Json(y).dump();
                    emit(2, line.c_str(), user);
                }
            }
        }
        if (failures) *failures = res.failures();
        return FZN_OK;
    });
}

fzn_status fzn_default_config(char** config_json) {
    return guarded([&]() {
        if (!config_json) throw std::invalid_argument("null argument");
        // serialize the default lab back to the documented schema
        fuzznorm::RunConfig c = fuzznorm::RunConfig::defaults();
        fuzznorm::Json j;
        j["seed"] = c.seed;
        j["alpha_grid"] = c.alpha_grid;
        j["tol"] = c.tol;
        j["samples"] = c.sphere_samples;
        j["sample_count"] = c.sample_count;
        j["horizon"] = c.horizon;
        fuzznorm::Json spaces = fuzznorm::Json::object();
        for (const auto& s : c.spaces) {
            fuzznorm::Json sj = s.space.to_json();
            sj.erase("name");
            sj.erase("satisfies_nvi");
            spaces[s.name] = sj;
        }
        j["spaces"] = spaces;
        fuzznorm::Json ops = fuzznorm::Json::object();
        for (const auto& o : c.operators) {
            fuzznorm::Json rows = fuzznorm::Json::array();
            for (int r = 0; r < o.matrix.rows(); ++r) {
                fuzznorm::Json row = fuzznorm::Json::array();
                for (int cc = 0; cc < o.matrix.cols(); ++cc) row.push_back(o.matrix(r, cc));
                rows.push_back(row);
            }
            ops[o.name] =
                fuzznorm::Json{{"domain", o.domain}, {"codomain", o.codomain}, {"matrix", rows}};
        }
        j["operators"] = ops;
        *config_json = dup_string(j.dump(2));
        return FZN_OK;
    });
}

}  // extern "C"
