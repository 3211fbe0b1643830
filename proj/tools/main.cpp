// Command-line front end for the fuzznorm shared library. Talks to the
// library exclusively through the C API in fuzznorm/fuzznorm.h.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzznorm/fuzznorm.h"

namespace {

struct EmitState {
    std::ostream* records = nullptr;
    bool quiet = false;
    std::string plot_dir;
    std::map<std::string, std::ostringstream> plots;
};

void emit_line(int stream, const char* line, void* user) {
    auto* st = static_cast<EmitState*>(user);
    switch (stream) {
        case 0:
            if (st->records) *st->records << line << '\n';
            break;
        case 1:
            if (!st->quiet) std::cout << line << '\n';
            break;
        case 2: {
            if (st->plot_dir.empty()) break;
            std::string s = line;
            auto sp1 = s.find(' ');
            std::string series = s.substr(0, sp1);
            st->plots[series] << s.substr(sp1 + 1) << '\n';
            break;
        }
        default:
            break;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open config file '" << path << "'\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzznorm: checks for fuzzy strong phi-b-normed spaces and their operators"};
    app.require_subcommand(0, 1);

    std::string config_path, out_path, plot_dir, alpha_grid_arg;
    std::uint64_t seed = 0;
    bool seed_set = false, quiet = false, dump_config = false;
    double tol = 0.0;
    int samples = -1;

    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--out", out_path, "write report records (JSON lines) to this file");
    app.add_option("--plot-dir", plot_dir, "write two-column plot data files here");
    app.add_option("--alpha-grid", alpha_grid_arg, "comma-separated alpha levels, e.g. 0.1,0.5");
    app.add_option("--tol", tol, "tolerance override");
    app.add_option("--samples", samples, "sphere sample count override (0 = auto)");
    app.add_flag("--quiet", quiet, "suppress the summary table");
    app.add_flag("--dump-config", dump_config, "print the built-in default config and exit");
    auto* seed_opt = app.add_option("--seed", seed, "run seed");

    const char* subcommands[] = {"tnorm-check", "phi-check",   "space-check",   "d-alpha",
                                 "seq-converge", "op-bound",   "op-continuity", "op-norm",
                                 "op-complete",  "counterexample", "verify-all"};
    for (const char* name : subcommands) app.add_subcommand(name, "")->fallthrough();

    CLI11_PARSE(app, argc, argv);
    seed_set = seed_opt->count() > 0;

    if (dump_config) {
        char* cfg = nullptr;
        if (fzn_default_config(&cfg) != FZN_OK) {
            std::cerr << "error: " << fzn_last_error() << '\n';
            return 2;
        }
        std::cout << cfg << '\n';
        fzn_string_free(cfg);
        return 0;
    }

    std::string sub;
    for (const char* name : subcommands)
        if (app.get_subcommand(name)->parsed()) sub = name;
    if (sub.empty()) {
        std::cerr << "error: choose a subcommand (see --help)\n";
        return 2;
    }

    std::string config_text;
    if (!config_path.empty()) config_text = read_file(config_path);

    // overrides as a small JSON object; the library owns the semantics
    std::ostringstream ov;
    ov << '{';
    bool first = true;
    auto add = [&](const std::string& frag) {
        if (!first) ov << ',';
        ov << frag;
        first = false;
    };
    if (seed_set) add("\"seed\":" + std::to_string(seed));
    if (!config_path.empty()) {
        std::string dir = std::filesystem::path(config_path).parent_path().string();
        if (dir.empty()) dir = ".";
        add("\"base_dir\":\"" + dir + "\"");
    }
    if (tol > 0.0) {
        std::ostringstream t;
        t << "\"tol\":" << tol;
        add(t.str());
    }
    if (samples >= 0) add("\"samples\":" + std::to_string(samples));
    if (!alpha_grid_arg.empty()) add("\"alpha_grid\":[" + alpha_grid_arg + "]");
    ov << '}';
    std::string overrides = first ? std::string() : ov.str();

    EmitState state;
    state.quiet = quiet;
    state.plot_dir = plot_dir;
    std::ofstream out_file;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) {
            std::cerr << "error: cannot open output file '" << out_path << "'\n";
            return 2;
        }
        state.records = &out_file;
    } else {
        state.records = &std::cout;
    }

    int failures = 0;
    fzn_status st = fzn_run(sub.c_str(), config_text.empty() ? nullptr : config_text.c_str(),
                            overrides.empty() ? nullptr : overrides.c_str(), emit_line, &state,
                            &failures);
    if (st != FZN_OK) {
        std::cerr << "error: " << fzn_last_error() << '\n';
        return 2;
    }

    if (!plot_dir.empty()) {
        for (const auto& [series, data] : state.plots) {
            std::ofstream pf(plot_dir + "/" + series + ".dat");
            if (!pf) {
                std::cerr << "error: cannot write plot file for '" << series << "'\n";
                return 2;
            }
            pf << data.str();
        }
    }

    if (failures > 0) {
        if (!quiet) std::cerr << failures << " check(s) failed\n";
        return 1;
    }
    return 0;
}
