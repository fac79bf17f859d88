// Copyright 2026 The fockforge authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fockforge/cli_app.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fockforge/analysis.hpp"
#include "fockforge/circuit.hpp"
#include "fockforge/common.hpp"
#include "fockforge/dsl.hpp"
#include "fockforge/fock.hpp"
#include "fockforge/lift.hpp"

namespace fockforge {

namespace {

// Thrown once parse diagnostics have been written; maps to exit code 1.
struct SourceErrors {};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Every subcommand produces one flat table; the writers below render it as
// CSV (header plus rows) or JSON (array of objects, or a single object for
// fixed runs) with identical field names.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<bool> text_column;
    std::vector<std::vector<std::string>> rows;
    bool single = false;
};

void write_csv(const ResultTable& t, std::ostream& os) {
    for (size_t c = 0; c < t.columns.size(); ++c) {
        os << (c ? "," : "") << t.columns[c];
    }
    os << '\n';
    for (const auto& row : t.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            os << (c ? "," : "") << row[c];
        }
        os << '\n';
    }
}

void write_json_row(const ResultTable& t, const std::vector<std::string>& row, std::ostream& os) {
    os << '{';
    for (size_t c = 0; c < row.size(); ++c) {
        if (c) {
            os << ',';
        }
        os << '"' << t.columns[c] << "\":";
        if (t.text_column[c]) {
            os << '"' << row[c] << '"';
        } else {
            os << row[c];
        }
    }
    os << '}';
}

void write_json(const ResultTable& t, std::ostream& os) {
    if (t.single && t.rows.size() == 1) {
        write_json_row(t, t.rows[0], os);
        os << '\n';
        return;
    }
    os << "[\n";
    for (size_t r = 0; r < t.rows.size(); ++r) {
        write_json_row(t, t.rows[r], os);
        os << (r + 1 < t.rows.size() ? ",\n" : "\n");
    }
    os << "]\n";
}

void emit(const ResultTable& t, const std::string& format, const std::string& out_path,
          std::ostream& out) {
    std::ostringstream buf;
    if (format == "json") {
        write_json(t, buf);
    } else {
        write_csv(t, buf);
    }
    if (out_path.empty()) {
        out << buf.str();
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw DomainError("cannot open output file '" + out_path + "'");
    }
    file << buf.str();
}

struct LoadedExperiment {
    ExperimentSpec spec;
    std::string origin;
};

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw DomainError("cannot open experiment file '" + path + "'");
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

LoadedExperiment load_experiment(const std::string& file, const std::string& preset,
                                 std::ostream& err) {
    if (!file.empty() && !preset.empty()) {
        throw DomainError("pass either an experiment file or --preset, not both");
    }
    if (file.empty() && preset.empty()) {
        throw DomainError("pass an experiment file or --preset");
    }
    std::string origin = file.empty() ? "preset:" + preset : file;
    std::string source = file.empty() ? std::string(preset_source(preset)) : read_file(file);
    ParseResult parsed = parse_experiment(source);
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors) {
            err << origin << ':' << e.line << ':' << e.column << ": error: " << e.message;
            if (!e.token.empty()) {
                err << " near '" << e.token << "'";
            }
            err << '\n';
        }
        throw SourceErrors{};
    }
    return {std::move(*parsed.spec), std::move(origin)};
}

double parse_angle_flag(const std::string& text, const std::string& flag) {
    std::string why;
    auto value = parse_phase_literal(text, &why);
    if (!value) {
        throw DomainError(flag + ": " + why + " ('" + text + "')");
    }
    return *value;
}

// Accumulated phase angle applied to one mode, used to label table rows.
double summed_phase(const Circuit& c, int mode) {
    double total = 0.0;
    for (const auto& e : c.elements) {
        if (const auto* ps = std::get_if<PhaseShift>(&e); ps != nullptr && ps->mode == mode) {
            total += ps->phi;
        }
    }
    return total;
}

std::vector<SweepRange> free_sweeps(const ExperimentSpec& spec,
                                    const std::map<std::string, double>& fixed) {
    std::vector<SweepRange> free;
    for (const auto& s : spec.sweeps) {
        if (!fixed.contains(s.var)) {
            free.push_back(s);
        }
    }
    return free;
}

Occupation pair_pattern(int a_detector, int b_detector) {
    std::vector<int> counts(4, 0);
    counts[static_cast<size_t>(a_detector)] = 1;
    counts[static_cast<size_t>(2 + b_detector)] = 1;
    return Occupation(counts);
}

struct RunOptions {
    std::string format = "csv";
    std::string out_path;
    std::uint64_t shots = 0;
    std::uint64_t seed = 42;
    double tol = 1e-10;
};

// Coincidence-table output: one row per grid point over the sweeps that are
// not fixed by flags (first sweep outermost, last fastest). Row r samples
// with seed `seed + r` so reruns reproduce byte for byte.
void run_table(const LoadedExperiment& exp, const std::map<std::string, double>& fixed,
               const RunOptions& opt, std::ostream& out) {
    ResultTable table;
    table.columns = {"phi_a", "phi_b", "p_select", "p_a1b1", "p_a1b2", "p_a2b1", "p_a2b2", "E"};
    if (opt.shots > 0) {
        for (const char* c : {"n_a1b1", "n_a1b2", "n_a2b1", "n_a2b2"}) {
            table.columns.push_back(c);
        }
    }
    table.text_column.assign(table.columns.size(), false);
    auto sweeps = free_sweeps(exp.spec, fixed);
    table.single = sweeps.empty();

    PostSelectionRule rule = PostSelectionRule::one_photon_per_side();
    std::vector<int> index(sweeps.size(), 0);
    size_t row_index = 0;
    while (true) {
        std::map<std::string, double> values = fixed;
        for (size_t i = 0; i < sweeps.size(); ++i) {
            values[sweeps[i].var] = sweeps[i].at(index[i]);
        }
        Circuit bound = exp.spec.bound(values);
        ModeUnitary u = compile(bound, {opt.tol});
        FockState in = FockState::from_photons(bound.modes, exp.spec.input_photons);
        PostSelected sel = postselect(evolve(in, u), rule, {opt.tol});

        CoincidenceTable coins;
        coins.p_select = sel.probability;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                coins.probs(i, j) = std::norm(sel.state.amplitude(pair_pattern(i, j)));
            }
        }
        double e = coins.probs(0, 1) + coins.probs(1, 0) - coins.probs(0, 0) - coins.probs(1, 1);

        std::vector<std::string> row = {fmt(summed_phase(bound, 0)),
                                        fmt(summed_phase(bound, 3)),
                                        fmt(coins.p_select),
                                        fmt(coins.probs(0, 0)),
                                        fmt(coins.probs(0, 1)),
                                        fmt(coins.probs(1, 0)),
                                        fmt(coins.probs(1, 1)),
                                        fmt(e)};
        if (opt.shots > 0) {
            auto counts = sample_shots(coins, opt.shots, opt.seed + row_index);
            row.push_back(std::to_string(counts(0, 0)));
            row.push_back(std::to_string(counts(0, 1)));
            row.push_back(std::to_string(counts(1, 0)));
            row.push_back(std::to_string(counts(1, 1)));
        }
        table.rows.push_back(std::move(row));
        ++row_index;

        size_t k = sweeps.size();
        while (k > 0) {
            if (++index[k - 1] < sweeps[k - 1].steps) {
                break;
            }
            index[k - 1] = 0;
            --k;
        }
        if (k == 0) {
            break;
        }
    }
    emit(table, opt.format, opt.out_path, out);
}

// Raw output distribution over the full photon-number basis. Sweep grids
// make no sense here, so every phase variable must be fixed.
void run_distribution(const LoadedExperiment& exp, const std::map<std::string, double>& fixed,
                      const RunOptions& opt, std::ostream& out) {
    if (!free_sweeps(exp.spec, fixed).empty()) {
        throw DomainError(
            "sweeps need one-per-side post-selection on four modes; "
            "fix every phase variable with flags to get the output distribution");
    }
    Circuit bound = exp.spec.bound(fixed);
    ModeUnitary u = compile(bound, {opt.tol});
    FockState in = FockState::from_photons(bound.modes, exp.spec.input_photons);
    FockState state = evolve(in, u);

    auto basis = enumerate_basis(bound.modes, state.photons().value_or(0));
    std::vector<double> probs;
    probs.reserve(basis.size());
    for (const auto& pattern : basis) {
        probs.push_back(std::norm(state.amplitude(pattern)));
    }

    ResultTable table;
    table.columns = {"pattern", "probability"};
    table.text_column = {true, false};
    std::vector<std::int64_t> counts;
    if (opt.shots > 0) {
        table.columns.push_back("count");
        table.text_column.push_back(false);
        counts = sample_counts(probs, opt.shots, opt.seed);
    }
    for (size_t r = 0; r < basis.size(); ++r) {
        std::string pattern;
        for (int m = 0; m < bound.modes; ++m) {
            if (m) {
                pattern += ' ';
            }
            pattern += std::to_string(basis[r][m]);
        }
        std::vector<std::string> row = {std::move(pattern), fmt(probs[r])};
        if (opt.shots > 0) {
            row.push_back(std::to_string(counts[r]));
        }
        table.rows.push_back(std::move(row));
    }
    emit(table, opt.format, opt.out_path, out);
}

void run_experiment(const LoadedExperiment& exp, const std::map<std::string, double>& fixed,
                    const RunOptions& opt, std::ostream& out) {
    bool table_mode = exp.spec.circuit.modes == 4 && exp.spec.postselect == "one-per-side";
    if (table_mode) {
        run_table(exp, fixed, opt, out);
    } else {
        run_distribution(exp, fixed, opt, out);
    }
}

void apply_sweep_override(ExperimentSpec& spec, const std::string& var, const std::string& from,
                          const std::string& to, int steps, const std::string& suffix) {
    if (from.empty() && to.empty() && steps == 0) {
        return;
    }
    for (auto& s : spec.sweeps) {
        if (s.var != var) {
            continue;
        }
        if (!from.empty()) {
            s.from = parse_angle_flag(from, "--from" + suffix);
        }
        if (!to.empty()) {
            s.to = parse_angle_flag(to, "--to" + suffix);
        }
        if (steps != 0) {
            s.steps = steps;
        }
        return;
    }
    throw DomainError("no sweep variable named '" + var + "'");
}

void run_chsh(const std::array<double, 4>& angles, const RunOptions& opt, std::ostream& out) {
    const auto [a, ap, b, bp] = angles;
    const std::array<PhaseSettings, 4> settings{{{a, b}, {a, bp}, {ap, b}, {ap, bp}}};
    std::array<double, 4> e{};
    for (size_t i = 0; i < 4; ++i) {
        e[i] = correlation(settings[i]);
    }
    double s = e[0] + e[1] + e[2] - e[3];

    ResultTable table;
    table.columns = {"a", "aprime", "b", "bprime", "e_ab", "e_abp", "e_apb", "e_apbp", "S"};
    std::vector<std::string> row = {fmt(a),    fmt(ap),   fmt(b),    fmt(bp),  fmt(e[0]),
                                    fmt(e[1]), fmt(e[2]), fmt(e[3]), fmt(s)};
    if (opt.shots > 0) {
        for (const char* c :
             {"shots", "seed", "e_ab_emp", "e_abp_emp", "e_apb_emp", "e_apbp_emp", "S_emp"}) {
            table.columns.push_back(c);
        }
        row.push_back(std::to_string(opt.shots));
        row.push_back(std::to_string(opt.seed));
        std::array<double, 4> emp{};
        for (size_t i = 0; i < 4; ++i) {
            auto counts = sample_shots(coincidences(settings[i]), opt.shots, opt.seed + i);
            emp[i] = static_cast<double>(counts(0, 1) + counts(1, 0) - counts(0, 0) -
                                         counts(1, 1)) /
                     static_cast<double>(opt.shots);
            row.push_back(fmt(emp[i]));
        }
        row.push_back(fmt(emp[0] + emp[1] + emp[2] - emp[3]));
    }
    table.text_column.assign(table.columns.size(), false);
    table.single = true;
    table.rows.push_back(std::move(row));
    emit(table, opt.format, opt.out_path, out);
}

void run_steer(double phi_a, const std::string& detector_name, const RunOptions& opt,
               std::ostream& out) {
    Detector detector = detector_name == "A2" ? Detector::A2 : Detector::A1;
    SteeringState st = steering_state(phi_a, detector);
    Eigen::Vector2cd v = phase_fixed(Eigen::Vector2cd(st.unswapped, st.swapped));

    ResultTable table;
    table.columns = {"phi_a", "detector", "p", "ub_re", "ub_im", "sb_re", "sb_im"};
    table.text_column = {false, true, false, false, false, false, false};
    table.single = true;
    table.rows.push_back({fmt(phi_a), detector_name, fmt(st.probability), fmt(v(0).real()),
                          fmt(v(0).imag()), fmt(v(1).real()), fmt(v(1).imag())});
    emit(table, opt.format, opt.out_path, out);
}

void add_output_options(CLI::App* cmd, RunOptions* opt) {
    cmd->add_option("--format", opt->format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opt->out_path, "Write results to this file instead of stdout");
}

void add_sampling_options(CLI::App* cmd, RunOptions* opt) {
    cmd->add_option("--shots", opt->shots, "Also sample this many detection events per row");
    cmd->add_option("--seed", opt->seed, "Sampling seed")->capture_default_str();
}

void add_tolerance_option(CLI::App* cmd, RunOptions* opt) {
    cmd->add_option("--tol", opt->tol, "Numerical tolerance for unitarity and post-selection")
        ->envname("FOCKFORGE_TOL")
        ->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"fockforge: simulate multiphoton interference in lossless mode circuits"};
    app.require_subcommand(1);

    std::string sim_file, sim_preset, sim_phi_a, sim_phi_b;
    RunOptions sim_opt;
    CLI::App* sim = app.add_subcommand("simulate", "Run one experiment file or preset");
    sim->add_option("file", sim_file, "Experiment file");
    sim->add_option("--preset", sim_preset, "Built-in experiment: classic-hom or nonlocal-hom");
    sim->add_option("--phiA", sim_phi_a, "Fix phase variable phiA, e.g. 1/2pi or 0.25");
    sim->add_option("--phiB", sim_phi_b, "Fix phase variable phiB");
    add_output_options(sim, &sim_opt);
    add_sampling_options(sim, &sim_opt);
    add_tolerance_option(sim, &sim_opt);

    std::string swp_file, swp_preset, from_a, to_a, from_b, to_b;
    int steps_a = 0, steps_b = 0;
    RunOptions swp_opt;
    CLI::App* swp = app.add_subcommand("sweep", "Run a phase sweep grid");
    swp->add_option("file", swp_file, "Experiment file");
    swp->add_option("--preset", swp_preset, "Built-in experiment: classic-hom or nonlocal-hom");
    swp->add_option("--fromA", from_a, "Override the phiA sweep start");
    swp->add_option("--toA", to_a, "Override the phiA sweep end");
    swp->add_option("--stepsA", steps_a, "Override the phiA sweep step count")
        ->check(CLI::PositiveNumber);
    swp->add_option("--fromB", from_b, "Override the phiB sweep start");
    swp->add_option("--toB", to_b, "Override the phiB sweep end");
    swp->add_option("--stepsB", steps_b, "Override the phiB sweep step count")
        ->check(CLI::PositiveNumber);
    add_output_options(swp, &swp_opt);
    add_sampling_options(swp, &swp_opt);
    add_tolerance_option(swp, &swp_opt);

    std::string chsh_a = "0", chsh_ap = "1/2pi", chsh_b = "-1/4pi", chsh_bp = "1/4pi";
    RunOptions chsh_opt;
    CLI::App* chs = app.add_subcommand("chsh", "Evaluate the CHSH combination of correlations");
    chs->add_option("--a", chsh_a, "Side A setting a")->capture_default_str();
    chs->add_option("--aprime", chsh_ap, "Side A setting a'")->capture_default_str();
    chs->add_option("--b", chsh_b, "Side B setting b")->capture_default_str();
    chs->add_option("--bprime", chsh_bp, "Side B setting b'")->capture_default_str();
    add_output_options(chs, &chsh_opt);
    add_sampling_options(chs, &chsh_opt);

    std::string steer_phi_a = "0", steer_detector = "A1";
    RunOptions steer_opt;
    CLI::App* str = app.add_subcommand("steer", "Report B's conditional state per A detector");
    str->add_option("--phiA", steer_phi_a, "Side A phase setting")->capture_default_str();
    str->add_option("--detector", steer_detector, "Which side A detector fires")
        ->check(CLI::IsMember({"A1", "A2"}))
        ->capture_default_str();
    add_output_options(str, &steer_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) {
            LoadedExperiment exp = load_experiment(sim_file, sim_preset, err);
            std::map<std::string, double> fixed;
            if (sim->count("--phiA") > 0) {
                fixed["phiA"] = parse_angle_flag(sim_phi_a, "--phiA");
            }
            if (sim->count("--phiB") > 0) {
                fixed["phiB"] = parse_angle_flag(sim_phi_b, "--phiB");
            }
            if (!fixed.empty() && exp.spec.phase_vars.empty()) {
                throw DomainError("this experiment has no phase variables to fix");
            }
            run_experiment(exp, fixed, sim_opt, out);
        } else if (swp->parsed()) {
            LoadedExperiment exp = load_experiment(swp_file, swp_preset, err);
            apply_sweep_override(exp.spec, "phiA", from_a, to_a, steps_a, "A");
            apply_sweep_override(exp.spec, "phiB", from_b, to_b, steps_b, "B");
            run_experiment(exp, {}, swp_opt, out);
        } else if (chs->parsed()) {
            run_chsh({parse_angle_flag(chsh_a, "--a"), parse_angle_flag(chsh_ap, "--aprime"),
                      parse_angle_flag(chsh_b, "--b"), parse_angle_flag(chsh_bp, "--bprime")},
                     chsh_opt, out);
        } else {
            run_steer(parse_angle_flag(steer_phi_a, "--phiA"), steer_detector, steer_opt, out);
        }
    } catch (const SourceErrors&) {
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace fockforge
