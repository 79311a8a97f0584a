// eventready: event-ready Bell-pair model tool.
//
// Subcommands expose the closed-form probabilities, the efficiency-threshold
// optimizer, the Fock-state verification oracle, the Monte Carlo trial engine
// and the Hardy-equality search.  All angle flags are degrees; every command
// prints a manifest block sufficient to reproduce the run.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eventready/core_model.hpp"
#include "eventready/event_sim.hpp"
#include "eventready/fock_oracle.hpp"
#include "eventready/inequalities.hpp"
#include "eventready/optimizer.hpp"
#include "eventready/records.hpp"
#include "eventready/rng.hpp"
#include "eventready/version.hpp"

namespace {

using namespace eventready;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitNoViolation = 3;

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buffer[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

Record manifest_for(const std::string& subcommand) {
    Record m;
    m.set("subcommand", subcommand);
    m.set("version", std::string(kVersion));
    m.set("timestamp", timestamp_utc());
    return m;
}

void print_record(const char* section, const Record& record, std::ostream& out = std::cout) {
    out << "# " << section << '\n' << record.to_text();
}

[[noreturn]] void usage_error(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    std::exit(kExitUsage);
}

struct ProbabilityArgs {
    std::string kind;
    double r = -1.0;
    std::optional<double> v, phi;
    std::optional<double> z1, z2, L, dz;
    std::optional<double> theta1, theta2, theta1p, theta2p;
    double eta = 1.0;
};

int run_probability(const ProbabilityArgs& args, Record manifest) {
    if (args.r < 0.0 || args.r > 1.0) usage_error("--r must supply a reflectivity in [0, 1]");
    const bool has_geometry = args.z1 || args.z2 || args.L || args.dz;
    if (has_geometry && (args.v || args.phi))
        usage_error("--v/--phi conflict with the geometry flags --z1/--z2/--L/--dz");
    if (has_geometry && !(args.z1 && args.z2 && args.L && args.dz))
        usage_error("geometry needs all of --z1, --z2, --L, --dz");

    const BeamSplitter bs = BeamSplitter::from_reflectivity(args.r);
    std::optional<Geometry> geometry;
    if (has_geometry) geometry = Geometry(*args.z1, *args.z2, *args.L, *args.dz);
    const double v = geometry ? visibility(*geometry) : args.v.value_or(1.0);
    const double phi = geometry ? geometry->phase() : args.phi.value_or(0.0);

    auto need = [&](const std::optional<double>& flag, const char* name) {
        if (!flag) usage_error(std::string("missing ") + name + " for --kind " + args.kind);
        return Angle::from_degrees(*flag);
    };

    manifest.set("kind", args.kind);
    manifest.set("R", args.r);
    manifest.set("v", v);
    manifest.set("phi", phi);
    manifest.set("eta", args.eta);

    Record result;
    result.set("rho", bs.rho());
    result.set("s", bs.s_factor());
    result.set("v", v);
    result.set("phi", phi);

    if (args.kind == "fourfold") {
        const Angle t1 = need(args.theta1, "--theta1"), t2 = need(args.theta2, "--theta2");
        const Angle t1p = need(args.theta1p, "--theta1p"), t2p = need(args.theta2p, "--theta2p");
        auto config = geometry
            ? ExperimentConfig::with_geometry(bs, *geometry, t1, t2, t1p, t2p, args.eta)
            : ExperimentConfig::with_visibility(bs, v, phi, t1, t2, t1p, t2p, args.eta);
        const double A = q_factor(bs.t_x(), bs.t_y(), t1, t1p) * q_factor(bs.t_x(), bs.t_y(), t2, t2p);
        const double B = q_factor(bs.r_x(), bs.r_y(), t1, t2p) * q_factor(bs.r_x(), bs.r_y(), t2, t1p);
        result.set("A", A);
        result.set("B", B);
        result.set("value", fourfold_probability(config));
    } else if (args.kind == "bellpair") {
        const Angle t1 = need(args.theta1, "--theta1"), t2 = need(args.theta2, "--theta2");
        result.set("value", bell_pair_probability(bs, v, t1, t2, args.eta));
    } else if (args.kind == "singles1") {
        result.set("value", singles_probability_d1(bs, need(args.theta1, "--theta1"), args.eta));
    } else if (args.kind == "singles2") {
        result.set("value", singles_probability_d2(bs, need(args.theta2, "--theta2"), args.eta));
    } else if (args.kind == "partial") {
        result.set("value", partial_entanglement_probability(
            bs, need(args.theta1, "--theta1"), need(args.theta2, "--theta2")));
    } else {
        usage_error("--kind must be one of fourfold|bellpair|singles1|singles2|partial");
    }

    print_record("manifest", manifest);
    print_record("result", result);
    return kExitOk;
}

void fill_threshold_result(Record& result, const ThresholdResult& threshold) {
    result.set("eta_min", *threshold.eta_min);
    result.set("theta1_deg", threshold.angles[0].degrees());
    result.set("theta2_deg", threshold.angles[1].degrees());
    result.set("theta1p_deg", threshold.angles[2].degrees());
    result.set("theta2p_deg", threshold.angles[3].degrees());
    result.set("converged", std::string(threshold.converged ? "true" : "false"));
    result.set("iterations", static_cast<std::int64_t>(threshold.iterations));
}

int run_threshold(double v, double rho, Record manifest) {
    manifest.set("v", v);
    manifest.set("rho", rho);
    print_record("manifest", manifest);
    const auto threshold = minimize_threshold(v, rho);
    Record result;
    if (!threshold.eta_min) {
        result.set("no_violation", std::string("true"));
        print_record("result", result);
        return kExitNoViolation;
    }
    fill_threshold_result(result, threshold);
    print_record("result", result);
    return kExitOk;
}

struct SweepArgs {
    double v_min = 1.0, v_max = 1.0;
    int v_steps = 1;
    double rho_min = 1.0, rho_max = 1.0;
    int rho_steps = 1;
    std::string out_path;
};

std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> grid(steps);
    if (steps == 1) { grid[0] = lo; return grid; }
    for (int i = 0; i < steps; ++i)
        grid[i] = lo + (hi - lo) * i / (steps - 1);
    return grid;
}

int run_sweep(const SweepArgs& args, Record manifest) {
    if (args.v_steps < 1 || args.rho_steps < 1) usage_error("--v-steps/--rho-steps must be >= 1");
    if (args.out_path.empty()) usage_error("--out is required for sweep");

    const auto v_grid = linspace(args.v_min, args.v_max, args.v_steps);
    const auto rho_grid = linspace(args.rho_min, args.rho_max, args.rho_steps);

    manifest.set("v_min", args.v_min);
    manifest.set("v_max", args.v_max);
    manifest.set("v_steps", static_cast<std::int64_t>(args.v_steps));
    manifest.set("rho_min", args.rho_min);
    manifest.set("rho_max", args.rho_max);
    manifest.set("rho_steps", static_cast<std::int64_t>(args.rho_steps));
    manifest.set("out", args.out_path);
    manifest.set("threads", static_cast<std::uint64_t>(sweep_thread_count()));

    const auto rows = sweep_surface(v_grid, rho_grid);

    std::ofstream csv(args.out_path);
    if (!csv) usage_error("cannot open --out path " + args.out_path);
    write_sweep_csv(csv, rows);
    csv.close();

    std::ofstream manifest_file(args.out_path + ".manifest");
    if (manifest_file) manifest_file << "# manifest\n" << manifest.to_text();

    print_record("manifest", manifest);
    Record result;
    result.set("rows", static_cast<std::uint64_t>(rows.size()));
    std::uint64_t violations = 0;
    for (const auto& row : rows) violations += row.eta_min ? 1 : 0;
    result.set("rows_with_violation", violations);
    print_record("result", result);
    return kExitOk;
}

// Closed form with the B amplitude deliberately inflated; exercised by the
// verify --perturb sanity hook.
double fourfold_perturbed(const ExperimentConfig& config, double factor) {
    const auto& bs = config.bs;
    const double A = q_factor(bs.t_x(), bs.t_y(), config.theta1, config.theta1p) *
                     q_factor(bs.t_x(), bs.t_y(), config.theta2, config.theta2p);
    const double B = factor * q_factor(bs.r_x(), bs.r_y(), config.theta1, config.theta2p) *
                     q_factor(bs.r_x(), bs.r_y(), config.theta2, config.theta1p);
    const double v = config.visibility_value();
    return config.eta * config.eta / 4.0 *
           (A * A + B * B - 2.0 * v * A * B * std::cos(config.phase()));
}

int run_verify(std::uint64_t n, std::uint64_t seed, bool perturb, Record manifest) {
    if (n == 0) usage_error("--n must be at least 1");
    manifest.set("n", n);
    manifest.set("seed", seed);
    manifest.set("perturb", std::string(perturb ? "true" : "false"));
    print_record("manifest", manifest);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> reflectivity(1e-6, 1.0 - 1e-6);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);

    double max_delta = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto config = ExperimentConfig::with_visibility(
            BeamSplitter::from_reflectivity(reflectivity(rng)), 1.0, phase(rng),
            Angle(angle(rng)), Angle(angle(rng)), Angle(angle(rng)), Angle(angle(rng)), 1.0);
        const double closed = perturb ? fourfold_perturbed(config, 1.0 + 1e-6)
                                      : fourfold_probability(config);
        const double oracle = fock::fourfold_expectation(config);
        max_delta = std::max(max_delta, std::abs(closed - oracle));
    }

    const bool pass = max_delta < 1e-12;
    Record result;
    result.set("max_abs_delta", max_delta);
    result.set("tolerance", 1e-12);
    result.set("pass", std::string(pass ? "true" : "false"));
    print_record("result", result);
    return pass ? kExitOk : kExitVerifyFailed;
}

struct SimulateArgs {
    double r = 0.5;
    double v = 1.0;
    double theta1 = 0.0, theta2 = 0.0;
    double eta = 1.0;
    std::uint64_t n = 1;
    std::uint64_t seed = 0;
    double thinning = 1.0;
    std::string out_path;
};

Record tally_record(const SimulateArgs& args, const CountTally& tally) {
    static const char* outcome_names[2][2] = {{"tt", "tp"}, {"pt", "pp"}};
    Record r;
    r.set("generator", std::string(generator_name()));
    r.set("seed", args.seed);
    r.set("n_trials", args.n);
    r.set("v", args.v);
    r.set("rho", args.r / (1.0 - args.r));
    r.set("R", args.r);
    r.set("eta", args.eta);
    r.set("theta1_deg", args.theta1);
    r.set("theta2_deg", args.theta2);
    r.set("n_emitted", tally.n_emitted);
    r.set("gate_open", tally.gate_open);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.set(std::string("counts.") + outcome_names[i][j], tally.coincidences[i][j]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.set(std::string("emitted.") + outcome_names[i][j], tally.outcomes_emitted[i][j]);
    r.set("singles.d1", tally.singles_d1[0]);
    r.set("singles.d1_perp", tally.singles_d1[1]);
    r.set("singles.d2", tally.singles_d2[0]);
    r.set("singles.d2_perp", tally.singles_d2[1]);
    return r;
}

int run_simulate(const SimulateArgs& args, Record manifest) {
    if (args.n == 0) usage_error("--n must be at least 1");
    if (!(args.r > 0.0 && args.r < 1.0)) usage_error("--r must lie strictly inside (0, 1)");

    TrialConfig config;
    config.experiment = ExperimentConfig::with_visibility(
        BeamSplitter::from_reflectivity(args.r), args.v, 0.0,
        Angle::from_degrees(args.theta1), Angle::from_degrees(args.theta2),
        Angle::from_degrees(90.0), Angle::from_degrees(0.0), args.eta);
    config.n_trials = args.n;
    config.seed = args.seed;
    config.preselector_thinning = args.thinning;

    manifest.set("R", args.r);
    manifest.set("v", args.v);
    manifest.set("theta1_deg", args.theta1);
    manifest.set("theta2_deg", args.theta2);
    manifest.set("eta", args.eta);
    manifest.set("n_trials", args.n);
    manifest.set("seed", args.seed);
    manifest.set("thinning", args.thinning);
    manifest.set("generator", std::string(generator_name()));

    const CountTally tally = simulate(config);
    const Record tally_rec = tally_record(args, tally);

    Record derived;
    const auto p = proper_probabilities(tally);
    derived.set("proper.p11", p.p11);
    derived.set("proper.p12", p.p12);
    derived.set("proper.p21", p.p21);
    derived.set("proper.p22", p.p22);
    derived.set("proper.s1", p.s1);
    derived.set("proper.s2", p.s2);
    derived.set("proper.pinf", *p.pinf);
    derived.set("proper.p1inf", *p.p1inf);
    derived.set("proper.pinf2", *p.pinf2);
    static const char* outcome_names[4] = {"tt", "tp", "pt", "pp"};
    const std::uint64_t coincidence_sum = tally.coincidences[0][0] + tally.coincidences[0][1] +
                                          tally.coincidences[1][0] + tally.coincidences[1][1];
    for (int outcome = 0; outcome < 4; ++outcome) {
        const std::string key = std::string("postselected.") + outcome_names[outcome];
        if (coincidence_sum > 0)
            derived.set(key, postselected_probability(tally, outcome));
        else
            derived.set(key, std::string("undefined"));
    }
    derived.set("ch.loopholefree", ch_loopholefree(p));
    if (*p.pinf > 0.0)
        derived.set("ch.ratio", ch_ratio(p));
    else
        derived.set("ch.ratio", std::string("undefined"));

    print_record("manifest", manifest);
    print_record("tally", tally_rec);
    print_record("derived", derived);

    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path);
        if (!out) usage_error("cannot open --out path " + args.out_path);
        out << "# manifest\n" << manifest.to_text();
        out << "# tally\n" << tally_rec.to_text();
        out << "# derived\n" << derived.to_text();
    }
    return kExitOk;
}

int run_hardy(double r, double v, double epsilon, Record manifest) {
    manifest.set("R", r);
    manifest.set("v", v);
    manifest.set("epsilon", epsilon);
    print_record("manifest", manifest);

    const auto settings = hardy_search(r, v, epsilon);
    Record result;
    if (!settings) {
        result.set("found", std::string("false"));
        print_record("result", result);
        return kExitNoViolation;
    }
    const auto report = hardy_check(*settings, v);
    result.set("found", std::string("true"));
    result.set("theta1_deg", settings->theta1.degrees());
    result.set("theta2_deg", settings->theta2.degrees());
    result.set("theta1p_deg", settings->theta1p.degrees());
    result.set("theta2p_deg", settings->theta2p.degrees());
    result.set("p_pair", report.p_pair);
    result.set("p_primed", report.p_primed);
    result.set("residual1", report.residual1);
    result.set("residual2", report.residual2);
    result.set("violating", std::string(report.violating ? "true" : "false"));
    print_record("result", result);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"event-ready Bell-pair model: probabilities, thresholds, simulation"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value file supplying any flag");
    app.allow_config_extras(CLI::config_extras_mode::error);

    ProbabilityArgs prob;
    auto* cmd_probability = app.add_subcommand("probability", "closed-form detection probabilities");
    cmd_probability->add_option("--kind", prob.kind, "fourfold|bellpair|singles1|singles2|partial")
        ->required();
    cmd_probability->add_option("--r", prob.r, "beam-splitter reflectivity R")->required();
    cmd_probability->add_option("--v", prob.v, "visibility in [0, 1]");
    cmd_probability->add_option("--phi", prob.phi, "detector phase (radians)");
    cmd_probability->add_option("--z1", prob.z1, "detector D1' position");
    cmd_probability->add_option("--z2", prob.z2, "detector D2' position");
    cmd_probability->add_option("--L", prob.L, "fringe spacing");
    cmd_probability->add_option("--dz", prob.dz, "detector opening width");
    cmd_probability->add_option("--theta1", prob.theta1, "P1 angle (degrees)");
    cmd_probability->add_option("--theta2", prob.theta2, "P2 angle (degrees)");
    cmd_probability->add_option("--theta1p", prob.theta1p, "P1' angle (degrees)");
    cmd_probability->add_option("--theta2p", prob.theta2p, "P2' angle (degrees)");
    cmd_probability->add_option("--eta", prob.eta, "detector efficiency (0, 1]");

    double th_v = 1.0, th_rho = 1.0;
    auto* cmd_threshold = app.add_subcommand("threshold", "minimal efficiency for a CH violation");
    cmd_threshold->add_option("--v", th_v, "visibility")->required();
    cmd_threshold->add_option("--rho", th_rho, "asymmetry rho = R/(1-R)")->required();

    SweepArgs sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "eta_min surface over (v, rho), CSV output");
    cmd_sweep->add_option("--v-min", sweep.v_min)->required();
    cmd_sweep->add_option("--v-max", sweep.v_max)->required();
    cmd_sweep->add_option("--v-steps", sweep.v_steps)->required();
    cmd_sweep->add_option("--rho-min", sweep.rho_min)->required();
    cmd_sweep->add_option("--rho-max", sweep.rho_max)->required();
    cmd_sweep->add_option("--rho-steps", sweep.rho_steps)->required();
    cmd_sweep->add_option("--out", sweep.out_path, "CSV output path")->required();

    std::uint64_t verify_n = 1000, verify_seed = 20260808;
    bool verify_perturb = false;
    auto* cmd_verify = app.add_subcommand("verify", "closed form vs Fock oracle on random configs");
    cmd_verify->add_option("--n", verify_n, "number of random configurations");
    cmd_verify->add_option("--seed", verify_seed, "random seed");
    cmd_verify->add_flag("--perturb", verify_perturb, "testing hook: inflate B by 1 + 1e-6");

    SimulateArgs sim;
    auto* cmd_simulate = app.add_subcommand("simulate", "Monte Carlo trial engine");
    cmd_simulate->add_option("--r", sim.r, "beam-splitter reflectivity R")->required();
    cmd_simulate->add_option("--v", sim.v, "visibility");
    cmd_simulate->add_option("--theta1", sim.theta1, "D1 analyzer angle (degrees)")->required();
    cmd_simulate->add_option("--theta2", sim.theta2, "D2 analyzer angle (degrees)")->required();
    cmd_simulate->add_option("--eta", sim.eta, "detector efficiency");
    cmd_simulate->add_option("--n", sim.n, "number of emitted systems")->required();
    cmd_simulate->add_option("--seed", sim.seed, "random seed");
    cmd_simulate->add_option("--thinning", sim.thinning, "preselector gate-open probability");
    cmd_simulate->add_option("--out", sim.out_path, "also write records to this path");

    double hardy_r = 0.5, hardy_v = 1.0, hardy_eps = 1e-6;
    auto* cmd_hardy = app.add_subcommand("hardy", "search settings for the Hardy equalities");
    cmd_hardy->add_option("--r", hardy_r, "beam-splitter reflectivity R")->required();
    cmd_hardy->add_option("--v", hardy_v, "visibility")->required();
    cmd_hardy->add_option("--epsilon", hardy_eps, "equality tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (cmd_probability->parsed()) return run_probability(prob, manifest_for("probability"));
        if (cmd_threshold->parsed()) return run_threshold(th_v, th_rho, manifest_for("threshold"));
        if (cmd_sweep->parsed()) return run_sweep(sweep, manifest_for("sweep"));
        if (cmd_verify->parsed())
            return run_verify(verify_n, verify_seed, verify_perturb, manifest_for("verify"));
        if (cmd_simulate->parsed()) return run_simulate(sim, manifest_for("simulate"));
        if (cmd_hardy->parsed())
            return run_hardy(hardy_r, hardy_v, hardy_eps, manifest_for("hardy"));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
