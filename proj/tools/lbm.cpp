// Command-line entry point: generate synthetic block matrices, cluster,
// estimate block parameters, run the goodness-of-fit test and the sequential
// cluster-number selection, and drive the three study harnesses.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "lbmtest/lbmtest.hpp"

namespace {

enum class LogLevel { Debug = 0, Info = 1, Warn = 2, Error = 3, Off = 4 };

LogLevel g_log_level = LogLevel::Info;

void log_at(LogLevel level, const std::string& msg) {
    static const char* names[] = {"debug", "info", "warn", "error"};
    if (level < g_log_level) return;
    std::cerr << "[lbm:" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

LogLevel parse_log_level(const std::string& name) {
    if (name == "debug") return LogLevel::Debug;
    if (name == "info") return LogLevel::Info;
    if (name == "warn") return LogLevel::Warn;
    if (name == "error") return LogLevel::Error;
    if (name == "off") return LogLevel::Off;
    throw CLI::ValidationError("--log-level", "unknown level " + name);
}

lbmtest::Json meta_json(const std::string& command, lbmtest::Json config) {
    return lbmtest::Json{{"meta", lbmtest::Json{{"version", lbmtest::kVersion},
                                                {"command", command},
                                                {"config", std::move(config)}}}};
}

lbmtest::ObservedMatrix load_matrix(const std::string& path) {
    lbmtest::ObservedMatrix m(lbmtest::read_matrix_csv_file(path));
    lbmtest::validate(m);
    return m;
}

std::vector<std::pair<lbmtest::Index, lbmtest::Index>> size_ladder(lbmtest::Index n_step,
                                                                   lbmtest::Index p_step,
                                                                   int from, int to) {
    std::vector<std::pair<lbmtest::Index, lbmtest::Index>> sizes;
    for (int i = from; i <= to; ++i) sizes.emplace_back(n_step * i, p_step * i);
    return sizes;
}

struct GenerateArgs {
    std::string family = "gaussian";
    std::string preset = "paper-4x3";
    int t = 0;
    std::int64_t n = 300;
    std::int64_t p = 225;
    std::uint64_t seed = 0;
    std::string out = "matrix.csv";
    std::string truth_out;
};

int run_generate(const GenerateArgs& args) {
    if (args.preset != "paper-4x3")
        throw lbmtest::Error("unknown preset: " + args.preset);
    const lbmtest::Family family = lbmtest::family_from_name(args.family);
    lbmtest::BlockParams params = lbmtest::preset_4x3(family);
    if (args.t != 0)
        params = lbmtest::interpolate_means(params, args.t, lbmtest::interpolation_center(family));

    lbmtest::GeneratorSpec spec{family, params, args.n, args.p, args.seed};
    const auto [matrix, truth] = lbmtest::generate(spec);
    lbmtest::write_matrix_csv(args.out, matrix.data);
    log_at(LogLevel::Info, "wrote " + std::to_string(args.n) + "x" + std::to_string(args.p) +
                               " matrix to " + args.out);
    if (!args.truth_out.empty()) {
        lbmtest::Json j = meta_json("generate", lbmtest::Json{{"family", args.family},
                                                              {"preset", args.preset},
                                                              {"t", args.t},
                                                              {"n", args.n},
                                                              {"p", args.p},
                                                              {"seed", args.seed},
                                                              {"out", args.out}});
        j.update(lbmtest::to_json(truth));
        lbmtest::write_text_file(args.truth_out, lbmtest::dump_json(j, 2));
        log_at(LogLevel::Info, "wrote ground-truth structure to " + args.truth_out);
    }
    return 0;
}

struct ClusterArgs {
    std::string in;
    int k = 1;
    int h = 1;
    std::string out = "structure.json";
};

int run_cluster(const ClusterArgs& args) {
    const auto matrix = load_matrix(args.in);
    const lbmtest::BlockStructure structure =
        lbmtest::ward_cocluster({matrix, args.k, args.h});
    lbmtest::Json j = meta_json(
        "cluster", lbmtest::Json{{"in", args.in}, {"k", args.k}, {"h", args.h}});
    j.update(lbmtest::to_json(structure));
    lbmtest::write_text_file(args.out, lbmtest::dump_json(j, 2));
    return 0;
}

struct EstimateArgs {
    std::string in;
    std::string structure;
    std::string out_params = "params.json";
    std::string out_z = "zhat.csv";
};

int run_estimate(const EstimateArgs& args) {
    const auto matrix = load_matrix(args.in);
    const auto structure = lbmtest::block_structure_from_json(lbmtest::read_json_file(args.structure));
    const lbmtest::EstimationResult est = lbmtest::estimate(matrix, structure);
    lbmtest::Json j = meta_json("estimate",
                                lbmtest::Json{{"in", args.in}, {"structure", args.structure}});
    j.update(lbmtest::to_json(est.params));
    lbmtest::write_text_file(args.out_params, lbmtest::dump_json(j, 2));
    lbmtest::write_matrix_csv(args.out_z, est.normalized.data);
    return 0;
}

struct TestArgs {
    std::string in;
    int k = 1;
    int h = 1;
    double alpha = 0.01;
};

int run_test(const TestArgs& args) {
    const auto matrix = load_matrix(args.in);
    lbmtest::TestConfig cfg;
    cfg.alpha = args.alpha;
    const lbmtest::TestResult result = lbmtest::gof_test(matrix, args.k, args.h, cfg);
    lbmtest::Json j = meta_json("test", lbmtest::Json{{"in", args.in},
                                                      {"k", args.k},
                                                      {"h", args.h},
                                                      {"alpha", args.alpha}});
    j.update(lbmtest::to_json(result));
    std::cout << lbmtest::dump_json(j, 2);
    return result.reject ? 1 : 0;
}

struct SelectArgs {
    std::string in;
    double alpha = 0.01;
    int l_max = 12;
};

int run_select(const SelectArgs& args) {
    const auto matrix = load_matrix(args.in);
    lbmtest::TestConfig cfg;
    cfg.alpha = args.alpha;
    cfg.l_max = std::min<int>(args.l_max,
                              static_cast<int>(std::min(matrix.n(), matrix.p())) + 1);
    if (cfg.l_max != args.l_max)
        log_at(LogLevel::Warn, "l_max clamped to " + std::to_string(cfg.l_max) +
                                   " (matrix too small for " + std::to_string(args.l_max) + ")");
    const lbmtest::SelectionTrace trace = lbmtest::sequential_select(matrix, cfg);
    lbmtest::Json j = meta_json("select", lbmtest::Json{{"in", args.in},
                                                        {"alpha", args.alpha},
                                                        {"l_max", cfg.l_max}});
    j.update(lbmtest::to_json(trace));
    std::cout << lbmtest::dump_json(j, 2);
    return trace.selected ? 0 : 1;
}

struct ExperimentArgs {
    std::string study;
    std::string family = "gaussian";
    std::string scale = "desk";
    int trials = 0;  // 0 = scale default
    double alpha = 0.01;
    std::uint64_t seed = 0;
    std::string out = "report.json";
    std::string csv_dir;
    std::string t_grid_csv;
    int threads = 0;
};

lbmtest::ExperimentPlan build_plan(const ExperimentArgs& args) {
    lbmtest::ExperimentPlan plan;
    plan.family = lbmtest::family_from_name(args.family);
    plan.alpha = args.alpha;
    plan.base_seed = args.seed;
    const bool paper = args.scale == "paper";
    if (!paper && args.scale != "desk")
        throw lbmtest::Error("unknown scale: " + args.scale + " (expected desk or paper)");

    if (args.study == "realizable") {
        plan.study = lbmtest::Study::Realizable;
        plan.size_grid = size_ladder(300, 225, 1, paper ? 10 : 5);
        plan.trials = paper ? 1000 : 300;
    } else if (args.study == "unrealizable") {
        plan.study = lbmtest::Study::Unrealizable;
        plan.size_grid = size_ladder(200, 150, 1, paper ? 10 : 6);
        plan.trials = 100;
    } else if (args.study == "accuracy") {
        plan.study = lbmtest::Study::Accuracy;
        plan.size_grid = size_ladder(40, 30, 1, paper ? 10 : 6);
        plan.trials = paper ? 1000 : 100;
        plan.t_grid = paper ? std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}
                            : std::vector<int>{0, 3, 6, 9};
    } else {
        throw lbmtest::Error("unknown study: " + args.study);
    }
    if (args.trials > 0) plan.trials = args.trials;
    if (!args.t_grid_csv.empty()) {
        plan.t_grid.clear();
        std::size_t pos = 0;
        while (pos < args.t_grid_csv.size()) {
            auto comma = args.t_grid_csv.find(',', pos);
            if (comma == std::string::npos) comma = args.t_grid_csv.size();
            plan.t_grid.push_back(std::stoi(args.t_grid_csv.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    }
    return plan;
}

int run_experiment(const ExperimentArgs& args) {
    const lbmtest::ExperimentPlan plan = build_plan(args);
    log_at(LogLevel::Info, std::string("running ") + lbmtest::study_name(plan.study) + " study: " +
                               std::to_string(plan.size_grid.size()) + " sizes x " +
                               std::to_string(std::max<std::size_t>(plan.t_grid.size(), 1)) +
                               " t x " + std::to_string(plan.trials) + " trials");
    const lbmtest::StudyReport report = lbmtest::run_study(plan, args.threads);
    lbmtest::write_text_file(args.out, lbmtest::dump_json(lbmtest::to_json(report), 2));
    log_at(LogLevel::Info, "wrote report to " + args.out);
    if (!args.csv_dir.empty()) {
        lbmtest::write_report_csvs(report, args.csv_dir);
        log_at(LogLevel::Info, "wrote CSV outputs to " + args.csv_dir);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goodness-of-fit testing and cluster-number selection for latent block models"};
    app.set_config("--config", "", "Config file mirroring the flag names");
    app.require_subcommand(1);
    // --h is a documented option on some subcommands, so help keeps only its long form
    app.set_help_flag("--help", "Print help");
    std::string log_level = "info";
    app.add_option("--log-level", log_level, "debug|info|warn|error|off")->capture_default_str();

    GenerateArgs gen;
    auto* cmd_gen = app.add_subcommand("generate", "Draw a synthetic observed matrix");
    cmd_gen->set_help_flag("--help", "Print help");
    cmd_gen->add_option("--family", gen.family, "gaussian|bernoulli|poisson")->capture_default_str();
    cmd_gen->add_option("--preset", gen.preset, "Block parameter preset")->capture_default_str();
    cmd_gen->add_option("--t", gen.t, "Mean-separation step 0..9 (0 = preset means)")
        ->check(CLI::Range(0, 9))
        ->capture_default_str();
    cmd_gen->add_option("--n", gen.n, "Rows")->capture_default_str();
    cmd_gen->add_option("--p", gen.p, "Columns")->capture_default_str();
    cmd_gen->add_option("--seed", gen.seed, "64-bit seed")->capture_default_str();
    cmd_gen->add_option("--out", gen.out, "Matrix CSV path")->capture_default_str();
    cmd_gen->add_option("--truth", gen.truth_out, "Ground-truth structure JSON path");

    ClusterArgs clu;
    auto* cmd_clu = app.add_subcommand("cluster", "Ward co-clustering of a matrix");
    cmd_clu->set_help_flag("--help", "Print help");
    cmd_clu->add_option("--in", clu.in, "Matrix CSV")->required();
    cmd_clu->add_option("--k", clu.k, "Row clusters")->required();
    cmd_clu->add_option("--h", clu.h, "Column clusters")->required();
    cmd_clu->add_option("--out", clu.out, "Structure JSON path")->capture_default_str();

    EstimateArgs est;
    auto* cmd_est = app.add_subcommand("estimate", "Block parameter estimates and normalized matrix");
    cmd_est->set_help_flag("--help", "Print help");
    cmd_est->add_option("--in", est.in, "Matrix CSV")->required();
    cmd_est->add_option("--structure", est.structure, "Structure JSON")->required();
    cmd_est->add_option("--out-params", est.out_params, "Params JSON path")->capture_default_str();
    cmd_est->add_option("--out-z", est.out_z, "Normalized matrix CSV path")->capture_default_str();

    TestArgs tst;
    auto* cmd_tst = app.add_subcommand("test", "Goodness-of-fit test for given (K0, H0)");
    cmd_tst->set_help_flag("--help", "Print help");
    cmd_tst->add_option("--in", tst.in, "Matrix CSV")->required();
    cmd_tst->add_option("--k", tst.k, "Hypothesized row clusters")->required();
    cmd_tst->add_option("--h", tst.h, "Hypothesized column clusters")->required();
    cmd_tst->add_option("--alpha", tst.alpha, "Significance level")->capture_default_str();

    SelectArgs sel;
    auto* cmd_sel = app.add_subcommand("select", "Sequential selection of cluster numbers");
    cmd_sel->set_help_flag("--help", "Print help");
    cmd_sel->add_option("--in", sel.in, "Matrix CSV")->required();
    cmd_sel->add_option("--alpha", sel.alpha, "Significance level")->capture_default_str();
    cmd_sel->add_option("--l-max", sel.l_max, "Cap on K0 + H0")->capture_default_str();

    ExperimentArgs exp;
    auto* cmd_exp = app.add_subcommand("experiment", "Run a study harness");
    cmd_exp->set_help_flag("--help", "Print help");
    cmd_exp->add_option("study", exp.study, "realizable|unrealizable|accuracy")->required();
    cmd_exp->add_option("--family", exp.family, "gaussian|bernoulli|poisson")->capture_default_str();
    cmd_exp->add_option("--scale", exp.scale, "desk|paper")->capture_default_str();
    cmd_exp->add_option("--trials", exp.trials, "Trials per cell (0 = scale default)")
        ->capture_default_str();
    cmd_exp->add_option("--alpha", exp.alpha, "Significance level")->capture_default_str();
    cmd_exp->add_option("--seed", exp.seed, "64-bit base seed")->capture_default_str();
    cmd_exp->add_option("--out", exp.out, "Report JSON path")->capture_default_str();
    cmd_exp->add_option("--csv-dir", exp.csv_dir, "Directory for plot-ready CSVs");
    cmd_exp->add_option("--t-grid", exp.t_grid_csv, "Comma-separated t values (accuracy)");
    cmd_exp->add_option("--threads", exp.threads, "Worker threads (0 = all cores)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        g_log_level = parse_log_level(log_level);
        if (cmd_gen->parsed()) return run_generate(gen);
        if (cmd_clu->parsed()) return run_cluster(clu);
        if (cmd_est->parsed()) return run_estimate(est);
        if (cmd_tst->parsed()) return run_test(tst);
        if (cmd_sel->parsed()) return run_select(sel);
        if (cmd_exp->parsed()) return run_experiment(exp);
    } catch (const std::exception& err) {
        log_at(LogLevel::Error, err.what());
        return 2;
    }
    return 2;
}
