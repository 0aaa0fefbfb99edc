#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lbmtest/generator.hpp"
#include "lbmtest/gof.hpp"
#include "lbmtest/io.hpp"
#include "lbmtest/types.hpp"
#include "lbmtest/version.hpp"

namespace lbmtest {

// ---------------------------------------------------------------------------
// Parallel trial execution
// ---------------------------------------------------------------------------

/// Run fn(0..count-1) on a worker pool. Tasks own disjoint output slots, so
/// results are identical for any thread count. threads <= 0 means all cores.
inline void parallel_for(int threads, std::size_t count,
                         const std::function<void(std::size_t)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(count)));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

// ---------------------------------------------------------------------------
// Kolmogorov-Smirnov statistic
// ---------------------------------------------------------------------------

struct KsResult {
    double d = 0.0;
    double d_sqrt_r = 0.0;
};

/// Two-sided sup distance between the empirical CDF of the samples and the
/// reference CDF, evaluated at the sample points.
inline KsResult ks_statistic(std::vector<double> samples,
                             const std::function<double(double)>& cdf) {
    if (samples.empty()) throw EmptySample("KS statistic needs at least one sample");
    std::sort(samples.begin(), samples.end());
    const auto r = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::max(f - static_cast<double>(i) / r,
                                 static_cast<double>(i + 1) / r - f));
    }
    return {d, d * std::sqrt(r)};
}

/// Asymptotic critical values for D*sqrt(r), used as report annotations.
inline constexpr double kKsCritical1pc = 1.63;
inline constexpr double kKsCritical5pc = 1.36;

// ---------------------------------------------------------------------------
// Plans and reports
// ---------------------------------------------------------------------------

enum class Study { Realizable, Unrealizable, Accuracy };

inline const char* study_name(Study s) {
    switch (s) {
        case Study::Realizable: return "realizable";
        case Study::Unrealizable: return "unrealizable";
        case Study::Accuracy: return "accuracy";
    }
    return "?";
}

struct ExperimentPlan {
    Study study = Study::Realizable;
    Family family = Family::Gaussian;
    std::vector<std::pair<Index, Index>> size_grid;
    int trials = 100;
    double alpha = 0.01;
    std::vector<int> t_grid;  // accuracy study only
    std::uint64_t base_seed = 0;
};

/// Seed for one (size, t, trial) cell; depends only on the plan, never on
/// scheduling, so partial runs can be merged and any trial rerun alone.
inline std::uint64_t trial_seed(std::uint64_t base_seed, Index n, Index p, int t, int trial) {
    std::uint64_t s = substream(base_seed, static_cast<std::uint64_t>(n));
    s = substream(s, static_cast<std::uint64_t>(p));
    s = substream(s, static_cast<std::uint64_t>(t) + 1);
    return substream(s, static_cast<std::uint64_t>(trial));
}

inline const std::array<double, 3> kExceedanceAlphas{0.01, 0.05, 0.1};

struct RealizableCell {
    Index n = 0, p = 0;
    std::vector<std::optional<double>> statistics;  // per trial, absent on error
    std::vector<std::string> errors;                // empty string when the trial succeeded
    std::vector<double> sorted_statistics;
    std::vector<std::pair<double, double>> qq;  // (theoretical, sample) quantile pairs
    std::array<double, 3> exceedance{};         // at kExceedanceAlphas
    KsResult ks;
};

struct UnrealizableCell {
    Index n = 0, p = 0;
    // statistics under the two fitted hypotheses (1,1) and (3,3)
    std::vector<std::optional<double>> t_under;
    std::vector<std::optional<double>> t_near;
    std::vector<std::string> errors;
    double mean_under = 0.0, mean_near = 0.0;
    double mean_under_over_n53 = 0.0, mean_near_over_n53 = 0.0;
};

struct AccuracyCell {
    int t = 0;
    Index n = 0, p = 0;
    std::vector<std::optional<std::pair<int, int>>> selected;  // per trial
    std::vector<std::string> errors;
    int correct = 0;
    double accuracy = 0.0;
};

struct StudyReport {
    ExperimentPlan plan;
    std::vector<RealizableCell> realizable_cells;
    std::vector<UnrealizableCell> unrealizable_cells;
    std::vector<AccuracyCell> accuracy_cells;
    // log-log regression slopes of mean T against n (unrealizable study)
    double slope_under = std::numeric_limits<double>::quiet_NaN();
    double slope_near = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

inline double regression_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

inline std::vector<double> valid_values(const std::vector<std::optional<double>>& xs) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (const auto& x : xs)
        if (x) out.push_back(*x);
    return out;
}

inline double mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Studies
// ---------------------------------------------------------------------------

/// Convergence of T to its limit law when the fitted cluster numbers are the
/// true (4, 3): per size, Q-Q data, tail exceedance ratios and KS distance.
inline StudyReport run_realizable(const ExperimentPlan& plan, int threads = 0) {
    if (plan.study != Study::Realizable) throw Error("plan.study must be Realizable");
    StudyReport report;
    report.plan = plan;
    report.realizable_cells.resize(plan.size_grid.size());

    const BlockParams params = preset_4x3(plan.family);
    for (std::size_t s = 0; s < plan.size_grid.size(); ++s) {
        auto& cell = report.realizable_cells[s];
        cell.n = plan.size_grid[s].first;
        cell.p = plan.size_grid[s].second;
        cell.statistics.resize(static_cast<std::size_t>(plan.trials));
        cell.errors.resize(static_cast<std::size_t>(plan.trials));
    }

    const std::size_t total = plan.size_grid.size() * static_cast<std::size_t>(plan.trials);
    parallel_for(threads, total, [&](std::size_t task) {
        const std::size_t s = task / static_cast<std::size_t>(plan.trials);
        const int trial = static_cast<int>(task % static_cast<std::size_t>(plan.trials));
        auto& cell = report.realizable_cells[s];
        try {
            GeneratorSpec spec{plan.family, params, cell.n, cell.p,
                               trial_seed(plan.base_seed, cell.n, cell.p, 0, trial)};
            const auto [matrix, truth] = generate(spec);
            const BlockStructure fit = ward_cocluster({matrix, truth.K, truth.H});
            cell.statistics[static_cast<std::size_t>(trial)] =
                test_statistic(matrix, fit).T;
        } catch (const std::exception& err) {
            cell.errors[static_cast<std::size_t>(trial)] = err.what();
        }
    });

    for (auto& cell : report.realizable_cells) {
        cell.sorted_statistics = detail::valid_values(cell.statistics);
        std::sort(cell.sorted_statistics.begin(), cell.sorted_statistics.end());
        const auto r = static_cast<double>(cell.sorted_statistics.size());
        if (cell.sorted_statistics.empty()) continue;
        cell.qq.reserve(cell.sorted_statistics.size());
        for (std::size_t i = 0; i < cell.sorted_statistics.size(); ++i) {
            const double position = (static_cast<double>(i) + 0.5) / r;
            cell.qq.emplace_back(tw1_upper_quantile(1.0 - position), cell.sorted_statistics[i]);
        }
        for (std::size_t a = 0; a < kExceedanceAlphas.size(); ++a) {
            const double threshold = tw1_upper_quantile(kExceedanceAlphas[a]);
            std::size_t count = 0;
            for (double t : cell.sorted_statistics) count += (t >= threshold) ? 1 : 0;
            cell.exceedance[a] = static_cast<double>(count) / r;
        }
        cell.ks = ks_statistic(cell.sorted_statistics, [](double x) { return tw1_cdf(x); });
    }
    return report;
}

/// Growth of T when the fitted cluster numbers are strictly below the truth;
/// hypotheses (1,1) and (3,3) are both fitted.
inline StudyReport run_unrealizable(const ExperimentPlan& plan, int threads = 0) {
    if (plan.study != Study::Unrealizable) throw Error("plan.study must be Unrealizable");
    StudyReport report;
    report.plan = plan;
    report.unrealizable_cells.resize(plan.size_grid.size());

    const BlockParams params = preset_4x3(plan.family);
    for (std::size_t s = 0; s < plan.size_grid.size(); ++s) {
        auto& cell = report.unrealizable_cells[s];
        cell.n = plan.size_grid[s].first;
        cell.p = plan.size_grid[s].second;
        cell.t_under.resize(static_cast<std::size_t>(plan.trials));
        cell.t_near.resize(static_cast<std::size_t>(plan.trials));
        cell.errors.resize(static_cast<std::size_t>(plan.trials));
    }

    const std::size_t total = plan.size_grid.size() * static_cast<std::size_t>(plan.trials);
    parallel_for(threads, total, [&](std::size_t task) {
        const std::size_t s = task / static_cast<std::size_t>(plan.trials);
        const int trial = static_cast<int>(task % static_cast<std::size_t>(plan.trials));
        auto& cell = report.unrealizable_cells[s];
        try {
            GeneratorSpec spec{plan.family, params, cell.n, cell.p,
                               trial_seed(plan.base_seed, cell.n, cell.p, 0, trial)};
            const auto [matrix, truth] = generate(spec);
            const BlockStructure fit_under = ward_cocluster({matrix, 1, 1});
            cell.t_under[static_cast<std::size_t>(trial)] = test_statistic(matrix, fit_under).T;
            const BlockStructure fit_near = ward_cocluster({matrix, 3, 3});
            cell.t_near[static_cast<std::size_t>(trial)] = test_statistic(matrix, fit_near).T;
        } catch (const std::exception& err) {
            cell.errors[static_cast<std::size_t>(trial)] = err.what();
        }
    });

    std::vector<double> log_n, log_under, log_near;
    for (auto& cell : report.unrealizable_cells) {
        const auto under = detail::valid_values(cell.t_under);
        const auto near = detail::valid_values(cell.t_near);
        if (under.empty() || near.empty()) continue;
        const double n53 = std::pow(static_cast<double>(cell.n), 5.0 / 3.0);
        cell.mean_under = detail::mean(under);
        cell.mean_near = detail::mean(near);
        cell.mean_under_over_n53 = cell.mean_under / n53;
        cell.mean_near_over_n53 = cell.mean_near / n53;
        if (cell.mean_under > 0.0 && cell.mean_near > 0.0) {
            log_n.push_back(std::log(static_cast<double>(cell.n)));
            log_under.push_back(std::log(cell.mean_under));
            log_near.push_back(std::log(cell.mean_near));
        }
    }
    if (log_n.size() >= 2) {
        report.slope_under = detail::regression_slope(log_n, log_under);
        report.slope_near = detail::regression_slope(log_n, log_near);
    }
    return report;
}

/// Fraction of trials whose sequential selection recovers the true (4, 3),
/// across the mean-separation ladder t and the size grid.
inline StudyReport run_accuracy(const ExperimentPlan& plan, int threads = 0) {
    if (plan.study != Study::Accuracy) throw Error("plan.study must be Accuracy");
    if (plan.t_grid.empty()) throw Error("accuracy study needs a nonempty t_grid");
    StudyReport report;
    report.plan = plan;

    const BlockParams base = preset_4x3(plan.family);
    const double center = interpolation_center(plan.family);
    report.accuracy_cells.resize(plan.t_grid.size() * plan.size_grid.size());
    for (std::size_t ti = 0; ti < plan.t_grid.size(); ++ti)
        for (std::size_t s = 0; s < plan.size_grid.size(); ++s) {
            auto& cell = report.accuracy_cells[ti * plan.size_grid.size() + s];
            cell.t = plan.t_grid[ti];
            cell.n = plan.size_grid[s].first;
            cell.p = plan.size_grid[s].second;
            cell.selected.resize(static_cast<std::size_t>(plan.trials));
            cell.errors.resize(static_cast<std::size_t>(plan.trials));
        }

    const std::size_t per_cell = static_cast<std::size_t>(plan.trials);
    const std::size_t total = report.accuracy_cells.size() * per_cell;
    parallel_for(threads, total, [&](std::size_t task) {
        auto& cell = report.accuracy_cells[task / per_cell];
        const int trial = static_cast<int>(task % per_cell);
        try {
            const BlockParams params = interpolate_means(base, cell.t, center);
            GeneratorSpec spec{plan.family, params, cell.n, cell.p,
                               trial_seed(plan.base_seed, cell.n, cell.p, cell.t, trial)};
            const auto [matrix, truth] = generate(spec);
            TestConfig cfg;
            cfg.alpha = plan.alpha;
            const SelectionTrace trace = sequential_select(matrix, cfg);
            if (trace.selected) cell.selected[static_cast<std::size_t>(trial)] = *trace.selected;
        } catch (const std::exception& err) {
            cell.errors[static_cast<std::size_t>(trial)] = err.what();
        }
    });

    for (auto& cell : report.accuracy_cells) {
        for (const auto& sel : cell.selected)
            if (sel && sel->first == 4 && sel->second == 3) ++cell.correct;
        cell.accuracy = static_cast<double>(cell.correct) / static_cast<double>(plan.trials);
    }
    return report;
}

inline StudyReport run_study(const ExperimentPlan& plan, int threads = 0) {
    switch (plan.study) {
        case Study::Realizable: return run_realizable(plan, threads);
        case Study::Unrealizable: return run_unrealizable(plan, threads);
        case Study::Accuracy: return run_accuracy(plan, threads);
    }
    throw Error("unknown study");
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline Json to_json(const ExperimentPlan& plan) {
    Json sizes = Json::array();
    for (const auto& [n, p] : plan.size_grid) sizes.push_back(Json::array({n, p}));
    return Json{{"version", kVersion},
                {"study", study_name(plan.study)},
                {"family", family_name(plan.family)},
                {"size_grid", std::move(sizes)},
                {"trials", plan.trials},
                {"alpha", plan.alpha},
                {"t_grid", plan.t_grid},
                {"base_seed", plan.base_seed}};
}

inline Json to_json(const StudyReport& report) {
    Json j{{"meta", to_json(report.plan)}};
    Json cells = Json::array();
    for (const auto& cell : report.realizable_cells) {
        Json c{{"n", cell.n}, {"p", cell.p}};
        Json stats = Json::array();
        for (const auto& t : cell.statistics) stats.push_back(t ? Json(*t) : Json(nullptr));
        c["statistics"] = std::move(stats);
        c["errors"] = cell.errors;
        Json qq = Json::array();
        for (const auto& [theo, sample] : cell.qq) qq.push_back(Json::array({theo, sample}));
        c["qq"] = std::move(qq);
        Json exc = Json::object();
        for (std::size_t a = 0; a < kExceedanceAlphas.size(); ++a)
            exc[format_double(kExceedanceAlphas[a])] = cell.exceedance[a];
        c["exceedance"] = std::move(exc);
        c["ks_d"] = cell.ks.d;
        c["ks_d_sqrt_r"] = cell.ks.d_sqrt_r;
        cells.push_back(std::move(c));
    }
    for (const auto& cell : report.unrealizable_cells) {
        Json c{{"n", cell.n}, {"p", cell.p}};
        Json tu = Json::array(), tn = Json::array();
        for (const auto& t : cell.t_under) tu.push_back(t ? Json(*t) : Json(nullptr));
        for (const auto& t : cell.t_near) tn.push_back(t ? Json(*t) : Json(nullptr));
        c["T_1_1"] = std::move(tu);
        c["T_3_3"] = std::move(tn);
        c["errors"] = cell.errors;
        c["mean_T_1_1"] = cell.mean_under;
        c["mean_T_3_3"] = cell.mean_near;
        c["mean_T_1_1_over_n53"] = cell.mean_under_over_n53;
        c["mean_T_3_3_over_n53"] = cell.mean_near_over_n53;
        cells.push_back(std::move(c));
    }
    for (const auto& cell : report.accuracy_cells) {
        Json c{{"t", cell.t}, {"n", cell.n}, {"p", cell.p}};
        Json sel = Json::array();
        for (const auto& s : cell.selected)
            sel.push_back(s ? Json(Json::array({s->first, s->second})) : Json(nullptr));
        c["selected"] = std::move(sel);
        c["errors"] = cell.errors;
        c["correct"] = cell.correct;
        c["accuracy"] = cell.accuracy;
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    if (!report.unrealizable_cells.empty()) {
        j["summary"] = Json{{"slope_T_1_1", report.slope_under},
                            {"slope_T_3_3", report.slope_near},
                            {"hypotheses", Json::array({Json::array({1, 1}), Json::array({3, 3})})}};
    }
    return j;
}

/// Plot-ready CSV side outputs next to the JSON report.
inline void write_report_csvs(const StudyReport& report, const std::string& dir) {
    const std::string base = dir.empty() ? "." : dir;
    if (!report.realizable_cells.empty()) {
        std::string exceedance = "n,p,alpha,ratio\n";
        for (const auto& cell : report.realizable_cells) {
            std::string qq = "theoretical_quantile,sample_quantile\n";
            for (const auto& [theo, sample] : cell.qq)
                qq += format_double(theo) + "," + format_double(sample) + "\n";
            write_text_file(base + "/qq_" + std::to_string(cell.n) + ".csv", qq);
            for (std::size_t a = 0; a < kExceedanceAlphas.size(); ++a)
                exceedance += std::to_string(cell.n) + "," + std::to_string(cell.p) + "," +
                              format_double(kExceedanceAlphas[a]) + "," +
                              format_double(cell.exceedance[a]) + "\n";
        }
        write_text_file(base + "/exceedance.csv", exceedance);
    }
    if (!report.unrealizable_cells.empty()) {
        std::string scaling = "n,mean_T,mean_T_over_n53\n";
        std::string scaling_alt = "n,mean_T,mean_T_over_n53\n";
        for (const auto& cell : report.unrealizable_cells) {
            scaling += std::to_string(cell.n) + "," + format_double(cell.mean_under) + "," +
                       format_double(cell.mean_under_over_n53) + "\n";
            scaling_alt += std::to_string(cell.n) + "," + format_double(cell.mean_near) + "," +
                           format_double(cell.mean_near_over_n53) + "\n";
        }
        write_text_file(base + "/scaling.csv", scaling);
        write_text_file(base + "/scaling_3_3.csv", scaling_alt);
    }
    if (!report.accuracy_cells.empty()) {
        std::string accuracy = "t,n,accuracy\n";
        for (const auto& cell : report.accuracy_cells)
            accuracy += std::to_string(cell.t) + "," + std::to_string(cell.n) + "," +
                        format_double(cell.accuracy) + "\n";
        write_text_file(base + "/accuracy.csv", accuracy);
    }
}

}  // namespace lbmtest
