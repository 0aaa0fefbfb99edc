#pragma once

#include <utility>

#include "lbmtest/estimation.hpp"
#include "lbmtest/spectral.hpp"
#include "lbmtest/tracy_widom.hpp"
#include "lbmtest/types.hpp"
#include "lbmtest/ward.hpp"

namespace lbmtest {

struct TestConfig {
    double alpha = 0.01;
    int l_max = 12;  // cap on K0 + H0 in the sequential scan
    ClusteringAlgorithm clustering = [](const ClusteringRequest& req) {
        return ward_cocluster(req);
    };
    SpectralConfig spectral;
    const Tw1Table* table = &Tw1Table::builtin();
};

struct TestStatistic {
    double T = 0.0;
    double lambda1_hat = 0.0;
    ScalingConstants scaling;
};

/// T = (lambda1_hat - a) / b for the given (estimated or true) structure.
inline TestStatistic test_statistic(const ObservedMatrix& matrix, const BlockStructure& structure,
                                    const SpectralConfig& spectral = {}) {
    const EstimationResult est = estimate(matrix, structure);
    TestStatistic out;
    out.lambda1_hat = max_eigenvalue(est.normalized, spectral);
    out.scaling = scaling_constants(matrix.n(), matrix.p());
    out.T = (out.lambda1_hat - out.scaling.a) / out.scaling.b;
    return out;
}

inline void check_test_config(const TestConfig& cfg) {
    if (!(cfg.alpha > 0.0001 && cfg.alpha <= 0.5))
        throw AlphaOutOfRange("alpha must lie in (0.0001, 0.5], got " + std::to_string(cfg.alpha));
}

/// Test the hypothesis that the matrix has (K0, H0) row/column clusters:
/// cluster, normalize, compare T against the upper alpha quantile.
/// Throws DegenerateBlock when a fitted block is constant (test inapplicable).
inline TestResult gof_test(const ObservedMatrix& matrix, int K0, int H0, const TestConfig& cfg) {
    check_test_config(cfg);
    const BlockStructure structure = cfg.clustering(ClusteringRequest{matrix, K0, H0});
    const TestStatistic stat = test_statistic(matrix, structure, cfg.spectral);
    TestResult out;
    out.lambda1_hat = stat.lambda1_hat;
    out.scaling = stat.scaling;
    out.statistic_T = stat.T;
    out.alpha = cfg.alpha;
    out.quantile = cfg.table->upper_quantile(cfg.alpha);
    out.reject = stat.T >= out.quantile;
    return out;
}

/// Scan hypotheses by increasing K0 + H0, within a level by ascending K0,
/// and stop at the first acceptance. A step whose test is inapplicable
/// (or otherwise errors) is recorded and treated as a rejection.
inline SelectionTrace sequential_select(const ObservedMatrix& matrix, const TestConfig& cfg) {
    check_test_config(cfg);
    const auto limit = static_cast<int>(std::min(matrix.n(), matrix.p())) + 1;
    if (cfg.l_max < 2 || cfg.l_max > limit)
        throw Error("l_max must lie in [2, min(n,p)+1] = [2, " + std::to_string(limit) + "]");

    SelectionTrace trace;
    for (int level = 2; level <= cfg.l_max; ++level) {
        for (int k0 = 1; k0 < level; ++k0) {
            const int h0 = level - k0;
            SelectionStep step;
            step.k0 = k0;
            step.h0 = h0;
            bool accepted = false;
            try {
                step.result = gof_test(matrix, k0, h0, cfg);
                accepted = !step.result->reject;
            } catch (const Error& err) {
                step.error = err.what();
            }
            trace.steps.push_back(std::move(step));
            if (accepted) {
                trace.selected = std::make_pair(k0, h0);
                return trace;
            }
        }
    }
    trace.exhausted = true;
    return trace;
}

}  // namespace lbmtest
