#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lbmtest/rng.hpp"
#include "lbmtest/types.hpp"

namespace lbmtest {

enum class Family { Gaussian, Bernoulli, Poisson };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Gaussian: return "gaussian";
        case Family::Bernoulli: return "bernoulli";
        case Family::Poisson: return "poisson";
    }
    return "?";
}

inline Family family_from_name(const std::string& name) {
    if (name == "gaussian") return Family::Gaussian;
    if (name == "bernoulli") return Family::Bernoulli;
    if (name == "poisson") return Family::Poisson;
    throw Error("unknown family: " + name);
}

struct GeneratorSpec {
    Family family = Family::Gaussian;
    BlockParams params;
    Index n = 0;
    Index p = 0;
    std::uint64_t seed = 0;
};

/// The 4x3 benchmark block parameters used by all three studies. Bernoulli
/// shares the Gaussian mean matrix; the std matrix is only consumed by the
/// Gaussian family.
inline BlockParams preset_4x3(Family family) {
    BlockParams out;
    out.means.resize(4, 3);
    if (family == Family::Poisson) {
        out.means << 9.0, 1.0, 4.0,
                     2.0, 7.0, 3.0,
                     3.0, 2.0, 8.0,
                     6.0, 9.0, 1.0;
    } else {
        out.means << 0.9, 0.1, 0.4,
                     0.2, 0.7, 0.3,
                     0.3, 0.2, 0.8,
                     0.6, 0.9, 0.1;
    }
    out.stds.resize(4, 3);
    out.stds << 0.08, 0.06, 0.15,
                0.14, 0.12, 0.07,
                0.09, 0.10, 0.11,
                0.16, 0.13, 0.05;
    return out;
}

/// Mean separation used by the accuracy study: 0.5 for Gaussian/Bernoulli
/// presets, 5.0 for Poisson.
inline double interpolation_center(Family family) {
    return family == Family::Poisson ? 5.0 : 0.5;
}

/// Shrink block means toward `center`: mean' = (1 - t/10)(mean - center) + center.
/// t = 0 is the identity; t = 9 leaves a tenth of the original separation.
inline BlockParams interpolate_means(const BlockParams& base, int t, double center) {
    if (t < 0 || t > 9) throw Error("interpolation step t must be in {0..9}");
    BlockParams out;
    out.means = (1.0 - t / 10.0) * (base.means.array() - center) + center;
    out.stds = base.stds;
    return out;
}

namespace detail {

inline void check_generator_spec(const GeneratorSpec& spec) {
    const int K = spec.params.K();
    const int H = spec.params.H();
    if (K < 1 || H < 1) throw InvalidParams("block parameter matrices must be nonempty");
    if (spec.n < 2 || spec.p < 2) throw InvalidParams("generated matrices must be at least 2x2");
    if (spec.params.stds.rows() != K || spec.params.stds.cols() != H)
        throw InvalidParams("mean and std matrices must have equal shape");
    if (spec.n < K || spec.p < H)
        throw InvalidParams("matrix must have at least one row per row cluster and one column per column cluster");
    for (int k = 0; k < K; ++k)
        for (int h = 0; h < H; ++h) {
            const double mean = spec.params.means(k, h);
            const double sd = spec.params.stds(k, h);
            switch (spec.family) {
                case Family::Gaussian:
                    if (!(sd > 0.0)) throw InvalidParams("Gaussian blocks need positive stds");
                    break;
                case Family::Bernoulli:
                    if (mean < 0.0 || mean > 1.0)
                        throw InvalidParams("Bernoulli means must lie in [0, 1]");
                    break;
                case Family::Poisson:
                    if (mean < 0.0) throw InvalidParams("Poisson means must be nonnegative");
                    break;
            }
        }
}

/// Uniform labels over {1..count}; redrawn from the next substream until
/// every label occurs, so the returned vector never has an empty cluster.
inline std::vector<int> draw_assignment(std::uint64_t seed, std::uint64_t axis_stream,
                                        std::size_t len, int count) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng(seed, substream(axis_stream, attempt));
        std::vector<int> assign(len);
        std::vector<bool> seen(static_cast<std::size_t>(count), false);
        for (auto& label : assign) {
            label = rng.uniform_int(1, count);
            seen[static_cast<std::size_t>(label - 1)] = true;
        }
        bool complete = true;
        for (bool s : seen) complete = complete && s;
        if (complete) return assign;
    }
}

}  // namespace detail

/// Draw an observed matrix and its ground-truth structure. Pure function of
/// the spec: assignments come from dedicated substreams (redraw advances the
/// substream), entries from a third, filled in column-major order.
inline std::pair<ObservedMatrix, BlockStructure> generate(const GeneratorSpec& spec) {
    detail::check_generator_spec(spec);
    const int K = spec.params.K();
    const int H = spec.params.H();

    BlockStructure structure(
        detail::draw_assignment(spec.seed, 1, static_cast<std::size_t>(spec.n), K),
        detail::draw_assignment(spec.seed, 2, static_cast<std::size_t>(spec.p), H), K, H);

    Matrix exp_neg_mean;
    if (spec.family == Family::Poisson)
        exp_neg_mean = (-spec.params.means).array().exp();

    Rng rng(spec.seed, substream(0, 0));
    Matrix data(spec.n, spec.p);
    for (Index j = 0; j < spec.p; ++j) {
        const int h = structure.col_assign[static_cast<std::size_t>(j)] - 1;
        for (Index i = 0; i < spec.n; ++i) {
            const int k = structure.row_assign[static_cast<std::size_t>(i)] - 1;
            switch (spec.family) {
                case Family::Gaussian:
                    data(i, j) = rng.normal(spec.params.means(k, h), spec.params.stds(k, h));
                    break;
                case Family::Bernoulli:
                    data(i, j) = rng.bernoulli(spec.params.means(k, h)) ? 1.0 : 0.0;
                    break;
                case Family::Poisson: {
                    const double threshold = exp_neg_mean(k, h);
                    int count = 0;
                    double prod = rng.uniform_pos();
                    while (prod > threshold) {
                        ++count;
                        prod *= rng.uniform_pos();
                    }
                    data(i, j) = count;
                    break;
                }
            }
        }
    }
    return {ObservedMatrix(std::move(data)), std::move(structure)};
}

}  // namespace lbmtest
