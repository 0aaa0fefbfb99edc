#pragma once

#include <cmath>
#include <vector>

#include "lbmtest/rng.hpp"
#include "lbmtest/types.hpp"

namespace lbmtest_test {

inline lbmtest::Matrix random_matrix(lbmtest::Rng& rng, lbmtest::Index n, lbmtest::Index p,
                                     double scale = 1.0, double shift = 0.0) {
    lbmtest::Matrix m(n, p);
    for (lbmtest::Index j = 0; j < p; ++j)
        for (lbmtest::Index i = 0; i < n; ++i) m(i, j) = shift + scale * rng.normal();
    return m;
}

/// Random assignments with every label guaranteed present: the first
/// `count` slots carry each label once, the rest are uniform.
inline std::vector<int> random_assignment(lbmtest::Rng& rng, std::size_t len, int count) {
    std::vector<int> assign(len);
    for (std::size_t i = 0; i < len; ++i)
        assign[i] = i < static_cast<std::size_t>(count) ? static_cast<int>(i) + 1
                                                        : rng.uniform_int(1, count);
    // shuffle so labels are not positional
    for (std::size_t i = len; i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(i) - 1));
        std::swap(assign[i - 1], assign[j]);
    }
    return assign;
}

inline lbmtest::BlockStructure random_structure(lbmtest::Rng& rng, lbmtest::Index n,
                                                lbmtest::Index p, int K, int H) {
    return {random_assignment(rng, static_cast<std::size_t>(n), K),
            random_assignment(rng, static_cast<std::size_t>(p), H), K, H};
}

/// Shuffled round-robin labels: every cluster gets at least floor(len/count)
/// members, so no block of the induced grid is a single entry.
inline std::vector<int> balanced_assignment(lbmtest::Rng& rng, std::size_t len, int count) {
    std::vector<int> assign(len);
    for (std::size_t i = 0; i < len; ++i) assign[i] = static_cast<int>(i % count) + 1;
    for (std::size_t i = len; i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(i) - 1));
        std::swap(assign[i - 1], assign[j]);
    }
    return assign;
}

inline lbmtest::BlockStructure balanced_structure(lbmtest::Rng& rng, lbmtest::Index n,
                                                  lbmtest::Index p, int K, int H) {
    return {balanced_assignment(rng, static_cast<std::size_t>(n), K),
            balanced_assignment(rng, static_cast<std::size_t>(p), H), K, H};
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace lbmtest_test
