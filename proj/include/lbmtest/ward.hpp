#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "lbmtest/types.hpp"

namespace lbmtest {

struct ClusteringRequest {
    const ObservedMatrix& matrix;
    int K0;
    int H0;
};

/// Contract shared by any clustering routine plugged into the test.
using ClusteringAlgorithm = std::function<BlockStructure(const ClusteringRequest&)>;

namespace detail {

/// Agglomerative Ward clustering of the rows of `points`, cut at `target`
/// clusters. Lance-Williams recurrence on squared Euclidean distances; among
/// minimum-cost merges the tie goes to the lexicographically smallest
/// (min rep, max rep) pair, rep being a cluster's smallest original row.
/// Returned labels are 1-based, numbered by ascending rep (so the cluster
/// containing row 0 is always labeled 1).
inline std::vector<int> ward_cluster(const Matrix& points, int target) {
    const Index n = points.rows();
    std::vector<int> labels(static_cast<std::size_t>(n));
    if (target == static_cast<int>(n)) {
        std::iota(labels.begin(), labels.end(), 1);
        return labels;
    }

    // pairwise squared distances via the Gram matrix
    Matrix dist(n, n);
    dist.setZero();
    dist.selfadjointView<Eigen::Lower>().rankUpdate(points);
    Eigen::VectorXd sq = dist.diagonal();
    for (Index j = 0; j < n; ++j) {
        for (Index i = j + 1; i < n; ++i) {
            const double d = std::max(0.0, sq(i) + sq(j) - 2.0 * dist(i, j));
            dist(i, j) = d;
            dist(j, i) = d;
        }
        dist(j, j) = 0.0;
    }

    std::vector<Index> active(static_cast<std::size_t>(n));
    std::iota(active.begin(), active.end(), 0);
    std::vector<double> size(static_cast<std::size_t>(n), 1.0);
    std::vector<Index> rep(static_cast<std::size_t>(n));
    std::iota(rep.begin(), rep.end(), 0);
    std::vector<std::vector<Index>> members(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) members[static_cast<std::size_t>(i)] = {i};
    std::vector<Index> nn(static_cast<std::size_t>(n), -1);

    // true iff pair (a,x) beats pair (b,y) under (cost, tie key)
    const auto better = [&](double cost_ax, Index a, Index x, double cost_by, Index b, Index y) {
        if (cost_ax != cost_by) return cost_ax < cost_by;
        const auto key = [&](Index u, Index v) {
            return std::make_pair(std::min(rep[static_cast<std::size_t>(u)], rep[static_cast<std::size_t>(v)]),
                                  std::max(rep[static_cast<std::size_t>(u)], rep[static_cast<std::size_t>(v)]));
        };
        return key(a, x) < key(b, y);
    };

    const auto recompute_nn = [&](Index c) {
        Index best = -1;
        double best_cost = 0.0;
        for (Index other : active) {
            if (other == c) continue;
            const double cost = dist(c, other);
            if (best < 0 || better(cost, c, other, best_cost, c, best)) {
                best = other;
                best_cost = cost;
            }
        }
        nn[static_cast<std::size_t>(c)] = best;
    };
    for (Index c : active) recompute_nn(c);

    for (int remaining = static_cast<int>(n); remaining > target; --remaining) {
        // global best merge
        Index a = -1, b = -1;
        double best_cost = 0.0;
        for (Index c : active) {
            const Index d = nn[static_cast<std::size_t>(c)];
            const double cost = dist(c, d);
            if (a < 0 || better(cost, c, d, best_cost, a, b)) {
                a = c;
                b = d;
                best_cost = cost;
            }
        }
        if (rep[static_cast<std::size_t>(b)] < rep[static_cast<std::size_t>(a)]) std::swap(a, b);

        // Lance-Williams (Ward): merged dissimilarities toward each survivor
        const double sa = size[static_cast<std::size_t>(a)];
        const double sb = size[static_cast<std::size_t>(b)];
        const double dab = dist(a, b);
        for (Index c : active) {
            if (c == a || c == b) continue;
            const double sc = size[static_cast<std::size_t>(c)];
            const double merged =
                ((sa + sc) * dist(a, c) + (sb + sc) * dist(b, c) - sc * dab) / (sa + sb + sc);
            dist(a, c) = merged;
            dist(c, a) = merged;
        }
        size[static_cast<std::size_t>(a)] = sa + sb;
        auto& ma = members[static_cast<std::size_t>(a)];
        auto& mb = members[static_cast<std::size_t>(b)];
        ma.insert(ma.end(), mb.begin(), mb.end());
        mb.clear();
        mb.shrink_to_fit();
        active.erase(std::find(active.begin(), active.end(), b));

        recompute_nn(a);
        for (Index c : active) {
            if (c == a) continue;
            const Index cur = nn[static_cast<std::size_t>(c)];
            if (cur == a || cur == b) {
                recompute_nn(c);
            } else if (better(dist(c, a), c, a, dist(c, cur), c, cur)) {
                nn[static_cast<std::size_t>(c)] = a;
            }
        }
    }

    std::sort(active.begin(), active.end(),
              [&](Index x, Index y) { return rep[static_cast<std::size_t>(x)] < rep[static_cast<std::size_t>(y)]; });
    for (std::size_t label = 0; label < active.size(); ++label)
        for (Index member : members[static_cast<std::size_t>(active[label])])
            labels[static_cast<std::size_t>(member)] = static_cast<int>(label) + 1;
    return labels;
}

}  // namespace detail

/// Cluster the rows of A into K0 groups and the columns into H0 groups,
/// each axis independently, by Ward's method on the raw row/column vectors.
inline BlockStructure ward_cocluster(const ClusteringRequest& req) {
    const Index n = req.matrix.n();
    const Index p = req.matrix.p();
    if (req.K0 < 1 || req.H0 < 1) throw TooManyClusters("cluster counts must be positive");
    if (req.K0 > n || req.H0 > p)
        throw TooManyClusters("requested (" + std::to_string(req.K0) + ", " +
                              std::to_string(req.H0) + ") clusters for a " + std::to_string(n) +
                              "x" + std::to_string(p) + " matrix");
    return BlockStructure(detail::ward_cluster(req.matrix.data, req.K0),
                          detail::ward_cluster(req.matrix.data.transpose(), req.H0), req.K0,
                          req.H0);
}

// ---------------------------------------------------------------------------
// Label alignment (experiment scoring)
// ---------------------------------------------------------------------------

/// Best relabeling of `estimated` against `truth`. perm[k-1] = t means
/// estimated label k plays the role of true label t.
struct AlignmentResult {
    std::vector<int> row_perm;
    std::vector<int> col_perm;
    double agreement = 0.0;  // matched rows+columns over n+p after relabeling
};

namespace detail {

inline std::pair<std::vector<int>, std::int64_t> best_permutation(
    const std::vector<int>& estimated, const std::vector<int>& truth, int count) {
    std::vector<std::int64_t> table(static_cast<std::size_t>(count) * count, 0);
    for (std::size_t i = 0; i < estimated.size(); ++i)
        ++table[static_cast<std::size_t>((estimated[i] - 1) * count + (truth[i] - 1))];

    std::vector<int> perm(static_cast<std::size_t>(count));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best_perm = perm;
    std::int64_t best_score = -1;
    do {
        std::int64_t score = 0;
        for (int e = 0; e < count; ++e)
            score += table[static_cast<std::size_t>(e * count + perm[static_cast<std::size_t>(e)])];
        if (score > best_score) {
            best_score = score;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto& t : best_perm) ++t;  // back to 1-based labels
    return {best_perm, best_score};
}

}  // namespace detail

inline AlignmentResult align_labels(const BlockStructure& estimated, const BlockStructure& truth) {
    if (estimated.row_assign.size() != truth.row_assign.size() ||
        estimated.col_assign.size() != truth.col_assign.size())
        throw DimensionMismatch("structures describe different matrix shapes");
    if (estimated.K != truth.K || estimated.H != truth.H)
        throw DimensionMismatch("structures have different cluster counts");
    if (estimated.K > 8 || estimated.H > 8)
        throw TooManyClustersForExhaustiveAlignment(
            "exhaustive alignment is limited to at most 8 clusters per axis");

    AlignmentResult out;
    auto [row_perm, row_score] = detail::best_permutation(estimated.row_assign, truth.row_assign,
                                                          estimated.K);
    auto [col_perm, col_score] = detail::best_permutation(estimated.col_assign, truth.col_assign,
                                                          estimated.H);
    out.row_perm = std::move(row_perm);
    out.col_perm = std::move(col_perm);
    out.agreement = static_cast<double>(row_score + col_score) /
                    static_cast<double>(estimated.row_assign.size() + estimated.col_assign.size());
    return out;
}

}  // namespace lbmtest
