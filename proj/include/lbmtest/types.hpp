#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lbmtest {

using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A matrix entry is NaN or infinite. Positions are reported 1-based.
struct NonFiniteEntry : Error {
    Index row, col;
    NonFiniteEntry(Index i, Index j)
        : Error("non-finite entry at (" + std::to_string(i) + ", " + std::to_string(j) + ")"),
          row(i),
          col(j) {}
};

struct DegenerateShape : Error {
    DegenerateShape(Index n, Index p)
        : Error("matrix must be at least 2x2, got " + std::to_string(n) + "x" +
                std::to_string(p)) {}
};

struct InvalidStructure : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct TooManyClusters : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct TooManyClustersForExhaustiveAlignment : Error {
    using Error::Error;
};

/// An estimated block has (numerically) zero standard deviation, so the
/// normalized matrix is undefined there. Block indices are 1-based.
struct DegenerateBlock : Error {
    int k, h;
    DegenerateBlock(int k_, int h_)
        : Error("degenerate block (" + std::to_string(k_) + ", " + std::to_string(h_) +
                "): estimated standard deviation is zero"),
          k(k_),
          h(h_) {}
};

struct NoConvergence : Error {
    double last_estimate;
    double residual;
    NoConvergence(double est, double res)
        : Error("eigenvalue iteration did not converge: last estimate " + std::to_string(est) +
                ", residual " + std::to_string(res)),
          last_estimate(est),
          residual(res) {}
};

struct AlphaOutOfRange : Error {
    using Error::Error;
};

struct EmptySample : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// Dense observed data matrix (n rows, p columns).
struct ObservedMatrix {
    Matrix data;

    ObservedMatrix() = default;
    explicit ObservedMatrix(Matrix m) : data(std::move(m)) {}

    Index n() const { return data.rows(); }
    Index p() const { return data.cols(); }
};

/// Check the ObservedMatrix invariants: shape at least 2x2, all entries
/// finite. Throws DegenerateShape or NonFiniteEntry (1-based position).
inline void validate(const ObservedMatrix& m) {
    if (m.n() < 2 || m.p() < 2) throw DegenerateShape(m.n(), m.p());
    for (Index j = 0; j < m.p(); ++j)
        for (Index i = 0; i < m.n(); ++i)
            if (!std::isfinite(m.data(i, j))) throw NonFiniteEntry(i + 1, j + 1);
}

/// Row and column cluster assignments. Labels are 1-based: row_assign[i] in
/// {1..K}, col_assign[j] in {1..H}, and every label occurs at least once.
struct BlockStructure {
    std::vector<int> row_assign;
    std::vector<int> col_assign;
    int K = 0;
    int H = 0;

    BlockStructure() = default;
    BlockStructure(std::vector<int> rows, std::vector<int> cols, int k, int h)
        : row_assign(std::move(rows)), col_assign(std::move(cols)), K(k), H(h) {}
};

namespace detail {

inline void validate_assignment(const std::vector<int>& assign, int n_clusters,
                                const char* axis) {
    if (n_clusters < 1)
        throw InvalidStructure(std::string(axis) + " cluster count must be positive");
    std::vector<bool> seen(static_cast<std::size_t>(n_clusters), false);
    for (int label : assign) {
        if (label < 1 || label > n_clusters)
            throw InvalidStructure(std::string(axis) + " label " + std::to_string(label) +
                                   " outside {1.." + std::to_string(n_clusters) + "}");
        seen[static_cast<std::size_t>(label - 1)] = true;
    }
    for (int c = 0; c < n_clusters; ++c)
        if (!seen[static_cast<std::size_t>(c)])
            throw InvalidStructure(std::string(axis) + " cluster " + std::to_string(c + 1) +
                                   " is empty");
}

}  // namespace detail

/// Check BlockStructure invariants, optionally against matrix dimensions.
inline void validate(const BlockStructure& s) {
    detail::validate_assignment(s.row_assign, s.K, "row");
    detail::validate_assignment(s.col_assign, s.H, "column");
}

inline void validate(const BlockStructure& s, Index n, Index p) {
    if (static_cast<Index>(s.row_assign.size()) != n ||
        static_cast<Index>(s.col_assign.size()) != p)
        throw DimensionMismatch("structure is for " + std::to_string(s.row_assign.size()) +
                                "x" + std::to_string(s.col_assign.size()) +
                                ", matrix is " + std::to_string(n) + "x" + std::to_string(p));
    validate(s);
}

/// Block-wise means and standard deviations, K x H.
struct BlockParams {
    Matrix means;
    Matrix stds;

    int K() const { return static_cast<int>(means.rows()); }
    int H() const { return static_cast<int>(means.cols()); }
};

/// Entry-wise normalized matrix together with the structure used to build it.
struct NormalizedMatrix {
    Matrix data;
    BlockStructure source_structure;
};

/// Centering and scale constants for the largest eigenvalue of an n x p
/// standardized matrix: a = (sqrt(n)+sqrt(p))^2,
/// b = (sqrt(n)+sqrt(p)) (1/sqrt(n)+1/sqrt(p))^(1/3).
struct ScalingConstants {
    double a = 0.0;
    double b = 0.0;
};

inline ScalingConstants scaling_constants(Index n, Index p) {
    const double sn = std::sqrt(static_cast<double>(n));
    const double sp = std::sqrt(static_cast<double>(p));
    return {(sn + sp) * (sn + sp), (sn + sp) * std::cbrt(1.0 / sn + 1.0 / sp)};
}

/// Outcome of one goodness-of-fit test.
struct TestResult {
    double lambda1_hat = 0.0;
    ScalingConstants scaling;
    double statistic_T = 0.0;
    double alpha = 0.0;
    double quantile = 0.0;
    bool reject = false;
};

/// One step of the sequential scan. `result` is absent when the test was
/// inapplicable (degenerate block); `error` then carries the reason.
struct SelectionStep {
    int k0 = 0;
    int h0 = 0;
    std::optional<TestResult> result;
    std::optional<std::string> error;
};

struct SelectionTrace {
    std::vector<SelectionStep> steps;
    std::optional<std::pair<int, int>> selected;
    bool exhausted = false;
};

}  // namespace lbmtest
