#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "lbmtest/rng.hpp"
#include "lbmtest/types.hpp"

namespace lbmtest {

struct SpectralConfig {
    double rel_tolerance = 1e-10;
    int max_iterations = 10000;
};

namespace detail {

inline void reorthogonalize(const Matrix& basis, Index ncols, Eigen::VectorXd& v,
                            Eigen::VectorXd& tmp) {
    // classical Gram-Schmidt, two passes
    for (int pass = 0; pass < 2; ++pass) {
        tmp.head(ncols).noalias() = basis.leftCols(ncols).transpose() * v;
        v.noalias() -= basis.leftCols(ncols) * tmp.head(ncols);
    }
}

/// Largest eigenvalue of the projected Gram matrix for the bidiagonal
/// factorization state (alphas 0..k-1, betas 0..k-2, plus a trailing
/// beta(k-1) when the next left vector vanished). Both Gram forms are
/// tridiagonal, so eigenvalues cost O(k^2).
inline double projected_top_eigenvalue(const Eigen::VectorXd& alphas, const Eigen::VectorXd& betas,
                                       Index k, bool extra_beta) {
    Eigen::VectorXd diag(k), offdiag(std::max<Index>(k - 1, 1));
    if (extra_beta) {
        // k x (k+1) bidiagonal Bt: use Bt Bt^T
        for (Index i = 0; i < k; ++i) {
            diag(i) = alphas(i) * alphas(i) + betas(i) * betas(i);
            if (i + 1 < k) offdiag(i) = betas(i) * alphas(i + 1);
        }
    } else {
        // square k x k bidiagonal B: use B^T B
        for (Index i = 0; i < k; ++i) {
            diag(i) = alphas(i) * alphas(i) + (i > 0 ? betas(i - 1) * betas(i - 1) : 0.0);
            if (i + 1 < k) offdiag(i) = alphas(i) * betas(i);
        }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver;
    solver.computeFromTridiagonal(diag, offdiag.head(std::max<Index>(k - 1, 0)),
                                  Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(k - 1);
}

/// One Golub-Kahan-Lanczos run with full reorthogonalization, started at
/// `start`. The Gram matrix is never formed. The Ritz value is accepted once
/// its relative change stays under rel_tolerance for two consecutive
/// iterations and the explicit residual || Zt(Zv) - lambda v || / lambda is
/// under sqrt(rel_tolerance). Exhausting the basis triggers a restart from
/// the best Ritz vector.
inline double gkl_largest_eigenvalue(const Matrix& Z, Eigen::VectorXd start,
                                     const SpectralConfig& cfg, int& iterations_used) {
    const Index n = Z.rows();
    const Index p = Z.cols();
    const Index max_basis = std::min<Index>(std::min(n, p), 300);
    const double breakdown_eps = 1e-14;

    Matrix U(n, max_basis);
    Matrix V(p, max_basis);
    Eigen::VectorXd alphas(max_basis), betas(max_basis);
    Eigen::VectorXd gu(n), gv(p), tmp(std::max(n, p));

    double best_lambda = 0.0;
    double last_residual = std::numeric_limits<double>::infinity();

    while (iterations_used < cfg.max_iterations) {
        start /= start.norm();
        V.col(0) = start;
        gu.noalias() = Z * V.col(0);
        double alpha = gu.norm();
        if (alpha < breakdown_eps) return 0.0;  // start vector annihilated; caller screens zero input
        U.col(0) = gu / alpha;
        alphas(0) = alpha;

        Index k = 1;
        double prev_sigma2 = alpha * alpha;
        int settled = 0;
        bool restart = false;
        while (true) {
            ++iterations_used;
            // extend the right basis
            gv.noalias() = Z.transpose() * U.col(k - 1);
            gv -= alphas(k - 1) * V.col(k - 1);
            reorthogonalize(V, k, gv, tmp);
            const double beta = gv.norm();

            bool breakdown = beta < breakdown_eps;
            bool extra_beta = false;
            bool at_cap = false;
            if (!breakdown && k < max_basis) {
                betas(k - 1) = beta;
                V.col(k) = gv / beta;
                gu.noalias() = Z * V.col(k);
                gu -= beta * U.col(k - 1);
                reorthogonalize(U, k, gu, tmp);
                alpha = gu.norm();
                if (alpha < breakdown_eps) {
                    // Z v_{k+1} already lies in span(U); the pair subspace is
                    // invariant and the trailing beta joins the projection
                    breakdown = true;
                    extra_beta = true;
                } else {
                    alphas(k) = alpha;
                    U.col(k) = gu / alpha;
                    ++k;
                }
            } else if (!breakdown) {
                at_cap = true;
            }

            const double lambda = projected_top_eigenvalue(alphas, betas, k, extra_beta);
            settled = (std::abs(lambda - prev_sigma2) <=
                       cfg.rel_tolerance * std::max(lambda, 1e-300))
                          ? settled + 1
                          : 0;
            prev_sigma2 = lambda;

            if (settled >= 2 || breakdown || at_cap) {
                // explicit residual for the Ritz pair
                const Index cols = extra_beta ? k + 1 : k;
                Matrix B = Matrix::Zero(k, cols);
                for (Index i = 0; i < k; ++i) B(i, i) = alphas(i);
                for (Index i = 0; i + 1 < cols; ++i) B(i, i + 1) = betas(i);
                Eigen::JacobiSVD<Matrix> svd(B, Eigen::ComputeFullV);
                Eigen::VectorXd v = V.leftCols(cols) * svd.matrixV().col(0);
                v /= v.norm();
                gu.noalias() = Z * v;
                gv.noalias() = Z.transpose() * gu;
                const double residual = (gv - lambda * v).norm() / std::max(lambda, 1e-300);
                ++iterations_used;
                last_residual = residual;
                best_lambda = std::max(best_lambda, lambda);
                const bool residual_ok = residual < std::sqrt(cfg.rel_tolerance);
                if ((settled >= 2 || breakdown) && residual_ok) return lambda;
                if (k == std::min(n, p)) return lambda;  // full bidiagonalization, exact
                if (breakdown || at_cap) {
                    start = std::move(v);  // restart from the best Ritz vector
                    restart = true;
                    break;
                }
            }
            if (iterations_used >= cfg.max_iterations)
                throw NoConvergence(best_lambda, last_residual);
        }
        if (!restart) break;
    }
    throw NoConvergence(best_lambda, last_residual);
}

}  // namespace detail

/// Largest eigenvalue of Zt Z, i.e. the squared largest singular value of Z.
/// Two deterministic random starts are run and the larger estimate returned,
/// guarding against a start vector orthogonal to the leading subspace.
inline double max_eigenvalue(const Matrix& Z, const SpectralConfig& cfg = {}) {
    if (Z.rows() < 1 || Z.cols() < 1) throw Error("max_eigenvalue: empty matrix");
    if (Z.cwiseAbs().maxCoeff() == 0.0) return 0.0;

    int iterations_used = 0;
    double best = 0.0;
    for (std::uint64_t attempt = 0; attempt < 2; ++attempt) {
        Rng rng(0x9D1CEB70F5u, attempt);
        Eigen::VectorXd start(Z.cols());
        for (Index i = 0; i < start.size(); ++i) start(i) = rng.normal();
        best = std::max(best, detail::gkl_largest_eigenvalue(Z, std::move(start), cfg,
                                                             iterations_used));
    }
    return best;
}

inline double max_eigenvalue(const NormalizedMatrix& Z, const SpectralConfig& cfg = {}) {
    return max_eigenvalue(Z.data, cfg);
}

}  // namespace lbmtest
