#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "lbmtest/estimation.hpp"
#include "lbmtest/experiments.hpp"
#include "lbmtest/generator.hpp"
#include "lbmtest/rng.hpp"

using namespace lbmtest;

TEST_CASE("rng streams are reproducible and distinct") {
    Rng a(123, 5), b(123, 5), c(123, 6), d(124, 5);
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next_u64();
        CHECK(x == b.next_u64());
        CHECK(x != c.next_u64());
        CHECK(x != d.next_u64());
    }
}

TEST_CASE("rng uniforms live in their documented ranges") {
    Rng rng(9);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double v = rng.uniform_pos();
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
        const int k = rng.uniform_int(1, 4);
        CHECK(k >= 1);
        CHECK(k <= 4);
    }
}

TEST_CASE("generate is a pure function of the spec") {
    BlockParams params;
    params.means = Matrix::Zero(1, 1);
    params.stds = Matrix::Ones(1, 1);
    const GeneratorSpec spec{Family::Gaussian, params, 4, 4, 2024};
    const auto [m1, s1] = generate(spec);
    const auto [m2, s2] = generate(spec);
    REQUIRE(m1.data.rows() == 4);
    REQUIRE(m1.data.cols() == 4);
    CHECK(m1.data == m2.data);
    CHECK(s1.row_assign == s2.row_assign);
    CHECK(s1.col_assign == s2.col_assign);

    GeneratorSpec other = spec;
    other.seed = 2025;
    const auto [m3, s3] = generate(other);
    CHECK(m1.data != m3.data);
}

TEST_CASE("generator rejects family-specific parameter violations") {
    BlockParams params;
    params.means = Matrix::Constant(1, 1, 1.5);
    params.stds = Matrix::Ones(1, 1);
    CHECK_THROWS_AS(generate({Family::Bernoulli, params, 10, 10, 0}), InvalidParams);
    params.means = Matrix::Constant(1, 1, -0.5);
    CHECK_THROWS_AS(generate({Family::Poisson, params, 10, 10, 0}), InvalidParams);
    params.means = Matrix::Zero(1, 1);
    params.stds = Matrix::Zero(1, 1);
    CHECK_THROWS_AS(generate({Family::Gaussian, params, 10, 10, 0}), InvalidParams);
    params.stds = Matrix::Ones(1, 1);
    CHECK_NOTHROW(generate({Family::Gaussian, params, 10, 10, 0}));
}

TEST_CASE("generated structures never have empty clusters") {
    BlockParams params = preset_4x3(Family::Gaussian);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        // n barely above K so redraws actually happen
        const auto [m, s] = generate({Family::Gaussian, params, 5, 4, seed});
        REQUIRE_NOTHROW(validate(s));
    }
}

namespace {

struct BlockMoments {
    Matrix mean, var, count;
};

BlockMoments block_moments(const Matrix& data, const BlockStructure& s) {
    BlockMoments out;
    out.mean = Matrix::Zero(s.K, s.H);
    out.var = Matrix::Zero(s.K, s.H);
    out.count = Matrix::Zero(s.K, s.H);
    for (Index j = 0; j < data.cols(); ++j)
        for (Index i = 0; i < data.rows(); ++i) {
            const int k = s.row_assign[static_cast<std::size_t>(i)] - 1;
            const int h = s.col_assign[static_cast<std::size_t>(j)] - 1;
            out.mean(k, h) += data(i, j);
            out.count(k, h) += 1.0;
        }
    out.mean.array() /= out.count.array();
    for (Index j = 0; j < data.cols(); ++j)
        for (Index i = 0; i < data.rows(); ++i) {
            const int k = s.row_assign[static_cast<std::size_t>(i)] - 1;
            const int h = s.col_assign[static_cast<std::size_t>(j)] - 1;
            const double d = data(i, j) - out.mean(k, h);
            out.var(k, h) += d * d;
        }
    out.var.array() /= out.count.array();
    return out;
}

}  // namespace

TEST_CASE("Bernoulli block means agree with the preset within 4 sigma") {
    const BlockParams params = preset_4x3(Family::Bernoulli);
    const auto [m, truth] = generate({Family::Bernoulli, params, 300, 225, 77});
    const auto moments = block_moments(m.data, truth);
    for (int k = 0; k < 4; ++k)
        for (int h = 0; h < 3; ++h) {
            const double b = params.means(k, h);
            const double band = 4.0 * std::sqrt(b * (1.0 - b) / moments.count(k, h));
            CHECK(std::abs(moments.mean(k, h) - b) < band);
        }
}

TEST_CASE("Poisson block variances match block means within a 4-sigma CLT band") {
    const BlockParams params = preset_4x3(Family::Poisson);
    const auto [m, truth] = generate({Family::Poisson, params, 300, 225, 78});
    const auto moments = block_moments(m.data, truth);
    for (int k = 0; k < 4; ++k)
        for (int h = 0; h < 3; ++h) {
            const double rate = params.means(k, h);
            // Var((X - mu)^2) = rate + 2 rate^2 for Poisson
            const double band =
                4.0 * std::sqrt((rate + 2.0 * rate * rate) / moments.count(k, h));
            CHECK(std::abs(moments.var(k, h) - rate) < band);
        }
}

TEST_CASE("standardized block-mean errors are approximately standard normal") {
    const BlockParams params = preset_4x3(Family::Gaussian);
    std::vector<double> standardized;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        const auto [m, truth] =
            generate({Family::Gaussian, params, 300, 225, substream(4242, trial)});
        const auto moments = block_moments(m.data, truth);
        for (int k = 0; k < 4; ++k)
            for (int h = 0; h < 3; ++h)
                standardized.push_back((moments.mean(k, h) - params.means(k, h)) *
                                       std::sqrt(moments.count(k, h)) / params.stds(k, h));
    }
    const auto ks = ks_statistic(standardized, lbmtest_test::normal_cdf);
    CHECK(ks.d_sqrt_r < 1.95);
}

TEST_CASE("mean interpolation hand values") {
    BlockParams base;
    base.means = Matrix::Constant(1, 1, 0.9);
    base.stds = Matrix::Constant(1, 1, 0.3);

    const BlockParams same = interpolate_means(base, 0, 0.5);
    CHECK(same.means(0, 0) == 0.9);
    CHECK(same.stds(0, 0) == 0.3);

    CHECK(interpolate_means(base, 5, 0.5).means(0, 0) == Catch::Approx(0.7).epsilon(1e-15));

    base.means(0, 0) = 9.0;
    CHECK(interpolate_means(base, 9, 5.0).means(0, 0) == Catch::Approx(5.4).epsilon(1e-15));

    CHECK_THROWS_AS(interpolate_means(base, 10, 5.0), Error);
    CHECK_THROWS_AS(interpolate_means(base, -1, 5.0), Error);
}

TEST_CASE("mean interpolation is an invertible affine map") {
    Rng rng(15);
    BlockParams base;
    base.means = lbmtest_test::random_matrix(rng, 4, 3);
    base.stds = lbmtest_test::random_matrix(rng, 4, 3).cwiseAbs();
    for (int t = 0; t <= 9; ++t) {
        const double center = 0.5;
        const BlockParams out = interpolate_means(base, t, center);
        const Matrix recovered =
            center + (out.means.array() - center) / (1.0 - t / 10.0);
        CHECK((recovered - base.means).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(out.stds == base.stds);
    }
}
