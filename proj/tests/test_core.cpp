#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <sstream>

#include "helpers.hpp"
#include "lbmtest/io.hpp"
#include "lbmtest/types.hpp"

using namespace lbmtest;

TEST_CASE("matrix validation accepts the minimal shape") {
    ObservedMatrix m(Matrix::Zero(2, 2));
    REQUIRE_NOTHROW(validate(m));
}

TEST_CASE("matrix validation rejects degenerate shapes") {
    ObservedMatrix m(Matrix::Zero(1, 5));
    REQUIRE_THROWS_AS(validate(m), DegenerateShape);
    ObservedMatrix m2(Matrix::Zero(3, 1));
    REQUIRE_THROWS_AS(validate(m2), DegenerateShape);
}

TEST_CASE("matrix validation reports the non-finite position 1-based") {
    Matrix data = Matrix::Zero(3, 3);
    data(1, 1) = std::numeric_limits<double>::quiet_NaN();
    try {
        validate(ObservedMatrix(data));
        FAIL("expected NonFiniteEntry");
    } catch (const NonFiniteEntry& err) {
        CHECK(err.row == 2);
        CHECK(err.col == 2);
    }
    data(1, 1) = std::numeric_limits<double>::infinity();
    REQUIRE_THROWS_AS(validate(ObservedMatrix(data)), NonFiniteEntry);
}

TEST_CASE("structure validation rejects gaps, bad labels and empty clusters") {
    CHECK_NOTHROW(validate(BlockStructure({1, 2, 1}, {1, 1}, 2, 1)));
    // label 2 never occurs although K = 3
    CHECK_THROWS_AS(validate(BlockStructure({1, 3, 3}, {1, 1}, 3, 1)), InvalidStructure);
    CHECK_THROWS_AS(validate(BlockStructure({0, 1}, {1, 1}, 1, 1)), InvalidStructure);
    CHECK_THROWS_AS(validate(BlockStructure({1, 2}, {1, 3}, 2, 2)), InvalidStructure);
    // length mismatch against a matrix
    CHECK_THROWS_AS(validate(BlockStructure({1, 2}, {1, 1}, 2, 1), 3, 2), DimensionMismatch);
}

TEST_CASE("scaling constants match hand-evaluated values") {
    const auto tiny = scaling_constants(1, 1);
    CHECK(tiny.a == Catch::Approx(4.0).epsilon(1e-15));
    CHECK(tiny.b == Catch::Approx(2.0 * std::cbrt(2.0)).epsilon(1e-15));

    const auto small = scaling_constants(300, 225);
    CHECK(small.a == Catch::Approx(1044.6152422706634).epsilon(1e-12));
    CHECK(small.b == Catch::Approx(16.134429368008703).epsilon(1e-12));

    const auto large = scaling_constants(3000, 2250);
    CHECK(large.a / (3000.0 + 2250.0) > 1.0);
    CHECK(large.b / small.b == Catch::Approx(std::cbrt(10.0)).epsilon(1e-12));
}

TEST_CASE("matrix CSV round-trips bit-exactly") {
    Rng rng(42);
    for (int rep = 0; rep < 20; ++rep) {
        const Index n = rng.uniform_int(2, 12);
        const Index p = rng.uniform_int(2, 12);
        Matrix m = lbmtest_test::random_matrix(rng, n, p, std::exp(rng.normal() * 5.0));
        std::stringstream ss;
        write_matrix_csv(ss, m);
        const Matrix back = read_matrix_csv(ss);
        REQUIRE(back.rows() == n);
        REQUIRE(back.cols() == p);
        for (Index j = 0; j < p; ++j)
            for (Index i = 0; i < n; ++i) REQUIRE(back(i, j) == m(i, j));
    }
}

TEST_CASE("CSV reader rejects malformed input") {
    std::stringstream ragged("1,2\n3\n");
    CHECK_THROWS_AS(read_matrix_csv(ragged), Error);
    std::stringstream junk("1,x\n");
    CHECK_THROWS_AS(read_matrix_csv(junk), Error);
    std::stringstream empty("");
    CHECK_THROWS_AS(read_matrix_csv(empty), Error);
}

TEST_CASE("structure JSON round-trips exactly") {
    Rng rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        const auto s = lbmtest_test::random_structure(rng, rng.uniform_int(3, 20),
                                                      rng.uniform_int(3, 20), 3, 2);
        const Json j = Json::parse(dump_json(to_json(s)));
        const BlockStructure back = block_structure_from_json(j);
        CHECK(back.row_assign == s.row_assign);
        CHECK(back.col_assign == s.col_assign);
        CHECK(back.K == s.K);
        CHECK(back.H == s.H);
    }
}

TEST_CASE("assignment files round-trip") {
    const std::vector<int> assign{3, 1, 2, 2, 1, 3};
    std::stringstream ss;
    write_assignment(ss, assign);
    CHECK(read_assignment(ss) == assign);
}

TEST_CASE("block params JSON round-trips bit-exactly") {
    Rng rng(11);
    BlockParams params;
    params.means = lbmtest_test::random_matrix(rng, 4, 3);
    params.stds = lbmtest_test::random_matrix(rng, 4, 3).cwiseAbs();
    const Json j = Json::parse(dump_json(to_json(params)));
    const BlockParams back = block_params_from_json(j);
    CHECK(back.means == params.means);
    CHECK(back.stds == params.stds);
}

TEST_CASE("test result JSON uses the documented field names") {
    TestResult r;
    r.lambda1_hat = 5.5;
    r.scaling = {8.0, 2.0};
    r.statistic_T = -1.25;
    r.alpha = 0.05;
    r.quantile = 0.97931;
    r.reject = false;
    const Json j = to_json(r);
    CHECK(j.at("lambda1_hat") == 5.5);
    CHECK(j.at("scaling").at("a") == 8.0);
    CHECK(j.at("scaling").at("b") == 2.0);
    CHECK(j.at("statistic_T") == -1.25);
    CHECK(j.at("alpha") == 0.05);
    CHECK(j.at("quantile") == 0.97931);
    CHECK(j.at("reject") == false);
}

TEST_CASE("17-digit formatting round-trips doubles") {
    Rng rng(3);
    for (int rep = 0; rep < 1000; ++rep) {
        const double x = rng.normal() * std::exp(rng.normal() * 10.0);
        CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
    }
}
