#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "helpers.hpp"
#include "lbmtest/generator.hpp"
#include "lbmtest/ward.hpp"

using namespace lbmtest;

TEST_CASE("two well-separated pairs form the two row clusters") {
    Matrix data(4, 2);
    data << 0, 0,
            0.05, 0,
            5, 5,
            5.05, 5;
    const ObservedMatrix m(data);
    const BlockStructure s = ward_cocluster({m, 2, 1});
    CHECK(s.row_assign[0] == s.row_assign[1]);
    CHECK(s.row_assign[2] == s.row_assign[3]);
    CHECK(s.row_assign[0] != s.row_assign[2]);
    CHECK(s.col_assign == std::vector<int>{1, 1});
}

TEST_CASE("K0 = n leaves every row in its own cluster") {
    Rng rng(41);
    const ObservedMatrix m(lbmtest_test::random_matrix(rng, 6, 3));
    const BlockStructure s = ward_cocluster({m, 6, 1});
    std::vector<int> expected(6);
    std::iota(expected.begin(), expected.end(), 1);
    CHECK(s.row_assign == expected);
}

TEST_CASE("cluster counts above the axis length are rejected") {
    Rng rng(42);
    const ObservedMatrix m(lbmtest_test::random_matrix(rng, 5, 4));
    CHECK_THROWS_AS(ward_cocluster({m, 6, 1}), TooManyClusters);
    CHECK_THROWS_AS(ward_cocluster({m, 2, 5}), TooManyClusters);
    CHECK_THROWS_AS(ward_cocluster({m, 0, 1}), TooManyClusters);
}

TEST_CASE("output always has exactly the requested nonempty clusters") {
    Rng rng(43);
    for (int rep = 0; rep < 20; ++rep) {
        const Index n = rng.uniform_int(4, 30);
        const Index p = rng.uniform_int(4, 30);
        const int k = rng.uniform_int(1, static_cast<int>(n));
        const int h = rng.uniform_int(1, static_cast<int>(p));
        const ObservedMatrix m(lbmtest_test::random_matrix(rng, n, p));
        const BlockStructure s = ward_cocluster({m, k, h});
        REQUIRE_NOTHROW(validate(s, n, p));
        CHECK(s.K == k);
        CHECK(s.H == h);
    }
}

TEST_CASE("constant matrices cluster deterministically") {
    const ObservedMatrix m(Matrix::Zero(6, 4));
    const BlockStructure a = ward_cocluster({m, 3, 2});
    const BlockStructure b = ward_cocluster({m, 3, 2});
    CHECK(a.row_assign == b.row_assign);
    CHECK(a.col_assign == b.col_assign);
    REQUIRE_NOTHROW(validate(a, 6, 4));
}

TEST_CASE("clustering is invariant under positive affine transforms") {
    Rng rng(44);
    const Matrix data = lbmtest_test::random_matrix(rng, 30, 8);
    const BlockStructure base = ward_cocluster({ObservedMatrix(data), 4, 3});
    const BlockStructure scaled =
        ward_cocluster({ObservedMatrix(2.5 * data.array() - 3.0), 4, 3});
    CHECK(base.row_assign == scaled.row_assign);
    CHECK(base.col_assign == scaled.col_assign);
}

TEST_CASE("clustering is equivariant under row permutation") {
    Rng rng(45);
    const Matrix data = lbmtest_test::random_matrix(rng, 24, 6);
    const BlockStructure base = ward_cocluster({ObservedMatrix(data), 3, 2});

    std::vector<Index> perm(24);
    std::iota(perm.begin(), perm.end(), 0);
    for (Index i = 24; i > 1; --i)
        std::swap(perm[static_cast<std::size_t>(i - 1)],
                  perm[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(i) - 1))]);
    Matrix permuted(24, 6);
    for (Index i = 0; i < 24; ++i) permuted.row(i) = data.row(perm[static_cast<std::size_t>(i)]);

    const BlockStructure shuffled = ward_cocluster({ObservedMatrix(permuted), 3, 2});
    // labels may differ, the partition must not
    BlockStructure unshuffled = shuffled;
    for (Index i = 0; i < 24; ++i)
        unshuffled.row_assign[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
            shuffled.row_assign[static_cast<std::size_t>(i)];
    const auto alignment = align_labels(unshuffled, base);
    CHECK(alignment.agreement == 1.0);
}

TEST_CASE("alignment of identical structures is the identity") {
    Rng rng(46);
    const auto s = lbmtest_test::random_structure(rng, 40, 30, 4, 3);
    const auto alignment = align_labels(s, s);
    CHECK(alignment.agreement == 1.0);
    CHECK(alignment.row_perm == std::vector<int>{1, 2, 3, 4});
    CHECK(alignment.col_perm == std::vector<int>{1, 2, 3});
}

TEST_CASE("alignment recovers a label swap") {
    Rng rng(47);
    const auto truth = lbmtest_test::random_structure(rng, 40, 30, 3, 2);
    BlockStructure swapped = truth;
    for (auto& label : swapped.row_assign)
        label = label == 1 ? 2 : (label == 2 ? 1 : label);
    const auto alignment = align_labels(swapped, truth);
    CHECK(alignment.agreement == 1.0);
    CHECK(alignment.row_perm == std::vector<int>{2, 1, 3});
    CHECK(alignment.col_perm == std::vector<int>{1, 2});
}

TEST_CASE("alignment rejects mismatched or oversized inputs") {
    Rng rng(48);
    const auto a = lbmtest_test::random_structure(rng, 10, 8, 2, 2);
    const auto b = lbmtest_test::random_structure(rng, 11, 8, 2, 2);
    CHECK_THROWS_AS(align_labels(a, b), DimensionMismatch);
    const auto c = lbmtest_test::random_structure(rng, 10, 8, 3, 2);
    CHECK_THROWS_AS(align_labels(a, c), DimensionMismatch);
    const auto big_a = lbmtest_test::random_structure(rng, 30, 30, 9, 2);
    const auto big_b = lbmtest_test::random_structure(rng, 30, 30, 9, 2);
    CHECK_THROWS_AS(align_labels(big_a, big_b), TooManyClustersForExhaustiveAlignment);
}

TEST_CASE("random assignments align near the 1/K agreement floor") {
    Rng rng(49);
    const auto a = lbmtest_test::random_structure(rng, 1000, 1000, 4, 4);
    const auto b = lbmtest_test::random_structure(rng, 1000, 1000, 4, 4);
    const auto alignment = align_labels(a, b);
    CHECK(alignment.agreement == Catch::Approx(0.25).margin(0.05));
}
