#include "doctest.h"

#include <random>

#include "gocohom/f2linalg.hpp"

using namespace gocohom;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
    BitMatrix m(rows, cols);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c);
    return m;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) t.set(c, r);
    return t;
}

// Test-only oracle: every left-kernel vector by exhaustive enumeration,
// the zero vector included.
std::size_t brute_kernel_count(const BitMatrix& m) {
    std::size_t count = 0;
    for (std::uint64_t bits = 0; bits < (1ull << m.rows()); ++bits) {
        BitVec x(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (bits & (1ull << r)) x.set(r);
        if (vec_times_matrix(x, m).is_zero()) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("rank of identity and zero matrices") {
    BitMatrix id(5, 5);
    for (std::size_t i = 0; i < 5; ++i) id.set(i, i);
    CHECK(rank(id) == 5);
    CHECK(rank(BitMatrix(3, 7)) == 0);
}

TEST_CASE("hand-checked derivation matrix slice") {
    // rows w1^4, w1^2 w2, w2^2 mapping to [0, w1^3, 0] over basis [w1^3, w1 w2]
    BitMatrix m(3, 2);
    m.set(1, 0);
    CHECK(rank(m) == 1);
    const auto kernel = kernel_basis(m);
    REQUIRE(kernel.size() == 2);
    BitVec e0(3), e2(3);
    e0.set(0);
    e2.set(2);
    CHECK(kernel[0] == e0);
    CHECK(kernel[1] == e2);
}

TEST_CASE("kernel of identity and zero matrices") {
    BitMatrix id(4, 4);
    for (std::size_t i = 0; i < 4; ++i) id.set(i, i);
    CHECK(kernel_basis(id).empty());

    const auto kernel = kernel_basis(BitMatrix(3, 5));
    REQUIRE(kernel.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        BitVec e(3);
        e.set(i);
        CHECK(kernel[i] == e);
    }
}

TEST_CASE("kernel matches exhaustive enumeration") {
    std::mt19937 rng(99);
    for (int t = 0; t < 50; ++t) {
        const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 10;
        const BitMatrix m = random_matrix(rows, cols, rng);
        const auto fast = kernel_basis(m);
        // each basis vector lies in the kernel ...
        for (const BitVec& x : fast) CHECK(vec_times_matrix(x, m).is_zero());
        // ... they are independent ...
        BitMatrix stacked(fast.size(), rows);
        for (std::size_t r = 0; r < fast.size(); ++r) stacked.set_row(r, fast[r]);
        CHECK(rank(stacked) == fast.size());
        // ... and they span everything the oracle found.
        CHECK(brute_kernel_count(m) == (1ull << fast.size()));
    }
}

TEST_CASE("kernel vectors annihilate and rank-nullity holds") {
    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
        const std::size_t rows = 1 + rng() % 20, cols = 1 + rng() % 25;
        const BitMatrix m = random_matrix(rows, cols, rng);
        const auto kernel = kernel_basis(m);
        CHECK(rank(m) + kernel.size() == rows);
        for (const BitVec& x : kernel) CHECK(vec_times_matrix(x, m).is_zero());
    }
}

TEST_CASE("membership solving") {
    BitMatrix id(4, 4);
    for (std::size_t i = 0; i < 4; ++i) id.set(i, i);
    BitVec t(4);
    t.set(1);
    t.set(3);
    const auto x = solve_membership(id, t);
    REQUIRE(x.has_value());
    CHECK(*x == t);

    CHECK(solve_membership(BitMatrix(2, 3), BitVec(3))->is_zero());

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 12;
        const BitMatrix m = random_matrix(rows, cols, rng);
        BitVec target(cols);
        std::bernoulli_distribution bit(0.5);
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) target.set(c);
        const auto sol = solve_membership(m, target);
        if (sol) {
            CHECK(vec_times_matrix(*sol, m) == target);
        } else {
            BitMatrix stacked(rows + 1, cols);
            for (std::size_t r = 0; r < rows; ++r) stacked.set_row(r, m.row(r));
            stacked.set_row(rows, target);
            CHECK(rank(stacked) == rank(m) + 1);
        }
    }
}

TEST_CASE("results are deterministic and inputs stay unchanged") {
    std::mt19937 rng(2024);
    const BitMatrix m = random_matrix(12, 15, rng);
    const BitMatrix copy = m;
    const auto k1 = kernel_basis(m);
    const auto k2 = kernel_basis(m);
    CHECK(k1 == k2);
    CHECK(rank(m) == rank(copy));
    for (std::size_t r = 0; r < m.rows(); ++r) CHECK(m.row(r) == copy.row(r));
}

TEST_CASE("rank is invariant under transposition") {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        const BitMatrix m = random_matrix(1 + rng() % 30, 1 + rng() % 30, rng);
        CHECK(rank(m) == rank(transpose(m)));
    }
}
