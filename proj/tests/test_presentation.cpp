#include "doctest.h"

#include <algorithm>
#include <random>

#include "gocohom/presentation.hpp"

using namespace gocohom;

namespace {

std::vector<Poly2> koszul_to_c(int n, const std::vector<Poly2>& gens) {
    const KoszulRingLayout layout = koszul_free_layout(n);
    const RingPtr c = bo_ring(2 * n);
    std::vector<Poly2> images;
    for (int i = 1; i <= n; ++i)
        images.push_back(Poly2::variable(c, static_cast<std::size_t>(2 * i - 2)));
    for (int i = 1; i <= n; ++i)
        images.push_back(Poly2::variable(c, static_cast<std::size_t>(2 * i - 1), 2));
    for (const SubsetIndex& t : layout.subsets) images.push_back(s_of_vT(n, t));
    std::vector<Poly2> out;
    for (const Poly2& g : gens) out.push_back(substitute(g, images));
    return out;
}

bool contains_poly(const std::vector<Poly2>& list, const Poly2& p) {
    return std::any_of(list.begin(), list.end(), [&](const Poly2& g) { return g == p; });
}

}  // namespace

TEST_CASE("relation counts match the closed formulas") {
    for (int n = 1; n <= 5; ++n) {
        const RelationCounts counts = koszul_relation_counts(n);
        const unsigned long long k = (1ull << n) - n - 1;
        CHECK(counts.family1 ==
              (1ull << n) - static_cast<unsigned long long>(n) * (n - 1) / 2 - n - 1);
        CHECK(counts.family2 == static_cast<unsigned long long>(n) * (n - 1) / 2);
        CHECK(counts.family3_ordered == k * k - counts.family2);
        CHECK(gens_N(n).size() ==
              counts.family1 + counts.family2 + counts.family3_unordered);
        CHECK(gens_I(n).size() == static_cast<unsigned long long>(n) + k +
                                      counts.family1 + counts.family2 +
                                      counts.family3_unordered);
    }
}

TEST_CASE("kernel-ring relations at n = 2") {
    const auto gens = gens_N(2);
    REQUIRE(gens.size() == 1);
    const KoszulRingLayout layout = koszul_free_layout(2);
    const Poly2 c12 = Poly2::variable(layout.ring, layout.idx_c(0));
    const Poly2 u1 = Poly2::variable(layout.ring, layout.idx_u(1));
    const Poly2 u2 = Poly2::variable(layout.ring, layout.idx_u(2));
    const Poly2 v1 = Poly2::variable(layout.ring, layout.idx_vsq(1));
    const Poly2 v2 = Poly2::variable(layout.ring, layout.idx_vsq(2));
    CHECK(gens[0] == c12 * c12 + u1 * u1 * v2 + u2 * u2 * v1);
}

TEST_CASE("kernel-ring relations at n = 3") {
    const auto gens = gens_N(3);
    const KoszulRingLayout layout = koszul_free_layout(3);
    auto u = [&](int i) { return Poly2::variable(layout.ring, layout.idx_u(i)); };
    auto vsq = [&](int i) { return Poly2::variable(layout.ring, layout.idx_vsq(i)); };
    auto c = [&](std::vector<int> t) {
        return Poly2::variable(layout.ring, layout.idx_c(layout.rank_of(t)));
    };

    // the single family-(1) relation, from T = {1,2,3}
    CHECK(koszul_relation_counts(3).family1 == 1);
    CHECK(gens.front() == u(1) * c({2, 3}) + u(2) * c({1, 3}) + u(3) * c({1, 2}));

    // family (3) with T = {1,2,3}, U = {1,2}; the empty symmetric difference drops out
    const Poly2 expected =
        c({1, 2, 3}) * c({1, 2}) + u(1) * vsq(2) * c({1, 3}) + u(2) * vsq(1) * c({2, 3});
    CHECK(contains_poly(gens, expected));
}

TEST_CASE("all relations are homogeneous") {
    for (int n = 1; n <= 4; ++n) {
        for (const Poly2& g : gens_N(n)) CHECK(g.homogeneous_degree().has_value());
        for (const Poly2& g : gens_I(n)) CHECK(g.homogeneous_degree().has_value());
    }
}

TEST_CASE("relations vanish under c_T -> s(v_T)") {
    for (int n = 1; n <= 4; ++n)
        for (const Poly2& image : koszul_to_c(n, gens_N(n))) CHECK(image.is_zero());
}

TEST_CASE("cohomology relations at small n") {
    SUBCASE("n = 1") {
        const auto gens = gens_I(1);
        REQUIRE(gens.size() == 1);
        const CohomRingLayout layout = cohom_free_layout(1);
        CHECK(gens[0] == Poly2::variable(layout.ring, 0) *
                             Poly2::variable(layout.ring, layout.idx_a(1)));
    }
    SUBCASE("n = 2") {
        const auto gens = gens_I(2);
        REQUIRE(gens.size() == 4);
        std::vector<int> degrees;
        for (const Poly2& g : gens) degrees.push_back(*g.homogeneous_degree());
        std::sort(degrees.begin(), degrees.end());
        CHECK(degrees == std::vector<int>{3, 5, 7, 10});

        const CohomRingLayout layout = cohom_free_layout(2);
        auto var = [&](std::size_t i) { return Poly2::variable(layout.ring, i); };
        const Poly2 lambda = var(layout.idx_lambda());
        const Poly2 a1 = var(layout.idx_a(1)), a3 = var(layout.idx_a(2));
        const Poly2 b4 = var(layout.idx_b(1)), b8 = var(layout.idx_b(2));
        const Poly2 d12 = var(layout.idx_d(0));
        CHECK(contains_poly(gens, lambda * a1));
        CHECK(contains_poly(gens, lambda * a3));
        CHECK(contains_poly(gens, lambda * d12));
        CHECK(contains_poly(gens, d12 * d12 + a1 * a1 * b8 + a3 * a3 * b4));
    }
}

TEST_CASE("quotient dimensions") {
    // n = 1 has no class variables and no relations: the quotient is
    // A = k[u1, vsq1] with weights 1 and 4.
    const Presentation free_a = koszul_presentation(1);
    CHECK(free_a.relations.empty());
    const std::vector<std::size_t> expected{1, 1, 1, 1, 2};
    for (int d = 0; d <= 4; ++d)
        CHECK(quotient_dim(free_a, d) == expected[static_cast<std::size_t>(d)]);

    CHECK(quotient_dim(cohomology_presentation(2), 0) == 1);
    CHECK(quotient_dim(cohomology_presentation(2), 2) == 2);
}

TEST_CASE("quotient dimension is monotone under adding relations") {
    std::mt19937 rng(8);
    const Presentation full = cohomology_presentation(2);
    for (int t = 0; t < 10; ++t) {
        Presentation partial{full.ring, {}};
        for (const Poly2& g : full.relations)
            if (rng() & 1u) partial.relations.push_back(g);
        for (int d = 0; d <= 8; ++d)
            CHECK(quotient_dim(partial, d) >= quotient_dim(full, d));
    }
}

TEST_CASE("presentation verification report") {
    const PresentationReport r1 = verify_presentations(1, 8);
    CHECK(r1.all_ok);
    std::vector<std::size_t> hdims;
    for (int d = 0; d <= 5; ++d)
        hdims.push_back(r1.cohomology[static_cast<std::size_t>(d)].dim_lhs);
    CHECK(hdims == std::vector<std::size_t>{1, 1, 2, 1, 3, 2});

    const PresentationReport r2 = verify_presentations(2, 8, 2);
    CHECK(r2.all_ok);
    CHECK(r2.cohomology[5].dim_lhs == 4);
}

TEST_CASE("lambda-part dimensions") {
    CHECK(lambda_part_dim(1, 0) == 0);
    CHECK(lambda_part_dim(1, 2) == 1);   // L
    CHECK(lambda_part_dim(1, 6) == 2);   // L^3, L b4
    CHECK(lambda_part_dim(2, 3) == 0);
}
