#include "doctest.h"

#include "gocohom/deriv.hpp"
#include "gocohom/presentation.hpp"
#include "gocohom/ring2.hpp"
#include "test_util.hpp"

using namespace gocohom;

namespace {

Poly2 wpoly(const RingPtr& ring, std::vector<int> exp) {
    return Poly2::single(ring, Monomial{std::move(exp)});
}

}  // namespace

TEST_CASE("ring construction rejects bad variable lists") {
    CHECK_THROWS_AS(make_ring({{"x", 1}, {"x", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_ring({{"x", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_ring({{"", 3}}), std::invalid_argument);
}

TEST_CASE("addition is xor on term sets") {
    const RingPtr c = bo_ring(4);
    const Poly2 w1 = Poly2::variable(c, 0);
    const Poly2 w2 = Poly2::variable(c, 1);
    CHECK((w1 + w1).is_zero());
    CHECK((w1 + w2).size() == 2);

    const Poly2 w1w4 = wpoly(c, {1, 0, 0, 1});
    const Poly2 w2w3 = wpoly(c, {0, 1, 1, 0});
    CHECK((w1w4 + w2w3) + w2w3 == w1w4);
}

TEST_CASE("multiplication, identity and Frobenius") {
    const RingPtr c = bo_ring(4);
    const Poly2 u1v2 = wpoly(c, {1, 0, 0, 1});  // w1 w4
    const Poly2 u2v1 = wpoly(c, {0, 1, 1, 0});  // w3 w2
    const Poly2 sq = (u1v2 + u2v1) * (u1v2 + u2v1);
    CHECK(sq == wpoly(c, {2, 0, 0, 2}) + wpoly(c, {0, 2, 2, 0}));

    const Poly2 p = u1v2 + Poly2::variable(c, 2);
    CHECK(p * Poly2::one(c) == p);

    const Poly2 w1 = Poly2::variable(c, 0);
    const Poly2 w2 = Poly2::variable(c, 1);
    CHECK((w1 + w2) * (w1 + w2) == w1 * w1 + w2 * w2);
}

TEST_CASE("ring mismatch is rejected") {
    const Poly2 a = Poly2::variable(bo_ring(2), 0);
    const Poly2 b = Poly2::variable(bo_ring(4), 0);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("substitution examples") {
    const RingPtr lb = lambda_b_ring(1);  // k[L, b4]
    const RingPtr c = bo_ring(2);
    const Poly2 b4 = Poly2::variable(lb, 1);
    const Poly2 w2sq = Poly2::variable(c, 1, 2);
    CHECK(substitute(b4, {Poly2::zero(c), w2sq}) == w2sq);

    const RingPtr r = cohom_free_ring(1);  // k[L, a1, b4]
    const Poly2 la1 = Poly2::variable(r, 0) * Poly2::variable(r, 1);
    const std::vector<Poly2> kill_a{Poly2::variable(r, 0), Poly2::zero(r),
                                    Poly2::variable(r, 2)};
    CHECK(substitute(la1, kill_a).is_zero());

    CHECK(substitute(w2sq, {Poly2::zero(c), Poly2::variable(c, 1)}) == w2sq);

    CHECK_THROWS_AS(substitute(b4, {Poly2::zero(c)}), std::invalid_argument);
}

TEST_CASE("substitution composes") {
    std::mt19937 rng(17);
    const RingPtr r1 = bo_ring(2);
    const RingPtr r2 = bo_ring(3);
    const RingPtr r3 = bo_ring(2);
    for (int t = 0; t < 40; ++t) {
        const Poly2 p = testutil::random_poly(r1, 4, 3, rng);
        std::vector<Poly2> f, g;
        for (int i = 0; i < 2; ++i) f.push_back(testutil::random_poly(r2, 3, 2, rng));
        for (int i = 0; i < 3; ++i) g.push_back(testutil::random_poly(r3, 3, 2, rng));
        std::vector<Poly2> composed;
        for (const Poly2& im : f) composed.push_back(substitute(im, g));
        CHECK(substitute(substitute(p, f), g) == substitute(p, composed));
    }
}

TEST_CASE("monomial enumeration in canonical order") {
    const RingPtr c = bo_ring(2);
    const auto mons = enumerate_monomials(*c, 5);
    REQUIRE(mons.size() == 3);
    CHECK(mons[0] == Monomial{{5, 0}});
    CHECK(mons[1] == Monomial{{3, 1}});
    CHECK(mons[2] == Monomial{{1, 2}});

    CHECK(enumerate_monomials(*c, 0) == std::vector<Monomial>{Monomial{{0, 0}}});

    const RingPtr lb = make_ring({{"L", 2}, {"b4", 4}});
    const auto lbm = enumerate_monomials(*lb, 4);
    REQUIRE(lbm.size() == 2);
    CHECK(lbm[0] == Monomial{{2, 0}});
    CHECK(lbm[1] == Monomial{{0, 1}});
}

TEST_CASE("enumeration counts match the generating function") {
    const std::vector<RingPtr> rings{bo_ring(2), bo_ring(4), bo_ring(6),
                                     lambda_b_ring(2), cohom_free_ring(2),
                                     koszul_free_ring(2)};
    for (const RingPtr& ring : rings) {
        std::vector<int> degs;
        for (std::size_t i = 0; i < ring->nvars(); ++i) degs.push_back(ring->degree(i));
        const auto expected = testutil::series_counts(degs, 20);
        for (int d = 0; d <= 20; ++d)
            CHECK(slice_dim(*ring, d) ==
                  static_cast<std::size_t>(expected[static_cast<std::size_t>(d)]));
    }
}

TEST_CASE("algebraic laws on random polynomials") {
    std::mt19937 rng(23);
    const RingPtr c = bo_ring(3);
    for (int t = 0; t < 60; ++t) {
        const Poly2 p = testutil::random_poly(c, 5, 3, rng);
        const Poly2 q = testutil::random_poly(c, 5, 3, rng);
        const Poly2 r = testutil::random_poly(c, 5, 3, rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK((p + p).is_zero());
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q) * (p + q) == p * p + q * q);
    }
}

TEST_CASE("text format") {
    const RingPtr c = bo_ring(4);
    const Poly2 p = wpoly(c, {1, 0, 0, 1}) + wpoly(c, {0, 1, 1, 0});
    CHECK(to_text(p) == "w1*w4 + w2*w3");
    CHECK(to_text(Poly2::zero(c)) == "0");
    CHECK(to_text(Poly2::one(c)) == "1");
    CHECK(to_text(Poly2::variable(c, 0, 3)) == "w1^3");
}

TEST_CASE("homogeneous degree query") {
    const RingPtr c = bo_ring(2);
    CHECK(!Poly2::zero(c).homogeneous_degree().has_value());
    CHECK(Poly2::zero(c).is_homogeneous());
    const Poly2 mixed = Poly2::variable(c, 0) + Poly2::variable(c, 1);
    CHECK(!mixed.homogeneous_degree().has_value());
    const Poly2 p = wpoly(c, {5, 0}) + wpoly(c, {1, 2});
    CHECK(p.homogeneous_degree() == 5);
}
