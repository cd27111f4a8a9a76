#include "doctest.h"

#include <random>

#include "gocohom/cohomring.hpp"
#include "gocohom/verify.hpp"

using namespace gocohom;

namespace {

std::vector<std::string> labels_of(const std::vector<LabeledElem>& basis) {
    std::vector<std::string> out;
    for (const LabeledElem& le : basis) out.push_back(le.label);
    return out;
}

}  // namespace

TEST_CASE("generator pairs") {
    const RingPtr c = c_ring(2);
    const CohomElem b4 = gen_b(2, 4);
    CHECK(b4.p() == Poly2::variable(lambda_b_ring(2), 1));
    CHECK(b4.q() == Poly2::variable(c, 1, 2));

    const CohomElem a1 = gen_a(2, 1);
    CHECK(a1.p().is_zero());
    CHECK(a1.q() == Poly2::variable(c, 0));

    const CohomElem d12 = gen_d(2, {1, 2});
    CHECK(d12.p().is_zero());
    CHECK(d12.q() == Poly2::single(c, Monomial{{1, 0, 0, 1}}) +
                         Poly2::single(c, Monomial{{0, 1, 1, 0}}));

    CHECK_THROWS_AS(gen_a(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(gen_b(2, 6), std::invalid_argument);
    CHECK_THROWS_AS(gen_d(2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(gen_d(2, {1, 3}), std::invalid_argument);
}

TEST_CASE("torsion relations hold in the pair model") {
    CHECK((gen_lambda(2) * gen_a(2, 1)).is_zero());
    CHECK((gen_lambda(2) * gen_d(2, {1, 2})).is_zero());
    const CohomElem rel = elem_pow(gen_d(2, {1, 2}), 2) +
                          elem_pow(gen_a(2, 1), 2) * gen_b(2, 8) +
                          elem_pow(gen_a(2, 3), 2) * gen_b(2, 4);
    CHECK(rel.is_zero());
}

TEST_CASE("membership examples") {
    const int n = 1;
    const RingPtr lb = lambda_b_ring(n);
    const RingPtr c = c_ring(n);
    CHECK(membership_check(n, Poly2::variable(lb, 0), Poly2::zero(c)));
    CHECK_FALSE(membership_check(n, Poly2::one(lb), Poly2::zero(c)));
    CHECK_FALSE(membership_check(n, Poly2::zero(lb), Poly2::variable(c, 1)));
}

TEST_CASE("lifting kernel elements") {
    const RingPtr c1 = c_ring(1);
    const CohomElem lifted = lift_from_B(1, Poly2::variable(c1, 1, 2));
    CHECK(lifted == gen_b(1, 4));

    const RingPtr c2 = c_ring(2);
    const Poly2 sv12 = Poly2::single(c2, Monomial{{1, 0, 0, 1}}) +
                       Poly2::single(c2, Monomial{{0, 1, 1, 0}});
    CHECK(lift_from_B(2, sv12).p().is_zero());

    const CohomElem w1 = lift_from_B(1, Poly2::variable(c1, 0));
    CHECK(w1.p().is_zero());
    CHECK(w1.q() == Poly2::variable(c1, 0));

    CHECK(lift_from_B(1, Poly2::one(c1)) == elem_one(1));
    CHECK_THROWS_AS(lift_from_B(1, Poly2::variable(c1, 1)), std::invalid_argument);
}

TEST_CASE("lift is a section of the q-component") {
    for (int d = 0; d <= 8; ++d)
        for (const Poly2& q : kernel_ring_basis(2, d).elements) {
            const CohomElem x = lift_from_B(2, q);
            CHECK(x.q() == q);
            CHECK(membership_check(2, x.p(), x.q()));
        }
}

TEST_CASE("degree bases carry the expected labels") {
    CHECK(labels_of(basis_Hd(2, 2)) == std::vector<std::string>{"L", "a1^2"});
    CHECK(labels_of(basis_Hd(2, 5)) ==
          std::vector<std::string>{"a1^5", "a1^2*a3", "a1*b4", "d{1,2}"});
    CHECK(labels_of(basis_Hd(1, 4)) == std::vector<std::string>{"L^2", "a1^4", "b4"});
    CHECK(labels_of(basis_Hd(1, 0)) == std::vector<std::string>{"1"});
}

TEST_CASE("coordinates over a degree basis") {
    SUBCASE("a lambda-part monomial") {
        const CohomElem x = gen_lambda(1) * gen_b(1, 4);
        const auto basis = basis_Hd(1, 6);
        const BitVec v = coords(x, 6, basis);
        REQUIRE(basis.size() == 4);
        CHECK(basis[1].label == "L*b4");
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(v.get(i) == (i == 1));
    }
    SUBCASE("a two-term combination") {
        const CohomElem x = gen_a(2, 1) * gen_a(2, 3) + elem_pow(gen_a(2, 1), 4);
        const auto basis = basis_Hd(2, 4);
        REQUIRE(labels_of(basis) ==
                std::vector<std::string>{"L^2", "a1^4", "a1*a3", "b4"});
        const BitVec v = coords(x, 4, basis);
        CHECK_FALSE(v.get(0));
        CHECK(v.get(1));
        CHECK(v.get(2));
        CHECK_FALSE(v.get(3));
    }
    SUBCASE("zero") {
        const BitVec v = coords(elem_zero(2), 3);
        CHECK(v.is_zero());
    }
}

TEST_CASE("small table matches the reference for n = 1, 2, 3") {
    for (int n = 1; n <= 3; ++n) {
        const SmallTable table = table_small(n);
        const auto expected = reference_small_table(n);
        REQUIRE(table.rows.size() == expected.size());
        for (std::size_t d = 0; d < expected.size(); ++d)
            CHECK(labels_of(table.rows[d]) == expected[d]);
    }
}

TEST_CASE("odd-case dimension series") {
    CHECK(poincare_odd_case(0, 6) ==
          std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1});
    CHECK(poincare_odd_case(1, 3) == std::vector<std::size_t>{1, 0, 2, 1});
    CHECK(poincare_odd_case(2, 0) == std::vector<std::size_t>{1});
}

TEST_CASE("pair model and presented ring agree in dimension") {
    for (int n = 1; n <= 2; ++n) {
        const Presentation p = cohomology_presentation(n);
        for (int d = 0; d <= 10; ++d)
            CHECK(basis_Hd(n, d).size() == quotient_dim(p, d));
    }
}

TEST_CASE("model arithmetic laws and closure") {
    std::mt19937 rng(61);
    const std::vector<CohomElem> gens{gen_lambda(2), gen_a(2, 1), gen_a(2, 3),
                                      gen_b(2, 4),   gen_b(2, 8), gen_d(2, {1, 2})};
    auto random_elem = [&] {
        CohomElem x = elem_one(2);
        const int factors = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < factors; ++i) x = x * gens[rng() % gens.size()];
        return x;
    };
    for (int t = 0; t < 40; ++t) {
        const CohomElem x = random_elem(), y = random_elem(), z = random_elem();
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK((x + y) * z == x * z + y * z);
        CHECK(membership_check(2, (x * y).p(), (x * y).q()));
        CHECK(membership_check(2, (x + y).p(), (x + y).q()));
    }
    CHECK_THROWS_AS(gen_lambda(1) * gen_lambda(2), std::invalid_argument);
}

TEST_CASE("evaluating free-ring polynomials in the model") {
    const CohomRingLayout layout = cohom_free_layout(2);
    const Poly2 rel = Poly2::variable(layout.ring, layout.idx_lambda()) *
                      Poly2::variable(layout.ring, layout.idx_a(1));
    CHECK(eval_in_model(2, rel).is_zero());
    CHECK(eval_in_model(2, Poly2::one(layout.ring)) == elem_one(2));
}

TEST_CASE("canonical element text") {
    CHECK(element_text(gen_b(2, 4)) == "b4");
    CHECK(element_text(elem_zero(2)) == "0");
    CHECK(element_text(gen_lambda(2) + elem_pow(gen_a(2, 1), 2)) == "L + a1^2");
    // an inhomogeneous sum prints degree by degree
    CHECK(element_text(elem_one(1) + gen_lambda(1)) == "1 + L");
}
