#pragma once

#include "gocohom/presentation.hpp"

namespace gocohom {

// C = k[w_1..w_2n], the ambient ring carrying the derivation.
RingPtr c_ring(int n);

// Element of the cohomology ring of BGO(2n), represented faithfully as the
// pair (p, q) of its images in k[L, b] (a, d killed) and in C (L killed).
// Invariants: s(q) = 0, and p with L -> 0, b_{4i} -> w_{2i}^2 equals q with
// the odd w set to zero.
class CohomElem {
public:
    CohomElem(int n, Poly2 p, Poly2 q);

    int n() const { return n_; }
    const Poly2& p() const { return p_; }
    const Poly2& q() const { return q_; }
    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    bool operator==(const CohomElem& o) const {
        return n_ == o.n_ && p_ == o.p_ && q_ == o.q_;
    }
    bool operator!=(const CohomElem& o) const { return !(*this == o); }

private:
    int n_;
    Poly2 p_;  // in k[L, b_4..b_{4n}]
    Poly2 q_;  // in C
};

CohomElem elem_zero(int n);
CohomElem elem_one(int n);

struct GenName {
    enum class Kind { Lambda, A, B, D } kind = Kind::Lambda;
    int sub = 0;              // subscript: a_sub (odd) or b_sub (multiple of 4)
    std::vector<int> subset;  // for d_T
};

CohomElem generator(int n, const GenName& g);
CohomElem gen_lambda(int n);
CohomElem gen_a(int n, int sub);
CohomElem gen_b(int n, int sub);
CohomElem gen_d(int n, std::vector<int> subset);

CohomElem operator+(const CohomElem& x, const CohomElem& y);
CohomElem operator*(const CohomElem& x, const CohomElem& y);
CohomElem elem_pow(const CohomElem& x, unsigned e);

// True iff (p, q) lies in the image of the pair model: s(q) = 0 and the
// compatibility substitution identity holds.
bool membership_check(int n, const Poly2& p, const Poly2& q);

// Section of the q-component: maps q with s(q) = 0 to (psi(sigma(q)), q),
// where sigma kills the odd w and psi rewrites w_{2i}^2 as b_{4i}.
CohomElem lift_from_B(int n, const Poly2& q);

struct LabeledElem {
    std::string label;  // canonical expression in the L/a/b/d alphabet
    CohomElem elem;
};

// Basis of degree d: the monomials L^j b^beta (j >= 1) paired with zero,
// together with lifts of the kernel basis of B_d. Ordered by label, the
// L-part first.
std::vector<LabeledElem> basis_Hd(int n, int d);

// Coordinates of a homogeneous degree-d element over basis_Hd.
BitVec coords(const CohomElem& x, int d);
BitVec coords(const CohomElem& x, int d, const std::vector<LabeledElem>& basis);

struct SmallTable {
    int n = 0;
    std::vector<std::vector<LabeledElem>> rows;  // degrees 0..5
};

SmallTable table_small(int n);

// Graded dimensions of k[L, w_2..w_{2m+1}], the odd-case ring (m = 0 gives
// k[L]).
std::vector<std::size_t> poincare_odd_case(int m, int D);

// Graded dimensions of the cohomology ring itself.
std::vector<std::size_t> h_series(int n, int D);

// Evaluates a polynomial over the free ring R = k[L, a, b, d_T] in the pair
// model by substituting the generators.
CohomElem eval_in_model(int n, const Poly2& rel_in_r);

// Canonical text of an element as a sum of basis labels, degree by degree.
std::string element_text(const CohomElem& x);

}  // namespace gocohom
