#pragma once

#include "gocohom/cohomring.hpp"

namespace gocohom {

unsigned long long binom_exact(unsigned a, unsigned b);

// Binomial parity, computed both by exact integer arithmetic and by the
// carry criterion; the two routes are cross-asserted.
int binom_mod2(unsigned a, unsigned b);

// k[L] with deg L = 2.
RingPtr lambda_ring();

// Lower unitriangular n x n matrix with entries in k[L], even powers only.
struct TriMatrixPoly {
    int n = 0;
    std::vector<std::vector<Poly2>> entry;  // entry[r-1][k-1] for 1 <= k <= r <= n

    const Poly2& at(int r, int k) const {
        return entry[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(k - 1)];
    }
};

// A_{r,k} = C(n-k, 2r-2k) L^{2r-2k}.
TriMatrixPoly matrix_A(int n);

// Exact inverse by forward substitution; unit diagonal is preserved.
TriMatrixPoly invert_unitriangular(const TriMatrixPoly& m);

TriMatrixPoly tri_mul(const TriMatrixPoly& a, const TriMatrixPoly& b);
bool tri_is_identity(const TriMatrixPoly& m);

// f_r = C(n,2r-1) L^{2r-2}
//     + sum_{k=1}^{r-1} C(n-k,2r-1-2k) L^{2r-2-2k}
//       sum_{j=1}^{k} B_{k,j} (b_{4j} + C(n,2j) L^{2j}),
// in k[L, b_4..b_{4n}], where B is the inverse of matrix_A(n).
Poly2 f_poly(int n, int r);

// Image of the i-th mod-2 Chern class: b_{4r} when i = 2r, and
// a_{2r-1}^2 + L f_r when i = 2r-1.
CohomElem chern_image(int n, int i);

// k[L, x_1..x_n], all generators of degree 2.
RingPtr splitting_ring(int n);

struct SplitCheck {
    int r = 0;
    bool odd_identity_ok = false;   // L f_r(L, b(L,x)) equals cbar_{2r-1}(L,x)
    bool even_expansion_ok = false;  // cbar_{2r} matches the symmetric-function expansion
    bool odd_expansion_ok = false;   // cbar_{2r-1} matches its expansion
};

struct SplittingReport {
    int n = 0;
    std::vector<SplitCheck> checks;
    bool ok = false;
};

// Expands c(E) = prod_i (1 + L + (L x_i + x_i^2)) in k[L, x] and checks the
// odd-class identity and both graded expansions for every r.
SplittingReport splitting_oracle(int n);

}  // namespace gocohom
