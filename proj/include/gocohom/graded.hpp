#pragma once

#include "gocohom/deriv.hpp"
#include "gocohom/f2linalg.hpp"

namespace gocohom {

// Ordered monomial basis of one graded slice of a ring.
struct DegreeSlice {
    RingPtr ring;
    int d = 0;
    std::vector<Monomial> basis;  // descending monomial order

    std::size_t index_of(const Monomial& m) const;  // throws if absent
};

DegreeSlice degree_slice(const RingPtr& ring, int d);

BitVec poly_to_vec(const Poly2& p, const DegreeSlice& slice);
Poly2 vec_to_poly(const BitVec& v, const DegreeSlice& slice);

// Matrix of s : C_d -> C_{d-1} on C = k[w_1..w_2n]. Rows are indexed by the
// degree-d monomial basis, columns by the degree-(d-1) basis; row m holds
// s(m).
BitMatrix matrix_of_s(int n, int d);

struct KernelBasis {
    int n = 0;
    int d = 0;
    std::vector<Poly2> elements;  // canonical reduced-echelon basis of B_d
};

KernelBasis kernel_ring_basis(int n, int d);

// Degree-d monomials of A = k[u_1..u_n, v_1^2..v_n^2] inside C.
std::vector<Monomial> a_monomials(int n, int d);

struct KerDecompReport {
    int n = 0;
    int d = 0;
    std::size_t dim_ker = 0;
    std::size_t dim_span = 0;  // of im(s)_d together with A_d
    bool ok = false;
};

// Checks ker(s)_d = im(s)_d + A_d, both containment and dimension.
KerDecompReport verify_ker_decomposition(int n, int d);

enum class SeriesKind { RingC, RingA, KernelB };

// Graded dimensions up to degree D; slice n refers to C = k[w_1..w_2n].
std::vector<std::size_t> hilbert_series(SeriesKind kind, int n, int D);

}  // namespace gocohom
