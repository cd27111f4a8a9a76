#pragma once

#include "gocohom/graded.hpp"

namespace gocohom {

// A free graded polynomial ring together with a list of homogeneous
// relations generating the defining ideal.
struct Presentation {
    RingPtr ring;
    std::vector<Poly2> relations;
};

// Free ring A[c_T] = k[u_1..u_n, vsq_1..vsq_n, c_T (|T| >= 2)] with
// deg u_i = 2i-1, deg vsq_i = 4i, deg c_T = 2 weight(T) - 1.
struct KoszulRingLayout {
    int n = 0;
    RingPtr ring;
    std::vector<SubsetIndex> subsets;  // canonical (weight, members) order

    std::size_t idx_u(int i) const { return static_cast<std::size_t>(i - 1); }
    std::size_t idx_vsq(int i) const { return static_cast<std::size_t>(n + i - 1); }
    std::size_t idx_c(std::size_t subset_rank) const {
        return static_cast<std::size_t>(2 * n) + subset_rank;
    }
    std::size_t rank_of(const std::vector<int>& members) const;
};

KoszulRingLayout koszul_free_layout(int n);
RingPtr koszul_free_ring(int n);

// Free ring R = k[L, a_{2i-1}, b_{4i}, d_T (|T| >= 2)] with deg L = 2,
// deg a_{2i-1} = 2i-1, deg b_{4i} = 4i, deg d_T = 2 weight(T) - 1.
struct CohomRingLayout {
    int n = 0;
    RingPtr ring;
    std::vector<SubsetIndex> subsets;

    std::size_t idx_lambda() const { return 0; }
    std::size_t idx_a(int i) const { return static_cast<std::size_t>(i); }       // a_{2i-1}
    std::size_t idx_b(int i) const { return static_cast<std::size_t>(n + i); }   // b_{4i}
    std::size_t idx_d(std::size_t subset_rank) const {
        return static_cast<std::size_t>(2 * n + 1) + subset_rank;
    }
    std::size_t rank_of(const std::vector<int>& members) const;
};

CohomRingLayout cohom_free_layout(int n);
RingPtr cohom_free_ring(int n);

// k[L, b_4..b_{4n}] with deg L = 2, deg b_{4i} = 4i.
RingPtr lambda_b_ring(int n);

// The three relation families presenting the kernel ring over A[c_T].
std::vector<Poly2> gens_N(int n);
// The five relation families presenting the cohomology ring over R.
std::vector<Poly2> gens_I(int n);

Presentation koszul_presentation(int n);
Presentation cohomology_presentation(int n);

struct RelationCounts {
    unsigned long long family1 = 0;          // 2^n - n(n-1)/2 - n - 1
    unsigned long long family2 = 0;          // n(n-1)/2
    unsigned long long family3_unordered = 0;  // K(K+1)/2 - n(n-1)/2, K = 2^n-n-1
    unsigned long long family3_ordered = 0;    // K^2 - n(n-1)/2
};

RelationCounts koszul_relation_counts(int n);

// Dimension of the degree-d slice of the quotient, by spanning the ideal
// slice with all products relation * monomial of exact degree d.
std::size_t quotient_dim(const Presentation& p, int d);

struct DimRecord {
    int d = 0;
    std::size_t dim_lhs = 0;
    std::size_t dim_rhs = 0;
    bool ok = false;
};

struct PresentationReport {
    int n = 0;
    int max_degree = 0;
    std::vector<DimRecord> koszul;      // A[c_T]/N against dim B_d
    std::vector<DimRecord> cohomology;  // R/I against dim (L k[L,b])_d + dim B_d
    bool all_ok = false;
};

PresentationReport verify_presentations(int n, int D, int jobs = 1);

// Number of monomials L^j b^beta of degree d with j >= 1.
std::size_t lambda_part_dim(int n, int d);

}  // namespace gocohom
