#pragma once

#include "gocohom/ring2.hpp"

namespace gocohom {

// k[w_1..w_n] with deg w_i = i.
RingPtr bo_ring(int nvars);

// Degree-(-1) derivation on a graded GF(2) polynomial ring, given by the
// images of the generators and extended by the Leibniz rule (signs are
// trivial in characteristic 2).
class Derivation {
public:
    Derivation(RingPtr ring, std::vector<Poly2> images);

    const RingPtr& ring() const { return ring_; }
    const Poly2& image(std::size_t i) const { return images_[i]; }

    Poly2 apply(const Poly2& p) const;

private:
    RingPtr ring_;
    std::vector<Poly2> images_;
};

// The derivation w_i -> ((n-i+1) mod 2) w_{i-1} on k[w_1..w_n], where w_0
// means the unit. For n = 2m this is sum_i u_i d/dv_i with u_i = w_{2i-1},
// v_i = w_{2i}.
Derivation bo_derivation(int n);

// Subset of {1..n}, kept strictly increasing.
struct SubsetIndex {
    int n = 0;
    std::vector<int> members;

    SubsetIndex(int n, std::vector<int> members);
    bool operator==(const SubsetIndex&) const = default;
};

int weight(const SubsetIndex& t);

// All subsets with |T| >= min_size, ordered by (weight, members).
std::vector<SubsetIndex> subsets_with_min_size(int n, int min_size);

// sum_{j in T} u_j v_{T-{j}} inside k[w_1..w_2n]; returns u_i for T = {i}
// and 0 for the empty set.
Poly2 s_of_vT(int n, const SubsetIndex& t);

}  // namespace gocohom
