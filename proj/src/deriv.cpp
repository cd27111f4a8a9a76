#include "gocohom/deriv.hpp"

#include <algorithm>
#include <stdexcept>

namespace gocohom {

RingPtr bo_ring(int nvars) {
    if (nvars < 1) throw std::invalid_argument("bo_ring: need at least one variable");
    std::vector<std::pair<std::string, int>> vars;
    vars.reserve(static_cast<std::size_t>(nvars));
    for (int i = 1; i <= nvars; ++i) vars.emplace_back("w" + std::to_string(i), i);
    return make_ring(std::move(vars));
}

Derivation::Derivation(RingPtr ring, std::vector<Poly2> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
    if (images_.size() != ring_->nvars())
        throw std::invalid_argument("derivation: one image per variable required");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const Poly2& im = images_[i];
        if (!same_ring(im.ring(), ring_))
            throw std::invalid_argument("derivation: image in a different ring");
        if (im.is_zero()) continue;
        const auto d = im.homogeneous_degree();
        if (!d || *d != ring_->degree(i) - 1)
            throw std::invalid_argument("derivation: image of '" + ring_->name(i) +
                                        "' is not homogeneous of degree deg-1");
    }
}

Poly2 Derivation::apply(const Poly2& p) const {
    if (!same_ring(p.ring(), ring_))
        throw std::invalid_argument("derivation: ring mismatch");
    Poly2 acc = Poly2::zero(ring_);
    for (const Monomial& m : p.terms()) {
        for (std::size_t i = 0; i < m.exp.size(); ++i) {
            // e x^{e-1} s(x) vanishes for even e over GF(2).
            if ((m.exp[i] & 1) == 0 || images_[i].is_zero()) continue;
            Monomial rest = m;
            rest.exp[i] -= 1;
            acc = acc + mul_monomial(images_[i], rest);
        }
    }
    return acc;
}

Derivation bo_derivation(int n) {
    RingPtr ring = bo_ring(n);
    std::vector<Poly2> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int coeff = (n - i + 1) & 1;
        if (!coeff)
            images.push_back(Poly2::zero(ring));
        else if (i == 1)
            images.push_back(Poly2::one(ring));  // w_0 = 1
        else
            images.push_back(Poly2::variable(ring, static_cast<std::size_t>(i - 2)));
    }
    return Derivation(std::move(ring), std::move(images));
}

SubsetIndex::SubsetIndex(int n_, std::vector<int> members_)
    : n(n_), members(std::move(members_)) {
    if (n < 1) throw std::invalid_argument("subset: n must be positive");
    int prev = 0;
    for (int m : members) {
        if (m <= prev) throw std::invalid_argument("subset: members must be strictly increasing");
        if (m > n) throw std::invalid_argument("subset: member out of range");
        prev = m;
    }
}

int weight(const SubsetIndex& t) {
    int w = 0;
    for (int m : t.members) w += m;
    return w;
}

std::vector<SubsetIndex> subsets_with_min_size(int n, int min_size) {
    if (n < 1 || n > 24) throw std::invalid_argument("subsets_with_min_size: n out of range");
    std::vector<SubsetIndex> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) members.push_back(i);
        if (static_cast<int>(members.size()) >= min_size)
            out.emplace_back(n, std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const SubsetIndex& a, const SubsetIndex& b) {
        const int wa = weight(a), wb = weight(b);
        if (wa != wb) return wa < wb;
        return a.members < b.members;
    });
    return out;
}

Poly2 s_of_vT(int n, const SubsetIndex& t) {
    if (t.n != n) throw std::invalid_argument("s_of_vT: subset defined for a different n");
    RingPtr ring = bo_ring(2 * n);
    std::vector<Monomial> terms;
    for (int j : t.members) {
        Monomial m{std::vector<int>(ring->nvars(), 0)};
        m.exp[static_cast<std::size_t>(2 * j - 2)] = 1;  // u_j = w_{2j-1}
        for (int i : t.members)
            if (i != j) m.exp[static_cast<std::size_t>(2 * i - 1)] = 1;  // v_i = w_{2i}
        terms.push_back(std::move(m));
    }
    return Poly2::from_terms(std::move(ring), std::move(terms));
}

}  // namespace gocohom
