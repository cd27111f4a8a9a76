#include "gocohom/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace gocohom {

std::size_t DegreeSlice::index_of(const Monomial& m) const {
    const GradedRing& R = *ring;
    const auto it = std::lower_bound(
        basis.begin(), basis.end(), m,
        [&R](const Monomial& a, const Monomial& b) { return mon_cmp(R, a, b) > 0; });
    if (it == basis.end() || !(*it == m))
        throw std::logic_error("monomial not in degree slice");
    return static_cast<std::size_t>(it - basis.begin());
}

DegreeSlice degree_slice(const RingPtr& ring, int d) {
    return DegreeSlice{ring, d, enumerate_monomials(*ring, d)};
}

BitVec poly_to_vec(const Poly2& p, const DegreeSlice& slice) {
    BitVec v(slice.basis.size());
    for (const Monomial& m : p.terms()) v.set(slice.index_of(m));
    return v;
}

Poly2 vec_to_poly(const BitVec& v, const DegreeSlice& slice) {
    std::vector<Monomial> terms;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) terms.push_back(slice.basis[i]);
    return Poly2::from_terms(slice.ring, std::move(terms));
}

BitMatrix matrix_of_s(int n, int d) {
    if (d < 1) throw std::invalid_argument("matrix_of_s: degree must be >= 1");
    const Derivation s = bo_derivation(2 * n);
    const DegreeSlice dom = degree_slice(s.ring(), d);
    const DegreeSlice cod = degree_slice(s.ring(), d - 1);
    BitMatrix m(dom.basis.size(), cod.basis.size());
    for (std::size_t r = 0; r < dom.basis.size(); ++r) {
        const Poly2 image = s.apply(Poly2::single(s.ring(), dom.basis[r]));
        for (const Monomial& t : image.terms()) m.set(r, cod.index_of(t));
    }
    return m;
}

KernelBasis kernel_ring_basis(int n, int d) {
    if (d < 0) throw std::invalid_argument("kernel_ring_basis: negative degree");
    const RingPtr ring = bo_ring(2 * n);
    if (d == 0) return KernelBasis{n, d, {Poly2::one(ring)}};
    const DegreeSlice dom = degree_slice(ring, d);
    KernelBasis kb{n, d, {}};
    for (const BitVec& v : kernel_basis(matrix_of_s(n, d)))
        kb.elements.push_back(vec_to_poly(v, dom));
    return kb;
}

std::vector<Monomial> a_monomials(int n, int d) {
    const RingPtr ring = bo_ring(2 * n);
    std::vector<Monomial> out;
    for (Monomial& m : enumerate_monomials(*ring, d)) {
        bool even_v = true;
        for (int i = 1; i <= n; ++i)
            if (m.exp[static_cast<std::size_t>(2 * i - 1)] & 1) {
                even_v = false;
                break;
            }
        if (even_v) out.push_back(std::move(m));
    }
    return out;
}

KerDecompReport verify_ker_decomposition(int n, int d) {
    if (d < 0) throw std::invalid_argument("verify_ker_decomposition: negative degree");
    const Derivation s = bo_derivation(2 * n);
    const DegreeSlice slice_d = degree_slice(s.ring(), d);

    KerDecompReport rep{n, d, 0, 0, false};
    rep.dim_ker = d == 0 ? 1 : slice_d.basis.size() - rank(matrix_of_s(n, d));

    std::vector<Poly2> spanning;
    for (const Monomial& m : enumerate_monomials(*s.ring(), d + 1)) {
        Poly2 im = s.apply(Poly2::single(s.ring(), m));
        if (!im.is_zero()) spanning.push_back(std::move(im));
    }
    for (const Monomial& m : a_monomials(n, d))
        spanning.push_back(Poly2::single(s.ring(), m));

    bool contained = true;
    BitMatrix span(spanning.size(), slice_d.basis.size());
    for (std::size_t r = 0; r < spanning.size(); ++r) {
        if (!s.apply(spanning[r]).is_zero()) contained = false;
        span.set_row(r, poly_to_vec(spanning[r], slice_d));
    }
    rep.dim_span = rank(span);
    rep.ok = contained && rep.dim_span == rep.dim_ker;
    return rep;
}

std::vector<std::size_t> hilbert_series(SeriesKind kind, int n, int D) {
    if (D < 0) throw std::invalid_argument("hilbert_series: negative bound");
    std::vector<std::size_t> dims;
    dims.reserve(static_cast<std::size_t>(D) + 1);
    const RingPtr c = bo_ring(2 * n);
    for (int d = 0; d <= D; ++d) {
        switch (kind) {
            case SeriesKind::RingC:
                dims.push_back(slice_dim(*c, d));
                break;
            case SeriesKind::RingA:
                dims.push_back(a_monomials(n, d).size());
                break;
            case SeriesKind::KernelB:
                dims.push_back(d == 0 ? 1 : slice_dim(*c, d) - rank(matrix_of_s(n, d)));
                break;
        }
    }
    return dims;
}

}  // namespace gocohom
