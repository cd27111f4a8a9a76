#include "gocohom/cohomring.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace gocohom {

RingPtr c_ring(int n) { return bo_ring(2 * n); }

namespace {

// Images realizing the compatibility substitutions.
std::vector<Poly2> p_restriction_images(int n, const RingPtr& lb, const RingPtr& c) {
    std::vector<Poly2> images;
    images.push_back(Poly2::zero(c));  // L -> 0
    for (int i = 1; i <= n; ++i)
        images.push_back(Poly2::variable(c, static_cast<std::size_t>(2 * i - 1), 2));
    (void)lb;
    return images;
}

std::vector<Poly2> q_restriction_images(int n, const RingPtr& c) {
    std::vector<Poly2> images;
    for (int k = 1; k <= 2 * n; ++k) {
        if (k & 1)
            images.push_back(Poly2::zero(c));  // odd w -> 0
        else
            images.push_back(Poly2::variable(c, static_cast<std::size_t>(k - 1)));
    }
    return images;
}

bool label_poly_greater(const Poly2& a, const Poly2& b) {
    const GradedRing& r = *a.ring();
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        const int c = mon_cmp(r, ta[i], tb[i]);
        if (c != 0) return c > 0;
    }
    return ta.size() > tb.size();
}

// One candidate generator of B_d: an A-monomial, or an A-monomial times
// s(v_T), carried together with its name in the L/a/b/d alphabet.
struct SpanItem {
    Poly2 poly;        // in C
    Monomial r_label;  // exponents over the free ring R
};

Monomial a_monomial_label(const CohomRingLayout& layout, const Monomial& m) {
    Monomial lbl{std::vector<int>(layout.ring->nvars(), 0)};
    for (int i = 1; i <= layout.n; ++i) {
        lbl.exp[layout.idx_a(i)] = m.exp[static_cast<std::size_t>(2 * i - 2)];
        lbl.exp[layout.idx_b(i)] = m.exp[static_cast<std::size_t>(2 * i - 1)] / 2;
    }
    return lbl;
}

std::vector<SpanItem> b_spanning_set(int n, int d, const CohomRingLayout& layout) {
    const RingPtr c = c_ring(n);
    std::vector<SpanItem> items;
    for (const Monomial& m : a_monomials(n, d))
        items.push_back({Poly2::single(c, m), a_monomial_label(layout, m)});
    for (std::size_t tr = 0; tr < layout.subsets.size(); ++tr) {
        const SubsetIndex& t = layout.subsets[tr];
        const int dt = 2 * weight(t) - 1;
        if (dt > d) continue;
        const Poly2 sv = s_of_vT(n, t);
        for (const Monomial& m : a_monomials(n, d - dt)) {
            Monomial lbl = a_monomial_label(layout, m);
            lbl.exp[layout.idx_d(tr)] = 1;
            items.push_back({mul_monomial(sv, m), std::move(lbl)});
        }
    }
    return items;
}

}  // namespace

CohomElem::CohomElem(int n, Poly2 p, Poly2 q)
    : n_(n), p_(std::move(p)), q_(std::move(q)) {
    if (n < 1) throw std::invalid_argument("cohomology element: n must be positive");
    if (!same_ring(p_.ring(), lambda_b_ring(n)))
        throw std::invalid_argument("cohomology element: p not in k[L, b]");
    if (!same_ring(q_.ring(), c_ring(n)))
        throw std::invalid_argument("cohomology element: q not in k[w]");
}

CohomElem elem_zero(int n) {
    return CohomElem(n, Poly2::zero(lambda_b_ring(n)), Poly2::zero(c_ring(n)));
}

CohomElem elem_one(int n) {
    return CohomElem(n, Poly2::one(lambda_b_ring(n)), Poly2::one(c_ring(n)));
}

CohomElem gen_lambda(int n) {
    return CohomElem(n, Poly2::variable(lambda_b_ring(n), 0), Poly2::zero(c_ring(n)));
}

CohomElem gen_a(int n, int sub) {
    if (sub < 1 || sub > 2 * n - 1 || (sub & 1) == 0)
        throw std::invalid_argument("a-generator subscript must be odd and at most 2n-1");
    return CohomElem(n, Poly2::zero(lambda_b_ring(n)),
                     Poly2::variable(c_ring(n), static_cast<std::size_t>(sub - 1)));
}

CohomElem gen_b(int n, int sub) {
    if (sub < 4 || sub > 4 * n || sub % 4 != 0)
        throw std::invalid_argument("b-generator subscript must be a multiple of 4, at most 4n");
    const int i = sub / 4;
    return CohomElem(n, Poly2::variable(lambda_b_ring(n), static_cast<std::size_t>(i)),
                     Poly2::variable(c_ring(n), static_cast<std::size_t>(2 * i - 1), 2));
}

CohomElem gen_d(int n, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    const SubsetIndex t(n, std::move(subset));
    if (t.members.size() < 2)
        throw std::invalid_argument("d-generator needs a subset of size at least 2");
    return CohomElem(n, Poly2::zero(lambda_b_ring(n)), s_of_vT(n, t));
}

CohomElem generator(int n, const GenName& g) {
    switch (g.kind) {
        case GenName::Kind::Lambda: return gen_lambda(n);
        case GenName::Kind::A: return gen_a(n, g.sub);
        case GenName::Kind::B: return gen_b(n, g.sub);
        case GenName::Kind::D: return gen_d(n, g.subset);
    }
    throw std::logic_error("unknown generator kind");
}

static void require_same_n(const CohomElem& x, const CohomElem& y) {
    if (x.n() != y.n())
        throw std::invalid_argument("cohomology elements built for different n");
}

CohomElem operator+(const CohomElem& x, const CohomElem& y) {
    require_same_n(x, y);
    return CohomElem(x.n(), x.p() + y.p(), x.q() + y.q());
}

CohomElem operator*(const CohomElem& x, const CohomElem& y) {
    require_same_n(x, y);
    return CohomElem(x.n(), x.p() * y.p(), x.q() * y.q());
}

CohomElem elem_pow(const CohomElem& x, unsigned e) {
    CohomElem result = elem_one(x.n());
    CohomElem base = x;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

bool membership_check(int n, const Poly2& p, const Poly2& q) {
    const RingPtr c = c_ring(n);
    if (!same_ring(p.ring(), lambda_b_ring(n)) || !same_ring(q.ring(), c)) return false;
    if (!bo_derivation(2 * n).apply(q).is_zero()) return false;
    const Poly2 lhs = substitute(p, p_restriction_images(n, p.ring(), c));
    const Poly2 rhs = substitute(q, q_restriction_images(n, c));
    return lhs == rhs;
}

CohomElem lift_from_B(int n, const Poly2& q) {
    const RingPtr c = c_ring(n);
    if (!same_ring(q.ring(), c))
        throw std::invalid_argument("lift_from_B: element not in k[w]");
    if (!bo_derivation(2 * n).apply(q).is_zero())
        throw std::invalid_argument("lift_from_B: element not annihilated by s");
    const Poly2 sigma_q = substitute(q, q_restriction_images(n, c));
    const RingPtr lb = lambda_b_ring(n);
    std::vector<Monomial> terms;
    for (const Monomial& m : sigma_q.terms()) {
        Monomial out{std::vector<int>(lb->nvars(), 0)};
        for (int i = 1; i <= n; ++i) {
            const int odd = m.exp[static_cast<std::size_t>(2 * i - 2)];
            const int even = m.exp[static_cast<std::size_t>(2 * i - 1)];
            if (odd != 0 || (even & 1))
                throw std::logic_error("lift_from_B: restriction not a polynomial in squares");
            out.exp[static_cast<std::size_t>(i)] = even / 2;
        }
        terms.push_back(std::move(out));
    }
    return CohomElem(n, Poly2::from_terms(lb, std::move(terms)), q);
}

std::vector<LabeledElem> basis_Hd(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("basis_Hd: bad parameters");
    const CohomRingLayout layout = cohom_free_layout(n);
    const RingPtr lb = lambda_b_ring(n);
    const RingPtr c = c_ring(n);

    std::vector<std::tuple<Poly2, std::string, CohomElem>> entries;

    for (const Monomial& m : enumerate_monomials(*lb, d)) {
        if (m.exp[0] < 1) continue;  // want L^j with j >= 1
        Monomial lbl{std::vector<int>(layout.ring->nvars(), 0)};
        lbl.exp[layout.idx_lambda()] = m.exp[0];
        for (int i = 1; i <= n; ++i)
            lbl.exp[layout.idx_b(i)] = m.exp[static_cast<std::size_t>(i)];
        Poly2 label_poly = Poly2::single(layout.ring, std::move(lbl));
        std::string label = to_text(label_poly);
        entries.emplace_back(std::move(label_poly), std::move(label),
                             CohomElem(n, Poly2::single(lb, m), Poly2::zero(c)));
    }

    const KernelBasis kb = kernel_ring_basis(n, d);
    const DegreeSlice slice = degree_slice(c, d);
    const std::vector<SpanItem> items = b_spanning_set(n, d, layout);
    BitMatrix span(items.size(), slice.basis.size());
    for (std::size_t r = 0; r < items.size(); ++r)
        span.set_row(r, poly_to_vec(items[r].poly, slice));

    for (const Poly2& q : kb.elements) {
        const auto sol = solve_membership(span, poly_to_vec(q, slice));
        if (!sol)
            throw std::logic_error("basis_Hd: kernel element outside the A-module span");
        std::vector<Monomial> lbl_terms;
        for (std::size_t i = 0; i < sol->size(); ++i)
            if (sol->get(i)) lbl_terms.push_back(items[i].r_label);
        Poly2 label_poly = Poly2::from_terms(layout.ring, std::move(lbl_terms));
        std::string label = to_text(label_poly);
        entries.emplace_back(std::move(label_poly), std::move(label), lift_from_B(n, q));
    }

    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return label_poly_greater(std::get<0>(a), std::get<0>(b));
    });

    std::vector<LabeledElem> out;
    out.reserve(entries.size());
    for (auto& [poly, label, elem] : entries) out.push_back({std::move(label), std::move(elem)});
    return out;
}

BitVec coords(const CohomElem& x, int d) { return coords(x, d, basis_Hd(x.n(), d)); }

BitVec coords(const CohomElem& x, int d, const std::vector<LabeledElem>& basis) {
    const int n = x.n();
    if (graded_part(x.p(), d) != x.p() || graded_part(x.q(), d) != x.q())
        throw std::invalid_argument("coords: element not homogeneous of the given degree");
    const DegreeSlice lb_slice = degree_slice(lambda_b_ring(n), d);
    const DegreeSlice c_slice = degree_slice(c_ring(n), d);
    const std::size_t cols = lb_slice.basis.size() + c_slice.basis.size();

    auto to_row = [&](const CohomElem& e) {
        BitVec row(cols);
        const BitVec pv = poly_to_vec(e.p(), lb_slice);
        const BitVec qv = poly_to_vec(e.q(), c_slice);
        for (std::size_t i = 0; i < pv.size(); ++i)
            if (pv.get(i)) row.set(i);
        for (std::size_t i = 0; i < qv.size(); ++i)
            if (qv.get(i)) row.set(lb_slice.basis.size() + i);
        return row;
    };

    BitMatrix m(basis.size(), cols);
    for (std::size_t r = 0; r < basis.size(); ++r) m.set_row(r, to_row(basis[r].elem));
    const auto sol = solve_membership(m, to_row(x));
    if (!sol) throw std::logic_error("coords: element outside the basis span");

    CohomElem rebuilt = elem_zero(n);
    for (std::size_t i = 0; i < sol->size(); ++i)
        if (sol->get(i)) rebuilt = rebuilt + basis[i].elem;
    if (rebuilt != x) throw std::logic_error("coords: reconstruction mismatch");
    return *sol;
}

SmallTable table_small(int n) {
    SmallTable table{n, {}};
    for (int d = 0; d <= 5; ++d) table.rows.push_back(basis_Hd(n, d));
    return table;
}

std::vector<std::size_t> poincare_odd_case(int m, int D) {
    if (m < 0 || D < 0) throw std::invalid_argument("poincare_odd_case: bad parameters");
    std::vector<std::pair<std::string, int>> vars;
    vars.emplace_back("L", 2);
    for (int i = 2; i <= 2 * m + 1; ++i) vars.emplace_back("w" + std::to_string(i), i);
    const RingPtr ring = make_ring(std::move(vars));
    std::vector<std::size_t> dims;
    for (int d = 0; d <= D; ++d) dims.push_back(slice_dim(*ring, d));
    return dims;
}

std::vector<std::size_t> h_series(int n, int D) {
    const std::vector<std::size_t> b = hilbert_series(SeriesKind::KernelB, n, D);
    std::vector<std::size_t> dims;
    dims.reserve(b.size());
    for (int d = 0; d <= D; ++d)
        dims.push_back(lambda_part_dim(n, d) + b[static_cast<std::size_t>(d)]);
    return dims;
}

CohomElem eval_in_model(int n, const Poly2& rel_in_r) {
    const CohomRingLayout layout = cohom_free_layout(n);
    if (!same_ring(rel_in_r.ring(), layout.ring))
        throw std::invalid_argument("eval_in_model: polynomial not over the free ring R");
    std::vector<CohomElem> images;
    images.reserve(layout.ring->nvars());
    images.push_back(gen_lambda(n));
    for (int i = 1; i <= n; ++i) images.push_back(gen_a(n, 2 * i - 1));
    for (int i = 1; i <= n; ++i) images.push_back(gen_b(n, 4 * i));
    for (const SubsetIndex& t : layout.subsets) images.push_back(gen_d(n, t.members));

    CohomElem acc = elem_zero(n);
    for (const Monomial& m : rel_in_r.terms()) {
        CohomElem prod = elem_one(n);
        for (std::size_t i = 0; i < m.exp.size(); ++i)
            if (m.exp[i] > 0)
                prod = prod * elem_pow(images[i], static_cast<unsigned>(m.exp[i]));
        acc = acc + prod;
    }
    return acc;
}

std::string element_text(const CohomElem& x) {
    if (x.is_zero()) return "0";
    std::vector<int> degrees;
    for (const Monomial& m : x.p().terms()) degrees.push_back(mon_degree(*x.p().ring(), m));
    for (const Monomial& m : x.q().terms()) degrees.push_back(mon_degree(*x.q().ring(), m));
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    std::string s;
    for (int d : degrees) {
        const CohomElem part(x.n(), graded_part(x.p(), d), graded_part(x.q(), d));
        if (part.is_zero()) continue;
        const auto basis = basis_Hd(x.n(), d);
        const BitVec v = coords(part, d, basis);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v.get(i)) continue;
            if (!s.empty()) s += " + ";
            s += basis[i].label;
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace gocohom
