#include "gocohom/presentation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gocohom/parallel.hpp"

namespace gocohom {

namespace {

std::string subset_suffix(const std::vector<int>& members) {
    std::string s = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(members[i]);
    }
    return s + "}";
}

std::vector<int> set_minus(const std::vector<int>& a, int x) {
    std::vector<int> out;
    out.reserve(a.size());
    for (int v : a)
        if (v != x) out.push_back(v);
    return out;
}

std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> sym_diff(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

std::size_t rank_in(const std::vector<SubsetIndex>& subsets,
                    const std::vector<int>& members) {
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (subsets[i].members == members) return i;
    throw std::logic_error("subset not present in layout");
}

// Shared shape of the Koszul-style relation families. x_i and y_i are the
// odd and even generators, z maps a subset to its class variable with the
// conventions z_{i} = x_i and z_empty = 0.
struct Alphabet {
    RingPtr ring;
    std::function<Poly2(int)> x;
    std::function<Poly2(int)> y;
    std::function<Poly2(const std::vector<int>&)> z;
};

void append_koszul_families(const Alphabet& a, int n,
                            const std::vector<SubsetIndex>& subsets,
                            std::vector<Poly2>& out) {
    // sum_{i in T} x_i z_{T - {i}} for |T| >= 3
    for (const SubsetIndex& t : subsets) {
        if (t.members.size() < 3) continue;
        Poly2 rel = Poly2::zero(a.ring);
        for (int i : t.members) rel = rel + a.x(i) * a.z(set_minus(t.members, i));
        out.push_back(std::move(rel));
    }
    // z_{i,j}^2 + x_i^2 y_j + x_j^2 y_i
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const Poly2 zij = a.z(std::vector<int>{i, j});
            out.push_back(zij * zij + pow(a.x(i), 2) * a.y(j) + pow(a.x(j), 2) * a.y(i));
        }
    // z_T z_U + sum_{p in T} x_p (prod_{q in T cap U - {p}} y_q) z_{(T-{p}) delta U},
    // over unordered pairs; T = U only enters for |T| >= 3.
    for (std::size_t ti = 0; ti < subsets.size(); ++ti)
        for (std::size_t tj = ti; tj < subsets.size(); ++tj) {
            const auto& t = subsets[ti].members;
            const auto& u = subsets[tj].members;
            if (ti == tj && t.size() == 2) continue;
            Poly2 rel = a.z(t) * a.z(u);
            const std::vector<int> cap = set_intersect(t, u);
            for (int p : t) {
                Poly2 term = a.x(p);
                for (int q : cap)
                    if (q != p) term = term * a.y(q);
                term = term * a.z(sym_diff(set_minus(t, p), u));
                rel = rel + term;
            }
            out.push_back(std::move(rel));
        }
}

}  // namespace

std::size_t KoszulRingLayout::rank_of(const std::vector<int>& members) const {
    return rank_in(subsets, members);
}

std::size_t CohomRingLayout::rank_of(const std::vector<int>& members) const {
    return rank_in(subsets, members);
}

KoszulRingLayout koszul_free_layout(int n) {
    if (n < 1) throw std::invalid_argument("koszul_free_layout: n must be positive");
    KoszulRingLayout layout;
    layout.n = n;
    layout.subsets = subsets_with_min_size(n, 2);
    std::vector<std::pair<std::string, int>> vars;
    for (int i = 1; i <= n; ++i) vars.emplace_back("u" + std::to_string(i), 2 * i - 1);
    for (int i = 1; i <= n; ++i) vars.emplace_back("vsq" + std::to_string(i), 4 * i);
    for (const SubsetIndex& t : layout.subsets)
        vars.emplace_back("c" + subset_suffix(t.members), 2 * weight(t) - 1);
    layout.ring = make_ring(std::move(vars));
    return layout;
}

RingPtr koszul_free_ring(int n) { return koszul_free_layout(n).ring; }

CohomRingLayout cohom_free_layout(int n) {
    if (n < 1) throw std::invalid_argument("cohom_free_layout: n must be positive");
    CohomRingLayout layout;
    layout.n = n;
    layout.subsets = subsets_with_min_size(n, 2);
    std::vector<std::pair<std::string, int>> vars;
    vars.emplace_back("L", 2);
    for (int i = 1; i <= n; ++i) vars.emplace_back("a" + std::to_string(2 * i - 1), 2 * i - 1);
    for (int i = 1; i <= n; ++i) vars.emplace_back("b" + std::to_string(4 * i), 4 * i);
    for (const SubsetIndex& t : layout.subsets)
        vars.emplace_back("d" + subset_suffix(t.members), 2 * weight(t) - 1);
    layout.ring = make_ring(std::move(vars));
    return layout;
}

RingPtr cohom_free_ring(int n) { return cohom_free_layout(n).ring; }

RingPtr lambda_b_ring(int n) {
    if (n < 1) throw std::invalid_argument("lambda_b_ring: n must be positive");
    std::vector<std::pair<std::string, int>> vars;
    vars.emplace_back("L", 2);
    for (int i = 1; i <= n; ++i) vars.emplace_back("b" + std::to_string(4 * i), 4 * i);
    return make_ring(std::move(vars));
}

std::vector<Poly2> gens_N(int n) {
    const KoszulRingLayout layout = koszul_free_layout(n);
    Alphabet a;
    a.ring = layout.ring;
    a.x = [&](int i) { return Poly2::variable(layout.ring, layout.idx_u(i)); };
    a.y = [&](int i) { return Poly2::variable(layout.ring, layout.idx_vsq(i)); };
    a.z = [&](const std::vector<int>& members) {
        if (members.empty()) return Poly2::zero(layout.ring);
        if (members.size() == 1)
            return Poly2::variable(layout.ring, layout.idx_u(members[0]));
        return Poly2::variable(layout.ring, layout.idx_c(layout.rank_of(members)));
    };
    std::vector<Poly2> out;
    append_koszul_families(a, n, layout.subsets, out);
    return out;
}

std::vector<Poly2> gens_I(int n) {
    const CohomRingLayout layout = cohom_free_layout(n);
    const Poly2 lambda = Poly2::variable(layout.ring, layout.idx_lambda());
    Alphabet a;
    a.ring = layout.ring;
    a.x = [&](int i) { return Poly2::variable(layout.ring, layout.idx_a(i)); };
    a.y = [&](int i) { return Poly2::variable(layout.ring, layout.idx_b(i)); };
    a.z = [&](const std::vector<int>& members) {
        if (members.empty()) return Poly2::zero(layout.ring);
        if (members.size() == 1)
            return Poly2::variable(layout.ring, layout.idx_a(members[0]));
        return Poly2::variable(layout.ring, layout.idx_d(layout.rank_of(members)));
    };
    std::vector<Poly2> out;
    for (int i = 1; i <= n; ++i) out.push_back(lambda * a.x(i));
    for (const SubsetIndex& t : layout.subsets) out.push_back(lambda * a.z(t.members));
    append_koszul_families(a, n, layout.subsets, out);
    return out;
}

Presentation koszul_presentation(int n) {
    return Presentation{koszul_free_ring(n), gens_N(n)};
}

Presentation cohomology_presentation(int n) {
    return Presentation{cohom_free_ring(n), gens_I(n)};
}

RelationCounts koszul_relation_counts(int n) {
    if (n < 1 || n > 62) throw std::invalid_argument("koszul_relation_counts: n out of range");
    const unsigned long long pairs =
        static_cast<unsigned long long>(n) * (n - 1) / 2;
    const unsigned long long k = (1ull << n) - n - 1;  // subsets of size >= 2
    RelationCounts counts;
    counts.family1 = (1ull << n) - pairs - n - 1;
    counts.family2 = pairs;
    counts.family3_unordered = k * (k + 1) / 2 - pairs;
    counts.family3_ordered = k * k - pairs;
    return counts;
}

std::size_t quotient_dim(const Presentation& p, int d) {
    if (d < 0) throw std::invalid_argument("quotient_dim: negative degree");
    const DegreeSlice slice = degree_slice(p.ring, d);
    std::vector<BitVec> rows;
    for (const Poly2& g : p.relations) {
        if (g.is_zero()) continue;
        const auto e = g.homogeneous_degree();
        if (!e) throw std::logic_error("quotient_dim: inhomogeneous relation");
        if (*e > d) continue;
        for (const Monomial& m : enumerate_monomials(*p.ring, d - *e))
            rows.push_back(poly_to_vec(mul_monomial(g, m), slice));
    }
    BitMatrix span(rows.size(), slice.basis.size());
    for (std::size_t r = 0; r < rows.size(); ++r) span.set_row(r, rows[r]);
    return slice.basis.size() - rank(span);
}

std::size_t lambda_part_dim(int n, int d) {
    if (d < 2) return 0;
    return slice_dim(*lambda_b_ring(n), d - 2);
}

PresentationReport verify_presentations(int n, int D, int jobs) {
    if (n < 1 || D < 0) throw std::invalid_argument("verify_presentations: bad parameters");
    const Presentation pn = koszul_presentation(n);
    const Presentation pi = cohomology_presentation(n);
    const RingPtr c = bo_ring(2 * n);

    auto per_degree = parallel_map<std::pair<DimRecord, DimRecord>>(
        static_cast<std::size_t>(D) + 1, jobs, [&](std::size_t di) {
            const int d = static_cast<int>(di);
            const std::size_t dim_b =
                d == 0 ? 1 : slice_dim(*c, d) - rank(matrix_of_s(n, d));
            DimRecord rn{d, quotient_dim(pn, d), dim_b, false};
            rn.ok = rn.dim_lhs == rn.dim_rhs;
            DimRecord ri{d, quotient_dim(pi, d), lambda_part_dim(n, d) + dim_b, false};
            ri.ok = ri.dim_lhs == ri.dim_rhs;
            return std::make_pair(rn, ri);
        });

    PresentationReport rep{n, D, {}, {}, true};
    for (auto& [rn, ri] : per_degree) {
        rep.all_ok = rep.all_ok && rn.ok && ri.ok;
        rep.koszul.push_back(rn);
        rep.cohomology.push_back(ri);
    }
    return rep;
}

}  // namespace gocohom
