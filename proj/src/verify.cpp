#include "gocohom/verify.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "gocohom/parallel.hpp"
#include "gocohom/serialize.hpp"

namespace gocohom {

std::size_t b_dim_cached(int n, int d, const DiskCache* cache) {
    const CacheKey key{n, d, "bdim", kCacheSchemaVersion};
    if (cache) {
        if (const auto hit = cache->get(key)) return hit->at("dim").get<std::size_t>();
    }
    const std::size_t dim =
        d == 0 ? 1 : slice_dim(*c_ring(n), d) - rank(matrix_of_s(n, d));
    if (cache) cache->put(key, nlohmann::json{{"dim", dim}});
    return dim;
}

std::vector<LabeledElem> basis_cached(int n, int d, const DiskCache* cache) {
    const CacheKey key{n, d, "hbasis", kCacheSchemaVersion};
    if (cache) {
        if (const auto hit = cache->get(key)) return basis_from_json(*hit);
    }
    std::vector<LabeledElem> basis = basis_Hd(n, d);
    if (cache) cache->put(key, basis_to_json(basis));
    return basis;
}

std::vector<std::vector<std::string>> reference_small_table(int n) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"1"});
    rows.push_back({"a1"});
    rows.push_back({"L", "a1^2"});
    rows.push_back(n == 1 ? std::vector<std::string>{"a1^3"}
                          : std::vector<std::string>{"a1^3", "a3"});
    rows.push_back(n == 1 ? std::vector<std::string>{"L^2", "a1^4", "b4"}
                          : std::vector<std::string>{"L^2", "a1^4", "a1*a3", "b4"});
    if (n == 1)
        rows.push_back({"a1^5", "a1*b4"});
    else if (n == 2)
        rows.push_back({"a1^5", "a1^2*a3", "a1*b4", "d{1,2}"});
    else
        rows.push_back({"a1^5", "a1^2*a3", "a1*b4", "a5", "d{1,2}"});
    return rows;
}

namespace {

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t x : v) {
        if (!s.empty()) s += " ";
        s += std::to_string(x);
    }
    return s;
}

Poly2 random_poly(const RingPtr& ring, int max_terms, int max_exp, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::vector<Monomial> terms;
    const int count = nterms(rng);
    for (int t = 0; t < count; ++t) {
        Monomial m{std::vector<int>(ring->nvars(), 0)};
        for (std::size_t i = 0; i < ring->nvars(); ++i) m.exp[i] = expd(rng);
        terms.push_back(std::move(m));
    }
    return Poly2::from_terms(ring, std::move(terms));
}

// Substitution realizing c_T -> s(v_T), u_i -> w_{2i-1}, vsq_i -> w_{2i}^2.
std::vector<Poly2> koszul_to_c_images(const KoszulRingLayout& layout) {
    const RingPtr c = c_ring(layout.n);
    std::vector<Poly2> images;
    for (int i = 1; i <= layout.n; ++i)
        images.push_back(Poly2::variable(c, static_cast<std::size_t>(2 * i - 2)));
    for (int i = 1; i <= layout.n; ++i)
        images.push_back(Poly2::variable(c, static_cast<std::size_t>(2 * i - 1), 2));
    for (const SubsetIndex& t : layout.subsets) images.push_back(s_of_vT(layout.n, t));
    return images;
}

// Substitution killing a and d while fixing L and b.
std::vector<Poly2> rho_images(const CohomRingLayout& layout) {
    const RingPtr lb = lambda_b_ring(layout.n);
    std::vector<Poly2> images;
    images.push_back(Poly2::variable(lb, 0));
    for (int i = 1; i <= layout.n; ++i) images.push_back(Poly2::zero(lb));
    for (int i = 1; i <= layout.n; ++i)
        images.push_back(Poly2::variable(lb, static_cast<std::size_t>(i)));
    for (std::size_t t = 0; t < layout.subsets.size(); ++t)
        images.push_back(Poly2::zero(lb));
    return images;
}

void suite_koszul(const VerifyOptions& opt, std::vector<CheckLine>& out) {
    const int n = opt.n;
    const Derivation s = bo_derivation(2 * n);

    std::size_t checked = 0;
    bool ok = true;
    for (int d = 1; d <= opt.max_degree; ++d)
        for (const Monomial& m : enumerate_monomials(*s.ring(), d)) {
            if (!s.apply(s.apply(Poly2::single(s.ring(), m))).is_zero()) ok = false;
            ++checked;
        }
    out.push_back({"koszul/s_squared_zero", ok,
                   std::to_string(checked) + " monomials up to degree " +
                       std::to_string(opt.max_degree)});

    std::mt19937 rng(20240001u);
    bool leibniz_ok = true;
    const int pairs = 1000;
    for (int t = 0; t < pairs; ++t) {
        const Poly2 p = random_poly(s.ring(), 5, 3, rng);
        const Poly2 q = random_poly(s.ring(), 5, 3, rng);
        if (s.apply(p * q) != s.apply(p) * q + p * s.apply(q)) leibniz_ok = false;
    }
    out.push_back({"koszul/leibniz_random", leibniz_ok, std::to_string(pairs) + " pairs"});

    const auto reports = parallel_map<KerDecompReport>(
        static_cast<std::size_t>(opt.max_degree) + 1, opt.jobs,
        [&](std::size_t d) { return verify_ker_decomposition(n, static_cast<int>(d)); });
    bool decomp_ok = true;
    std::vector<std::size_t> dims;
    for (const KerDecompReport& r : reports) {
        decomp_ok = decomp_ok && r.ok;
        dims.push_back(r.dim_ker);
    }
    out.push_back({"koszul/kernel_decomposition", decomp_ok, "dim B_d: " + join_sizes(dims)});
}

void suite_presentation(const VerifyOptions& opt, std::vector<CheckLine>& out) {
    const int n = opt.n;
    const RelationCounts counts = koszul_relation_counts(n);
    const std::vector<Poly2> relations_n = gens_N(n);
    const std::vector<Poly2> relations_i = gens_I(n);
    const unsigned long long k = (1ull << n) - n - 1;

    const bool counts_ok =
        relations_n.size() ==
            counts.family1 + counts.family2 + counts.family3_unordered &&
        relations_i.size() == static_cast<unsigned long long>(n) + k +
                                  counts.family1 + counts.family2 +
                                  counts.family3_unordered;
    out.push_back({"presentation/relation_counts", counts_ok,
                   std::to_string(relations_n.size()) + " kernel-ring relations, " +
                       std::to_string(relations_i.size()) + " cohomology relations"});

    const KoszulRingLayout layout = koszul_free_layout(n);
    const std::vector<Poly2> images = koszul_to_c_images(layout);
    bool vanish_ok = true;
    for (const Poly2& g : relations_n)
        if (!substitute(g, images).is_zero()) vanish_ok = false;
    out.push_back({"presentation/relations_vanish_in_C", vanish_ok,
                   "images c_T -> s(v_T)"});

    const Presentation pn = koszul_presentation(n);
    const Presentation pi = cohomology_presentation(n);
    struct Row {
        std::size_t qn, qi, dim_b, rhs_i;
    };
    const auto rows = parallel_map<Row>(
        static_cast<std::size_t>(opt.max_degree) + 1, opt.jobs, [&](std::size_t di) {
            const int d = static_cast<int>(di);
            Row row{};
            row.dim_b = b_dim_cached(n, d, opt.cache);
            row.qn = quotient_dim(pn, d);
            row.qi = quotient_dim(pi, d);
            row.rhs_i = lambda_part_dim(n, d) + row.dim_b;
            return row;
        });
    bool kos_ok = true, coh_ok = true;
    std::vector<std::size_t> hdims;
    for (const Row& r : rows) {
        kos_ok = kos_ok && r.qn == r.dim_b;
        coh_ok = coh_ok && r.qi == r.rhs_i;
        hdims.push_back(r.qi);
    }
    out.push_back({"presentation/kernel_ring_dims", kos_ok, "quotient vs kernel oracle"});
    out.push_back({"presentation/cohomology_dims", coh_ok, "dim H^d: " + join_sizes(hdims)});
}

void suite_cohomology(const VerifyOptions& opt, std::vector<CheckLine>& out) {
    const int n = opt.n;
    const CohomRingLayout layout = cohom_free_layout(n);
    const std::vector<Poly2> relations = gens_I(n);

    const std::vector<Poly2> rho = rho_images(layout);
    bool rho_ok = true;
    for (const Poly2& g : relations)
        if (!substitute(g, rho).is_zero()) rho_ok = false;
    out.push_back({"cohomology/rho_well_defined", rho_ok,
                   std::to_string(relations.size()) + " relations killed by a,d -> 0"});

    bool rel_ok = true;
    for (const Poly2& g : relations)
        if (!eval_in_model(n, g).is_zero()) rel_ok = false;
    for (int i = 1; i <= n; ++i)
        if (!(gen_lambda(n) * gen_a(n, 2 * i - 1)).is_zero()) rel_ok = false;
    for (const SubsetIndex& t : layout.subsets)
        if (!(gen_lambda(n) * gen_d(n, t.members)).is_zero()) rel_ok = false;
    out.push_back({"cohomology/relations_zero_in_model", rel_ok,
                   "all relation families evaluate to the zero pair"});

    const auto sizes = parallel_map<std::pair<std::size_t, std::size_t>>(
        static_cast<std::size_t>(opt.max_degree) + 1, opt.jobs, [&](std::size_t di) {
            const int d = static_cast<int>(di);
            const std::size_t rhs = lambda_part_dim(n, d) + b_dim_cached(n, d, opt.cache);
            return std::make_pair(basis_cached(n, d, opt.cache).size(), rhs);
        });
    bool dims_ok = true;
    std::vector<std::size_t> hdims;
    for (const auto& [lhs, rhs] : sizes) {
        dims_ok = dims_ok && lhs == rhs;
        hdims.push_back(lhs);
    }
    out.push_back({"cohomology/basis_sizes", dims_ok, "dim H^d: " + join_sizes(hdims)});

    const RingPtr lb = lambda_b_ring(n);
    const RingPtr c = c_ring(n);
    std::vector<Poly2> lb_to_c;  // L -> 0, b_{4i} -> w_{2i}^2
    lb_to_c.push_back(Poly2::zero(c));
    for (int i = 1; i <= n; ++i)
        lb_to_c.push_back(Poly2::variable(c, static_cast<std::size_t>(2 * i - 1), 2));
    bool indep_ok = true;
    for (int d = 0; d <= opt.max_degree; ++d) {
        const DegreeSlice lb_slice = degree_slice(lb, d);
        const DegreeSlice c_slice = degree_slice(c, d);
        BitMatrix m(lb_slice.basis.size(), lb_slice.basis.size() + c_slice.basis.size());
        for (std::size_t r = 0; r < lb_slice.basis.size(); ++r) {
            // pair of the model element attached to the monomial L^j b^beta
            const Poly2 p = Poly2::single(lb, lb_slice.basis[r]);
            const Poly2 q = substitute(p, lb_to_c);
            const BitVec pv = poly_to_vec(p, lb_slice);
            const BitVec qv = poly_to_vec(q, c_slice);
            for (std::size_t i = 0; i < pv.size(); ++i)
                if (pv.get(i)) m.set(r, i);
            for (std::size_t i = 0; i < qv.size(); ++i)
                if (qv.get(i)) m.set(r, lb_slice.basis.size() + i);
        }
        if (rank(m) != lb_slice.basis.size()) indep_ok = false;
    }
    out.push_back({"cohomology/lambda_b_independent", indep_ok,
                   "L^j b^beta monomials independent as pairs"});

    if (n <= 3) {
        const SmallTable table = table_small(n);
        const auto expected = reference_small_table(n);
        bool table_ok = table.rows.size() == expected.size();
        for (std::size_t d = 0; table_ok && d < expected.size(); ++d) {
            if (table.rows[d].size() != expected[d].size()) {
                table_ok = false;
                break;
            }
            for (std::size_t i = 0; i < expected[d].size(); ++i)
                if (table.rows[d][i].label != expected[d][i]) table_ok = false;
        }
        out.push_back({"cohomology/small_table", table_ok, "H^0..H^5 labels and order"});
    }
}

void suite_chern(const VerifyOptions& opt, std::vector<CheckLine>& out) {
    const int n = opt.n;

    const TriMatrixPoly a = matrix_A(n);
    bool inv_ok = tri_is_identity(tri_mul(a, invert_unitriangular(a)));
    for (int r = 1; inv_ok && r <= n; ++r)
        for (int k = 1; k <= r; ++k)
            for (const Monomial& m : a.at(r, k).terms())
                if (m.exp[0] & 1) inv_ok = false;
    out.push_back({"chern/binomial_matrix_inverse", inv_ok, "A A^{-1} = I over k[L^2]"});

    bool f_ok = true;
    for (int r = 1; r <= n; ++r) {
        const Poly2 f = f_poly(n, r);
        for (const Monomial& m : f.terms()) {
            int bdeg = 0;
            for (int j = 1; j <= n; ++j) bdeg += m.exp[static_cast<std::size_t>(j)];
            if (bdeg > 1) f_ok = false;
        }
        if (r >= 2) {
            // coefficient of b_{4(r-1)} must be the constant (n-r+1) mod 2
            Poly2 coeff = Poly2::zero(f.ring());
            for (const Monomial& m : f.terms())
                if (m.exp[static_cast<std::size_t>(r - 1)] == 1) {
                    Monomial rest = m;
                    rest.exp[static_cast<std::size_t>(r - 1)] = 0;
                    coeff = coeff + Poly2::single(f.ring(), rest);
                }
            const Poly2 expected = ((n - r + 1) & 1) ? Poly2::one(f.ring())
                                                     : Poly2::zero(f.ring());
            if (coeff != expected) f_ok = false;
        }
    }
    out.push_back({"chern/f_poly_shape", f_ok,
                   "b-linear with leading coefficient (n-r+1) mod 2"});

    bool closed_ok = true;
    {
        CohomElem c1 = elem_pow(gen_a(n, 1), 2);
        if (n & 1) c1 = c1 + gen_lambda(n);
        closed_ok = chern_image(n, 1) == c1;
        if (n >= 2) {
            const unsigned long long cube =
                static_cast<unsigned long long>(n) * (n - 1) * (2 * n - 1) / 6;
            CohomElem c3 = elem_pow(gen_a(n, 3), 2);
            if (cube & 1ull) c3 = c3 + elem_pow(gen_lambda(n), 3);
            if ((n - 1) & 1) c3 = c3 + gen_lambda(n) * gen_b(n, 4);
            closed_ok = closed_ok && chern_image(n, 3) == c3;
        }
    }
    out.push_back({"chern/closed_forms", closed_ok, "cbar_1 and cbar_3"});

    bool restrict_ok = true, member_ok = true;
    const RingPtr c = c_ring(n);
    for (int i = 1; i <= 2 * n; ++i) {
        const CohomElem x = chern_image(n, i);
        if (x.q() != Poly2::variable(c, static_cast<std::size_t>(i - 1), 2)) restrict_ok = false;
        if (!membership_check(n, x.p(), x.q())) member_ok = false;
    }
    out.push_back({"chern/restriction_squares", restrict_ok, "q-component is w_i^2"});
    out.push_back({"chern/membership", member_ok, "all images pass the pair check"});

    const SplittingReport rep = splitting_oracle(n);
    out.push_back({"chern/splitting_oracle", rep.ok,
                   "identities in k[L, x] for r = 1.." + std::to_string(n)});
}

}  // namespace

std::vector<CheckLine> run_suite(const VerifyOptions& opt) {
    std::vector<CheckLine> out;
    const bool all = opt.suite == Suite::All;
    if (all || opt.suite == Suite::Koszul) suite_koszul(opt, out);
    if (all || opt.suite == Suite::Presentation) suite_presentation(opt, out);
    if (all || opt.suite == Suite::Cohomology) suite_cohomology(opt, out);
    if (all || opt.suite == Suite::Chern) suite_chern(opt, out);
    return out;
}

bool print_report(const std::vector<CheckLine>& lines, std::ostream& out) {
    bool ok = true;
    for (const CheckLine& line : lines) {
        out << (line.ok ? "[PASS] " : "[FAIL] ") << line.name;
        if (!line.detail.empty()) out << ": " << line.detail;
        out << "\n";
        ok = ok && line.ok;
    }
    out << (ok ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return ok;
}

}  // namespace gocohom
