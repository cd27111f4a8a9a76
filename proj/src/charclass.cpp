#include "gocohom/charclass.hpp"

#include <stdexcept>

namespace gocohom {

unsigned long long binom_exact(unsigned a, unsigned b) {
    if (b > a) return 0;
    if (a > 62) throw std::invalid_argument("binom_exact: argument too large");
    unsigned long long r = 1;
    for (unsigned i = 1; i <= b; ++i) {
        r *= a - b + i;  // divisible at every step
        r /= i;
    }
    return r;
}

int binom_mod2(unsigned a, unsigned b) {
    if (b > a) return 0;
    const int exact = static_cast<int>(binom_exact(a, b) & 1ull);
    // C(a,b) is odd iff adding b and a-b produces no binary carry.
    const int carry_free = ((b & (a - b)) == 0) ? 1 : 0;
    if (exact != carry_free)
        throw std::logic_error("binom_mod2: the two parity routes disagree");
    return exact;
}

RingPtr lambda_ring() { return make_ring({{"L", 2}}); }

TriMatrixPoly matrix_A(int n) {
    if (n < 1) throw std::invalid_argument("matrix_A: n must be positive");
    const RingPtr kl = lambda_ring();
    TriMatrixPoly m{n, {}};
    for (int r = 1; r <= n; ++r) {
        std::vector<Poly2> row;
        for (int k = 1; k <= r; ++k) {
            const int coeff = binom_mod2(static_cast<unsigned>(n - k),
                                         static_cast<unsigned>(2 * (r - k)));
            row.push_back(coeff ? Poly2::variable(kl, 0, 2 * (r - k)) : Poly2::zero(kl));
        }
        m.entry.push_back(std::move(row));
    }
    return m;
}

TriMatrixPoly invert_unitriangular(const TriMatrixPoly& m) {
    const RingPtr kl = m.n > 0 ? m.at(1, 1).ring() : lambda_ring();
    for (int r = 1; r <= m.n; ++r)
        if (!m.at(r, r).is_one())
            throw std::invalid_argument("invert_unitriangular: diagonal entry is not 1");
    TriMatrixPoly inv{m.n, {}};
    for (int r = 1; r <= m.n; ++r)
        inv.entry.emplace_back(static_cast<std::size_t>(r), Poly2::zero(kl));
    for (int r = 1; r <= m.n; ++r) {
        inv.entry[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(r - 1)] =
            Poly2::one(kl);
        for (int k = r - 1; k >= 1; --k) {
            Poly2 acc = Poly2::zero(kl);
            for (int j = k; j <= r - 1; ++j) acc = acc + m.at(r, j) * inv.at(j, k);
            inv.entry[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(k - 1)] = acc;
        }
    }
    return inv;
}

TriMatrixPoly tri_mul(const TriMatrixPoly& a, const TriMatrixPoly& b) {
    if (a.n != b.n) throw std::invalid_argument("tri_mul: size mismatch");
    const RingPtr kl = a.n > 0 ? a.at(1, 1).ring() : lambda_ring();
    TriMatrixPoly out{a.n, {}};
    for (int r = 1; r <= a.n; ++r) {
        std::vector<Poly2> row;
        for (int k = 1; k <= r; ++k) {
            Poly2 acc = Poly2::zero(kl);
            for (int j = k; j <= r; ++j) acc = acc + a.at(r, j) * b.at(j, k);
            row.push_back(std::move(acc));
        }
        out.entry.push_back(std::move(row));
    }
    return out;
}

bool tri_is_identity(const TriMatrixPoly& m) {
    for (int r = 1; r <= m.n; ++r)
        for (int k = 1; k <= r; ++k) {
            const Poly2& e = m.at(r, k);
            if (r == k ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

Poly2 f_poly(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("f_poly: need 1 <= r <= n");
    const RingPtr lb = lambda_b_ring(n);
    const Poly2 lambda = Poly2::variable(lb, 0);
    const TriMatrixPoly binv = invert_unitriangular(matrix_A(n));
    const std::vector<Poly2> to_lb{lambda};  // embeds k[L] into k[L, b]

    Poly2 f = Poly2::zero(lb);
    if (binom_mod2(static_cast<unsigned>(n), static_cast<unsigned>(2 * r - 1)))
        f = f + pow(lambda, static_cast<unsigned>(2 * r - 2));
    for (int k = 1; k <= r - 1; ++k) {
        if (!binom_mod2(static_cast<unsigned>(n - k), static_cast<unsigned>(2 * r - 1 - 2 * k)))
            continue;
        Poly2 inner = Poly2::zero(lb);
        for (int j = 1; j <= k; ++j) {
            Poly2 delta = Poly2::variable(lb, static_cast<std::size_t>(j));
            if (binom_mod2(static_cast<unsigned>(n), static_cast<unsigned>(2 * j)))
                delta = delta + pow(lambda, static_cast<unsigned>(2 * j));
            inner = inner + substitute(binv.at(k, j), to_lb) * delta;
        }
        f = f + pow(lambda, static_cast<unsigned>(2 * r - 2 - 2 * k)) * inner;
    }
    return f;
}

CohomElem chern_image(int n, int i) {
    if (i < 1 || i > 2 * n) throw std::invalid_argument("chern_image: index out of range");
    if (i % 2 == 0) return gen_b(n, 2 * i);
    const int r = (i + 1) / 2;
    const Poly2 f = f_poly(n, r);
    // Evaluate f in the pair model, then assemble a_{2r-1}^2 + L f.
    CohomElem felem = elem_zero(n);
    for (const Monomial& m : f.terms()) {
        CohomElem prod = elem_pow(gen_lambda(n), static_cast<unsigned>(m.exp[0]));
        for (int j = 1; j <= n; ++j)
            if (m.exp[static_cast<std::size_t>(j)] > 0)
                prod = prod * elem_pow(gen_b(n, 4 * j),
                                       static_cast<unsigned>(m.exp[static_cast<std::size_t>(j)]));
        felem = felem + prod;
    }
    return elem_pow(gen_a(n, i), 2) + gen_lambda(n) * felem;
}

RingPtr splitting_ring(int n) {
    if (n < 1) throw std::invalid_argument("splitting_ring: n must be positive");
    std::vector<std::pair<std::string, int>> vars;
    vars.emplace_back("L", 2);
    for (int i = 1; i <= n; ++i) vars.emplace_back("x" + std::to_string(i), 2);
    return make_ring(std::move(vars));
}

SplittingReport splitting_oracle(int n) {
    const RingPtr s = splitting_ring(n);
    const Poly2 lambda = Poly2::variable(s, 0);
    auto x = [&](int i) { return Poly2::variable(s, static_cast<std::size_t>(i)); };

    // c(E) = prod_i (1 + L + (L x_i + x_i^2))
    Poly2 total = Poly2::one(s);
    std::vector<Poly2> roots;  // L x_i + x_i^2
    for (int i = 1; i <= n; ++i) {
        const Poly2 y = lambda * x(i) + pow(x(i), 2);
        roots.push_back(y);
        total = total * (Poly2::one(s) + lambda + y);
    }
    auto cbar = [&](int j) { return graded_part(total, 2 * j); };

    // Elementary symmetric polynomials of the roots.
    std::vector<Poly2> e(static_cast<std::size_t>(n) + 1, Poly2::zero(s));
    e[0] = Poly2::one(s);
    for (int i = 0; i < n; ++i)
        for (int k = std::min(i + 1, n); k >= 1; --k)
            e[static_cast<std::size_t>(k)] =
                e[static_cast<std::size_t>(k)] + e[static_cast<std::size_t>(k - 1)] * roots[static_cast<std::size_t>(i)];

    // b values read off from the even classes.
    std::vector<Poly2> bval{Poly2::zero(s)};  // 1-based
    for (int r = 1; r <= n; ++r) bval.push_back(cbar(2 * r));

    SplittingReport rep{n, {}, true};
    for (int r = 1; r <= n; ++r) {
        SplitCheck check{r, false, false, false};

        std::vector<Poly2> images{lambda};
        for (int j = 1; j <= n; ++j) images.push_back(bval[static_cast<std::size_t>(j)]);
        check.odd_identity_ok = lambda * substitute(f_poly(n, r), images) == cbar(2 * r - 1);

        Poly2 even_rhs = Poly2::zero(s);
        if (binom_mod2(static_cast<unsigned>(n), static_cast<unsigned>(2 * r)))
            even_rhs = even_rhs + pow(lambda, static_cast<unsigned>(2 * r));
        for (int k = 1; k <= r; ++k)
            if (binom_mod2(static_cast<unsigned>(n - k), static_cast<unsigned>(2 * r - 2 * k)))
                even_rhs = even_rhs + pow(lambda, static_cast<unsigned>(2 * r - 2 * k)) *
                                          e[static_cast<std::size_t>(k)];
        check.even_expansion_ok = even_rhs == cbar(2 * r);

        Poly2 odd_rhs = Poly2::zero(s);
        if (binom_mod2(static_cast<unsigned>(n), static_cast<unsigned>(2 * r - 1)))
            odd_rhs = odd_rhs + pow(lambda, static_cast<unsigned>(2 * r - 1));
        for (int k = 1; k <= r - 1; ++k)
            if (binom_mod2(static_cast<unsigned>(n - k), static_cast<unsigned>(2 * r - 1 - 2 * k)))
                odd_rhs = odd_rhs + pow(lambda, static_cast<unsigned>(2 * r - 1 - 2 * k)) *
                                        e[static_cast<std::size_t>(k)];
        check.odd_expansion_ok = odd_rhs == cbar(2 * r - 1);

        rep.ok = rep.ok && check.odd_identity_ok && check.even_expansion_ok &&
                 check.odd_expansion_ok;
        rep.checks.push_back(check);
    }
    return rep;
}

}  // namespace gocohom
