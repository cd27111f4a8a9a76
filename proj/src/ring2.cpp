#include "gocohom/ring2.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gocohom {

GradedRing::GradedRing(std::vector<std::pair<std::string, int>> vars)
    : vars_(std::move(vars)) {
    std::set<std::string> seen;
    for (const auto& [name, deg] : vars_) {
        if (name.empty())
            throw std::invalid_argument("ring variable with empty name");
        if (deg < 1)
            throw std::invalid_argument("ring variable '" + name + "' has degree < 1");
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate ring variable '" + name + "'");
    }
}

std::optional<std::size_t> GradedRing::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].first == name) return i;
    return std::nullopt;
}

RingPtr make_ring(std::vector<std::pair<std::string, int>> vars) {
    return std::make_shared<const GradedRing>(std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

static void require_same_ring(const Poly2& a, const Poly2& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw std::invalid_argument("ring mismatch between polynomial operands");
}

int mon_degree(const GradedRing& ring, const Monomial& m) {
    int d = 0;
    for (std::size_t i = 0; i < m.exp.size(); ++i) d += m.exp[i] * ring.degree(i);
    return d;
}

int mon_cmp(const GradedRing& ring, const Monomial& a, const Monomial& b) {
    const int da = mon_degree(ring, a), db = mon_degree(ring, b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
    return 0;
}

Monomial mon_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += b.exp[i];
    return r;
}

std::string mon_text(const GradedRing& ring, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.name(i);
        if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
    }
    return s.empty() ? "1" : s;
}

Poly2 Poly2::zero(RingPtr ring) { return Poly2(std::move(ring), {}); }

Poly2 Poly2::one(RingPtr ring) {
    Monomial unit{std::vector<int>(ring->nvars(), 0)};
    return Poly2(std::move(ring), {std::move(unit)});
}

Poly2 Poly2::variable(RingPtr ring, std::size_t index, int exp) {
    if (index >= ring->nvars())
        throw std::invalid_argument("variable index out of range");
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp == 0) return one(std::move(ring));
    Monomial m{std::vector<int>(ring->nvars(), 0)};
    m.exp[index] = exp;
    return Poly2(std::move(ring), {std::move(m)});
}

Poly2 Poly2::single(RingPtr ring, Monomial m) {
    if (m.exp.size() != ring->nvars())
        throw std::invalid_argument("monomial width does not match ring");
    return Poly2(std::move(ring), {std::move(m)});
}

Poly2 Poly2::from_terms(RingPtr ring, std::vector<Monomial> terms) {
    for (const Monomial& m : terms)
        if (m.exp.size() != ring->nvars())
            throw std::invalid_argument("monomial width does not match ring");
    const GradedRing& R = *ring;
    std::sort(terms.begin(), terms.end(),
              [&R](const Monomial& a, const Monomial& b) { return mon_cmp(R, a, b) > 0; });
    std::vector<Monomial> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) & 1) out.push_back(terms[i]);
        i = j;
    }
    return Poly2(std::move(ring), std::move(out));
}

bool Poly2::is_one() const {
    return terms_.size() == 1 &&
           std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(),
                       [](int e) { return e == 0; });
}

std::optional<int> Poly2::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = mon_degree(*ring_, terms_.front());
    for (const Monomial& m : terms_)
        if (mon_degree(*ring_, m) != d) return std::nullopt;
    return d;
}

bool Poly2::is_homogeneous() const {
    return terms_.empty() || homogeneous_degree().has_value();
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
    require_same_ring(a, b);
    const GradedRing& R = *a.ring();
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::vector<Monomial> out;
    out.reserve(ta.size() + tb.size());
    std::size_t i = 0, j = 0;
    while (i < ta.size() && j < tb.size()) {
        const int c = mon_cmp(R, ta[i], tb[j]);
        if (c > 0)
            out.push_back(ta[i++]);
        else if (c < 0)
            out.push_back(tb[j++]);
        else {
            ++i;  // equal terms cancel over GF(2)
            ++j;
        }
    }
    out.insert(out.end(), ta.begin() + i, ta.end());
    out.insert(out.end(), tb.begin() + j, tb.end());
    return Poly2::from_terms(a.ring(), std::move(out));
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    require_same_ring(a, b);
    std::vector<Monomial> out;
    out.reserve(a.size() * b.size());
    for (const Monomial& ma : a.terms())
        for (const Monomial& mb : b.terms()) out.push_back(mon_mul(ma, mb));
    return Poly2::from_terms(a.ring(), std::move(out));
}

bool operator==(const Poly2& a, const Poly2& b) {
    return same_ring(a.ring(), b.ring()) && a.terms() == b.terms();
}

Poly2 pow(const Poly2& p, unsigned e) {
    Poly2 result = Poly2::one(p.ring());
    Poly2 base = p;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

Poly2 mul_monomial(const Poly2& p, const Monomial& m) {
    // Adding a fixed exponent vector preserves the term order.
    std::vector<Monomial> out;
    out.reserve(p.size());
    for (const Monomial& t : p.terms()) out.push_back(mon_mul(t, m));
    return Poly2::from_terms(p.ring(), std::move(out));
}

Poly2 graded_part(const Poly2& p, int d) {
    std::vector<Monomial> out;
    for (const Monomial& t : p.terms())
        if (mon_degree(*p.ring(), t) == d) out.push_back(t);
    return Poly2::from_terms(p.ring(), std::move(out));
}

Poly2 substitute(const Poly2& p, const std::vector<Poly2>& images) {
    if (images.size() != p.ring()->nvars())
        throw std::invalid_argument("substitute: missing variable image");
    const RingPtr target = images.front().ring();
    for (const Poly2& im : images)
        if (!same_ring(im.ring(), target))
            throw std::invalid_argument("substitute: images live in different rings");
    Poly2 acc = Poly2::zero(target);
    for (const Monomial& t : p.terms()) {
        Poly2 prod = Poly2::one(target);
        for (std::size_t i = 0; i < t.exp.size(); ++i)
            if (t.exp[i] > 0) prod = prod * pow(images[i], static_cast<unsigned>(t.exp[i]));
        acc = acc + prod;
    }
    return acc;
}

static void enumerate_rec(const GradedRing& ring, std::size_t i, int remaining,
                          Monomial& cur, std::vector<Monomial>& out) {
    if (i == ring.nvars()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    const int dg = ring.degree(i);
    for (int e = remaining / dg; e >= 0; --e) {
        cur.exp[i] = e;
        enumerate_rec(ring, i + 1, remaining - e * dg, cur, out);
    }
    cur.exp[i] = 0;
}

std::vector<Monomial> enumerate_monomials(const GradedRing& ring, int d) {
    if (d < 0) throw std::invalid_argument("enumerate_monomials: negative degree");
    std::vector<Monomial> out;
    Monomial cur{std::vector<int>(ring.nvars(), 0)};
    enumerate_rec(ring, 0, d, cur, out);
    return out;
}

std::size_t slice_dim(const GradedRing& ring, int d) {
    return enumerate_monomials(ring, d).size();
}

std::string to_text(const Poly2& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const Monomial& m : p.terms()) {
        if (!s.empty()) s += " + ";
        s += mon_text(*p.ring(), m);
    }
    return s;
}

}  // namespace gocohom
