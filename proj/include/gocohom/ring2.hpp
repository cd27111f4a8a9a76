#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gocohom {

// Polynomial ring over GF(2) with named variables of positive weight.
// The variable order is fixed at construction; it defines the monomial
// order used for every canonical form in the library.
class GradedRing {
public:
    explicit GradedRing(std::vector<std::pair<std::string, int>> vars);

    std::size_t nvars() const { return vars_.size(); }
    const std::string& name(std::size_t i) const { return vars_[i].first; }
    int degree(std::size_t i) const { return vars_[i].second; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const GradedRing& o) const { return vars_ == o.vars_; }

private:
    std::vector<std::pair<std::string, int>> vars_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

RingPtr make_ring(std::vector<std::pair<std::string, int>> vars);
bool same_ring(const RingPtr& a, const RingPtr& b);

// Dense exponent vector, one slot per ring variable.
struct Monomial {
    std::vector<int> exp;
    bool operator==(const Monomial&) const = default;
};

int mon_degree(const GradedRing& ring, const Monomial& m);

// Graded order, ties broken lexicographically with earlier variables more
// significant. Returns -1, 0 or +1.
int mon_cmp(const GradedRing& ring, const Monomial& a, const Monomial& b);

Monomial mon_mul(const Monomial& a, const Monomial& b);

std::string mon_text(const GradedRing& ring, const Monomial& m);

// Multivariate polynomial over GF(2). Terms (coefficient 1 implicit) are
// kept strictly sorted in descending monomial order; zero is the empty set.
class Poly2 {
public:
    static Poly2 zero(RingPtr ring);
    static Poly2 one(RingPtr ring);
    static Poly2 variable(RingPtr ring, std::size_t index, int exp = 1);
    static Poly2 single(RingPtr ring, Monomial m);
    // Sorts and cancels duplicate monomials in pairs (XOR semantics).
    static Poly2 from_terms(RingPtr ring, std::vector<Monomial> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    // Degree shared by all terms, or nullopt (zero polynomial included).
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const;

private:
    Poly2(RingPtr ring, std::vector<Monomial> sorted_terms)
        : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

    RingPtr ring_;
    std::vector<Monomial> terms_;
};

Poly2 operator+(const Poly2& a, const Poly2& b);
Poly2 operator*(const Poly2& a, const Poly2& b);
bool operator==(const Poly2& a, const Poly2& b);
inline bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

Poly2 pow(const Poly2& p, unsigned e);
Poly2 mul_monomial(const Poly2& p, const Monomial& m);
Poly2 graded_part(const Poly2& p, int d);

// Evaluation under the ring homomorphism sending variable i to images[i].
// All images must live in one common target ring.
Poly2 substitute(const Poly2& p, const std::vector<Poly2>& images);

// All monomials of weighted degree d, in descending monomial order.
std::vector<Monomial> enumerate_monomials(const GradedRing& ring, int d);
std::size_t slice_dim(const GradedRing& ring, int d);

std::string to_text(const Poly2& p);

}  // namespace gocohom
