#include "gocohom/f2linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gocohom {

std::size_t BitVec::count() const {
    std::size_t c = 0;
    for (std::uint64_t x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(w_.begin() + a * wpr_, w_.begin() + (a + 1) * wpr_,
                     w_.begin() + b * wpr_);
}

BitVec BitMatrix::row(std::size_t r) const {
    BitVec v(cols_);
    std::copy(w_.begin() + r * wpr_, w_.begin() + (r + 1) * wpr_, v.words().begin());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: width mismatch");
    std::copy(v.words().begin(), v.words().end(), w_.begin() + r * wpr_);
}

std::size_t rank(const BitMatrix& m0) {
    BitMatrix m = m0;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m.get(i, c)) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        m.swap_rows(piv, r);
        const std::size_t from_word = c >> 6;
        for (std::size_t i = r + 1; i < rows; ++i)
            if (m.get(i, c)) m.xor_row_into(r, i, from_word);
        ++r;
    }
    return r;
}

namespace {

struct AugEchelon {
    BitMatrix aug;  // [M | I], fully reduced on the M part
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t mcols = 0;
};

AugEchelon rref_augmented(const BitMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    AugEchelon e;
    e.mcols = cols;
    e.aug = BitMatrix(rows, cols + rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            if (m.get(r, c)) e.aug.set(r, c);
        e.aug.set(r, cols + r);
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (e.aug.get(i, c)) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        e.aug.swap_rows(piv, r);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && e.aug.get(i, c)) e.aug.xor_row_into(r, i);
        e.pivots.emplace_back(r, c);
        ++r;
    }
    return e;
}

BitVec slice_row(const BitMatrix& m, std::size_t r, std::size_t from, std::size_t len) {
    BitVec out(len);
    for (std::size_t i = 0; i < len; ++i)
        if (m.get(r, from + i)) out.set(i);
    return out;
}

// In-place reduced echelon form on a set of vectors; rows come out ordered
// by pivot position and zero rows are dropped.
void rref_vectors(std::vector<BitVec>& vs) {
    if (vs.empty()) return;
    const std::size_t n = vs[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < vs.size(); ++c) {
        std::size_t piv = vs.size();
        for (std::size_t i = r; i < vs.size(); ++i)
            if (vs[i].get(c)) {
                piv = i;
                break;
            }
        if (piv == vs.size()) continue;
        std::swap(vs[piv], vs[r]);
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (i != r && vs[i].get(c)) vs[i] ^= vs[r];
        ++r;
    }
    while (!vs.empty() && vs.back().is_zero()) vs.pop_back();
}

}  // namespace

std::vector<BitVec> kernel_basis(const BitMatrix& m) {
    const AugEchelon e = rref_augmented(m);
    const std::size_t rows = m.rows();
    const std::size_t rk = e.pivots.size();
    std::vector<BitVec> out;
    out.reserve(rows - rk);
    for (std::size_t r = rk; r < rows; ++r)
        out.push_back(slice_row(e.aug, r, e.mcols, rows));
    rref_vectors(out);
    return out;
}

std::optional<BitVec> solve_membership(const BitMatrix& m, const BitVec& target) {
    if (target.size() != m.cols())
        throw std::invalid_argument("solve_membership: dimension mismatch");
    const AugEchelon e = rref_augmented(m);
    BitVec t = target;
    BitVec x(m.rows());
    for (const auto& [r, c] : e.pivots) {
        if (!t.get(c)) continue;
        t ^= slice_row(e.aug, r, 0, m.cols());
        x ^= slice_row(e.aug, r, e.mcols, m.rows());
    }
    if (!t.is_zero()) return std::nullopt;
    return x;
}

BitVec vec_times_matrix(const BitVec& x, const BitMatrix& m) {
    if (x.size() != m.rows())
        throw std::invalid_argument("vec_times_matrix: dimension mismatch");
    BitVec acc(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (x.get(r)) acc ^= m.row(r);
    return acc;
}

}  // namespace gocohom
