#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

namespace gocohom {

// Packed bit vector over GF(2). Padding bits in the last word stay zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }
    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    bool is_zero() const {
        for (std::uint64_t x : w_)
            if (x) return false;
        return true;
    }
    std::size_t count() const;
    bool operator==(const BitVec&) const = default;

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Row-major packed bit matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (v)
            w_[r * wpr_ + (c >> 6)] |= mask;
        else
            w_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    // dst ^= src, starting at word index from_word.
    void xor_row_into(std::size_t src, std::size_t dst, std::size_t from_word = 0) {
        std::uint64_t* d = &w_[dst * wpr_];
        const std::uint64_t* s = &w_[src * wpr_];
        for (std::size_t k = from_word; k < wpr_; ++k) d[k] ^= s[k];
    }
    void swap_rows(std::size_t a, std::size_t b);

    BitVec row(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

// Rank over GF(2) by packed row reduction; the input is not modified.
std::size_t rank(const BitMatrix& m);

// Basis of the left kernel {x : x M = 0}, row-vector convention.
// Returned in reduced echelon form, ordered by pivot, so the basis is the
// unique canonical one for the subspace.
std::vector<BitVec> kernel_basis(const BitMatrix& m);

// Some x with x M = target, or nullopt when none exists. The particular
// solution is the canonical one built from the reduced echelon rows.
std::optional<BitVec> solve_membership(const BitMatrix& m, const BitVec& target);

BitVec vec_times_matrix(const BitVec& x, const BitMatrix& m);

}  // namespace gocohom
