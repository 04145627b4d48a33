#include "pbu/gf2.hpp"

#include <bit>
#include <cassert>
#include <utility>

namespace pbu {

bool BitVector::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVector::first_set() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        if (words_[wi]) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(words_[wi]));
    }
    return npos;
}

std::vector<std::size_t> BitVector::set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            out.push_back((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    assert(len_ == o.len_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

bool dot(const BitVector& a, const BitVector& b) {
    assert(a.len_ == b.len_);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) acc ^= a.words_[i] & b.words_[i];
    return std::popcount(acc) & 1;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

void BitMatrix::append_row(BitVector r) {
    assert(rows_ == 0 ? true : r.size() == cols_);
    if (rows_ == 0) cols_ = r.size();
    row_.push_back(std::move(r));
    ++rows_;
}

BitVector BitMatrix::mul(const BitVector& x) const {
    assert(x.size() == cols_);
    BitVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.set(i, dot(row_[i], x));
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j : row_[i].set_bits()) t.set(j, i);
    return t;
}

RrefResult rref(BitMatrix m) {
    RrefResult res;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = BitVector::npos;
        for (std::size_t i = r; i < rows; ++i) {
            if (m.get(i, c)) {
                p = i;
                break;
            }
        }
        if (p == BitVector::npos) continue;
        if (p != r) std::swap(m.row(p), m.row(r));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && m.get(i, c)) m.row(i) ^= m.row(r);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    res.reduced = std::move(m);
    return res;
}

SolveResult solve(const BitMatrix& a, const BitVector& b) {
    assert(b.size() == a.rows());
    const std::size_t rows = a.rows(), cols = a.cols();

    BitMatrix aug(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j : a.row(i).set_bits()) aug.set(i, j);
        aug.set(i, cols, b.get(i));
    }
    RrefResult rr = rref(std::move(aug));

    SolveResult out;

    // Nullspace of `a` from the first `cols` columns of the reduced matrix.
    // Eliminating with a pivot in the b-column only touches that column, so
    // those columns are exactly rref(a).
    std::vector<std::size_t> a_pivots;
    for (std::size_t c : rr.pivot_cols)
        if (c < cols) a_pivots.push_back(c);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : a_pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(cols);
        v.set(f);
        for (std::size_t r = 0; r < a_pivots.size(); ++r)
            if (rr.reduced.get(r, f)) v.set(a_pivots[r]);
        out.nullspace.push_back(std::move(v));
    }

    // Inconsistent iff the b-column became a pivot.
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r) {
        if (rr.pivot_cols[r] == cols) {
            out.inconsistent_row = r;
            return out;
        }
    }

    BitVector x(cols);
    for (std::size_t r = 0; r < a_pivots.size(); ++r) x.set(a_pivots[r], rr.reduced.get(r, cols));
    out.solution = std::move(x);
    return out;
}

} // namespace pbu
