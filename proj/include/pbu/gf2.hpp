#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace pbu {

// Dense bit vector over GF(2). Bits at positions >= size() are kept zero,
// so whole-word operations never leak garbage into comparisons.
class BitVector {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVector() = default;
    explicit BitVector(std::size_t n) : len_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v = true) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool any() const;
    bool is_zero() const { return !any(); }
    std::size_t popcount() const;
    std::size_t first_set() const; // npos when zero
    std::vector<std::size_t> set_bits() const;

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    // Parity of the bitwise AND, i.e. the GF(2) inner product.
    friend bool dot(const BitVector& a, const BitVector& b);

    bool operator==(const BitVector&) const = default;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-major bit matrix.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BitVector& row(std::size_t i) { return row_[i]; }
    const BitVector& row(std::size_t i) const { return row_[i]; }

    bool get(std::size_t i, std::size_t j) const { return row_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { row_[i].set(j, v); }

    void append_row(BitVector r);

    // A*x over GF(2); x.size() must equal cols().
    BitVector mul(const BitVector& x) const;

    BitMatrix transposed() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> row_;
};

struct RrefResult {
    BitMatrix reduced;                     // reduced row-echelon form
    std::vector<std::size_t> pivot_cols;   // strictly increasing
    std::size_t rank = 0;                  // == pivot_cols.size()
};

RrefResult rref(BitMatrix m);

// Result of solving a*x = b over GF(2).
//
// When consistent, `solution` is the canonical solution with every free
// variable set to zero, and `nullspace` is a basis of ker(a) (one vector per
// free column, in column order). When inconsistent, `inconsistent_row` names
// the row of the reduced augmented matrix of the form [0 ... 0 | 1].
struct SolveResult {
    std::optional<BitVector> solution;
    std::vector<BitVector> nullspace;
    std::optional<std::size_t> inconsistent_row;

    bool ok() const { return solution.has_value(); }
};

SolveResult solve(const BitMatrix& a, const BitVector& b);

} // namespace pbu
