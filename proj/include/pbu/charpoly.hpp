#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbu/bundle.hpp"

namespace pbu {

// Fixes the ring H*(B)[x,y]: the base algebra and deg(y) (deg(x) is 1).
struct PolyContext {
    AlgebraPtr base;
    int deg_y = 2;

    int deg_x() const { return 1; }
    int weight(int i, int j) const { return i + j * deg_y; }

    bool operator==(const PolyContext& o) const { return base == o.base && deg_y == o.deg_y; }
};

PolyContext context_for(const BundleData& bd);

// Element of H*(B)[x,y]: a map from (x-exponent, y-exponent) to a nonzero
// coefficient in the base algebra. The degree of a term is
// i*deg(x) + j*deg(y) + deg(coefficient).
class FiberedPolynomial {
public:
    explicit FiberedPolynomial(PolyContext ctx) : ctx_(std::move(ctx)) {}

    const PolyContext& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Element>& terms() const { return terms_; }

    // XOR-accumulates c into the (i,j) coefficient, dropping it when zero.
    void add_term(int i, int j, const Element& c);

    FiberedPolynomial& operator^=(const FiberedPolynomial& o);
    friend FiberedPolynomial operator^(FiberedPolynomial a, const FiberedPolynomial& b) {
        a ^= b;
        return a;
    }
    bool operator==(const FiberedPolynomial& o) const { return terms_ == o.terms_; }

    // nullopt when a coefficient product overflows the base cap.
    std::optional<FiberedPolynomial> multiply(const FiberedPolynomial& o) const;
    std::optional<FiberedPolynomial> scale(const Element& c) const;
    FiberedPolynomial shifted(int di, int dj) const; // times x^di y^dj

    std::optional<int> degree() const; // nullopt for the zero polynomial
    bool is_homogeneous(int d) const;
    bool is_homogeneous() const; // homogeneous of some degree (or zero)
    FiberedPolynomial homogeneous_part(int d) const;
    std::vector<int> homogeneous_degrees() const;

    // One summand per (base monomial, x^i y^j) pair, in display order:
    // ascending (i + j*deg_y, i), base monomials in basis order. Every output
    // re-parses under the document expression grammar.
    std::string to_string() const;

    static FiberedPolynomial constant(const PolyContext& ctx, const Element& c);
    static FiberedPolynomial monomial(const PolyContext& ctx, const Element& c, int i, int j);

private:
    PolyContext ctx_;
    std::map<std::pair<int, int>, Element> terms_;
};

// W1, W2, W' of a bundle pair. All three are monic of the stated degrees:
//   real:    deg W1 = n+1 (leading y^{(n+1)/2}),  deg W2 = 2 (leading x^2)
//   complex: deg W1 = 2n+2,                       deg W2 = 3 (leading x^3)
//   W' has degree k with leading x^k.
struct CharPolySet {
    FiberedPolynomial w1, w2, wprime;
    int deg_w1 = 0, deg_w2 = 0, deg_wprime = 0;
};

FiberedPolynomial build_w1(const BundleData& bd);
FiberedPolynomial build_w2(const BundleData& bd);
FiberedPolynomial build_wprime(const VectorBundleSpec& vb, const FiberSpec& f);
CharPolySet build_charpolys(const BundleData& bd, const VectorBundleSpec& vb);

// Degree up to which results are reported; beyond it they are Unknown.
// Overflow past the base cap must never masquerade as vanishing.
int safe_cap(const BundleData& bd);
int safe_cap(const BundleData& bd, const VectorBundleSpec& vb);

// Monomial basis of the degree-d slice of H*(B)[x,y]: x^i y^j * basis[beta]
// with i + j*deg_y + deg(beta) = d, ordered by (weight, i), then beta.
struct SliceMonomial {
    int i = 0, j = 0;
    std::uint32_t beta = 0;
};

std::vector<SliceMonomial> ring_slice(const PolyContext& ctx, int d);
std::string slice_label(const PolyContext& ctx, const SliceMonomial& m);

// Coordinates of a degree-d homogeneous polynomial in ring_slice(ctx, d).
BitVector slice_vector(const FiberedPolynomial& p, int d, const std::vector<SliceMonomial>& slice);
FiberedPolynomial from_slice_vector(const PolyContext& ctx, const BitVector& v,
                                    const std::vector<SliceMonomial>& slice);

// Normal form over the Leray-Hirsch basis: one base coefficient per basis
// pair, obtained by rewriting x^{x_power} via W2 and y^{y_power} via W1 until
// only basis exponents remain. nullopt when p's degree exceeds the safe cap.
struct ReducedForm {
    std::vector<Element> coeffs; // parallel to leray_hirsch_basis(f).pairs
};

std::optional<ReducedForm> reduce_to_basis(const FiberedPolynomial& p, const BundleData& bd);

// Per-degree comparison of dim (H*(B)[x,y]/<W1,W2>)_d, computed by exact
// linear algebra on the span of the monomial multiples of W1 and W2, against
// the free-module dimension over the Leray-Hirsch basis. Inequality means the
// coefficients cannot come from a bundle with these fibers, not an engine
// fault.
struct QuotientCheckRow {
    enum class Status { Equal, Unequal, Unknown };
    int degree = 0;
    int free_dim = 0;
    int quotient_dim = 0;
    Status status = Status::Unknown;
};

struct QuotientCheckReport {
    int safe_cap = 0;
    std::vector<QuotientCheckRow> rows;
    bool all_known_equal = true; // every non-Unknown row is Equal
    bool has_unknown = false;
};

QuotientCheckReport quotient_check(const BundleData& bd, int up_to_degree);

// Throws ValidationError when validate_bundle / validate_vector_bundle fails.
void require_valid(const BundleData& bd);
void require_valid(const VectorBundleSpec& vb);

} // namespace pbu
