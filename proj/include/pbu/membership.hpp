#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pbu/charpoly.hpp"

namespace pbu {

// q*W' = r1*W1 + r2*W2 with explicit cofactors, found by exact linear
// algebra per homogeneous degree in the full ring H*(B)[x,y] (not the
// quotient). The canonical witness sets every free variable of the solve
// to zero, so reports are byte-reproducible.
struct Member {
    FiberedPolynomial r1, r2;
};

// A linear functional on the degree-d slice of H*(B)[x,y] that vanishes on
// the ideal's slice and pairs to 1 with q*W'. Coordinates are over
// ring_slice(ctx, degree); support_labels spell out the nonzero duals.
struct NonMember {
    int degree = 0;
    BitVector functional;
    std::vector<std::string> support_labels;
};

struct Unknown {
    std::string reason;
};

using MembershipVerdict = std::variant<Member, NonMember, Unknown>;

// Decides q*W' in <W1, W2>. Inhomogeneous q is split per degree; every part
// must be a member. Degrees past the safe cap yield Unknown.
MembershipVerdict membership(const FiberedPolynomial& q, const BundleData& bd,
                             const VectorBundleSpec& vb);

// Lower bound for the cohomological dimension of the zero set:
//   real:    cohom.dim(B) + (n - k),      valid when n >= k
//   complex: cohom.dim(B) + (2n - k + 1), valid when 2n >= k
// The monomorphism range is the largest total (x,y)-exponent i+j whose
// slice injects into H*(Z_f/Z2): n-k, resp. 2n-k+1.
struct BoundReport {
    FiberKind kind = FiberKind::RealProj;
    int n = 0;
    int k = 0;
    int cohom_dim_base = 0;
    int bound = 0;
    bool valid = false;
    int monomorphism_range = 0;
};

BoundReport borsuk_bound(const FiberSpec& f, int k, int cohom_dim_base);

// Coincidence sets reduce to zero sets: V = E'' + E'' with the swap
// involution, D the diagonal, D-perp its k-dimensional complement, and
// h = g o f' has Z_h equal to the coincidence set. The bound is the zero-set
// bound at the same k.
struct CoincidenceTrace {
    int k = 0;
    int doubled_dim = 0;    // dim V = 2k
    int diagonal_dim = 0;   // dim D = k
    int complement_dim = 0; // dim D-perp = k
    std::string composite;  // "h = g o f'"
    BoundReport bound;
};

CoincidenceTrace coincidence_bound(const FiberSpec& f, int k, int cohom_dim_base);

// Empirical audit of which monomials q = c*x^i y^j (c over the base basis,
// i+j <= max_total_degree) have q*W' in the ideal. Members with i+j below
// the monomorphism threshold (n-k+1 real, 2n-k+2 complex) are flagged as
// tension rows: the membership identity alone does not rule them out, and
// the audit reports rather than suppresses them.
struct AuditRow {
    std::string q;
    int xy_degree = 0;   // i + j
    int full_degree = 0; // graded degree of q
    MembershipVerdict verdict;
    bool tension = false;
};

struct AuditReport {
    int max_total_degree = 0;
    int range_threshold = 0;
    std::vector<AuditRow> rows;
    int member_count = 0;
    int non_member_count = 0;
    int unknown_count = 0;
    int tension_count = 0;
};

AuditReport audit_degree_argument(const BundleData& bd, const VectorBundleSpec& vb,
                                  int max_total_degree);

} // namespace pbu
