#include "pbu/membership.hpp"

#include <stdexcept>

#include "pbu/errors.hpp"

namespace pbu {

namespace {

// Solves r1*W1 + r2*W2 = target inside the degree-d slice.
MembershipVerdict member_in_degree(const FiberedPolynomial& target, int d, const BundleData& bd,
                                   const CharPolySet& cp) {
    const PolyContext ctx = context_for(bd);
    const auto slice = ring_slice(ctx, d);

    const auto r1_slice = ring_slice(ctx, d - cp.deg_w1);
    const auto r2_slice = ring_slice(ctx, d - cp.deg_w2);
    const std::size_t unknowns = r1_slice.size() + r2_slice.size();

    BitMatrix a(slice.size(), unknowns);
    std::size_t col = 0;
    for (const auto* part : {&r1_slice, &r2_slice}) {
        const FiberedPolynomial& gen = part == &r1_slice ? cp.w1 : cp.w2;
        for (const SliceMonomial& m : *part) {
            auto mult = gen.shifted(m.i, m.j).scale(bd.base->basis_vector(m.beta));
            if (!mult) throw std::logic_error("membership: unexpected cap overflow");
            const BitVector v = slice_vector(*mult, d, slice);
            for (std::size_t r : v.set_bits()) a.set(r, col);
            ++col;
        }
    }
    const BitVector rhs = slice_vector(target, d, slice);

    SolveResult sol = solve(a, rhs);
    if (sol.ok()) {
        BitVector r1_bits(r1_slice.size()), r2_bits(r2_slice.size());
        for (std::size_t i = 0; i < r1_slice.size(); ++i) r1_bits.set(i, sol.solution->get(i));
        for (std::size_t i = 0; i < r2_slice.size(); ++i)
            r2_bits.set(i, sol.solution->get(r1_slice.size() + i));
        return Member{from_slice_vector(ctx, r1_bits, r1_slice),
                      from_slice_vector(ctx, r2_bits, r2_slice)};
    }

    // No solution: exhibit a functional that kills the ideal slice (the
    // column space) but pairs to 1 with the target. It lives in the
    // nullspace of the transpose.
    SolveResult ker = solve(a.transposed(), BitVector(unknowns));
    for (const BitVector& z : ker.nullspace) {
        if (dot(z, rhs)) {
            NonMember nm;
            nm.degree = d;
            nm.functional = z;
            for (std::size_t s : z.set_bits()) nm.support_labels.push_back(slice_label(ctx, slice[s]));
            return nm;
        }
    }
    throw std::logic_error("membership: inconsistent system without certificate");
}

} // namespace

MembershipVerdict membership(const FiberedPolynomial& q, const BundleData& bd,
                             const VectorBundleSpec& vb) {
    require_valid(bd);
    require_valid(vb);
    if (bd.base != vb.base)
        throw ValidationError("bundle and vector bundle must share one base algebra");

    const CharPolySet cp = build_charpolys(bd, vb);
    const int sc = safe_cap(bd, vb);

    if (q.is_zero()) return Member{FiberedPolynomial(q.context()), FiberedPolynomial(q.context())};

    Member total{FiberedPolynomial(q.context()), FiberedPolynomial(q.context())};
    for (int dq : q.homogeneous_degrees()) {
        const int d = dq + vb.k;
        if (d > sc)
            return Unknown{"degree " + std::to_string(d) + " of q*W' exceeds the safe cap " +
                           std::to_string(sc) + " (base cap " + std::to_string(bd.base->cap()) +
                           ")"};
        auto prod = q.homogeneous_part(dq).multiply(cp.wprime);
        if (!prod) throw std::logic_error("membership: q*W' overflowed below the safe cap");
        MembershipVerdict part = member_in_degree(*prod, d, bd, cp);
        if (std::holds_alternative<Member>(part)) {
            total.r1 ^= std::get<Member>(part).r1;
            total.r2 ^= std::get<Member>(part).r2;
        } else {
            return part;
        }
    }
    return total;
}

BoundReport borsuk_bound(const FiberSpec& f, int k, int cohom_dim_base) {
    if (k < 1) throw ValidationError("fiber dimension k must be >= 1", "vector_bundle.k");
    if (cohom_dim_base < 0)
        throw ValidationError("cohomological dimension of the base must be >= 0",
                              "cohom_dim_base");
    BoundReport r;
    r.kind = f.kind();
    r.n = f.n();
    r.k = k;
    r.cohom_dim_base = cohom_dim_base;
    if (f.real()) {
        r.bound = cohom_dim_base + f.n() - k;
        r.valid = f.n() >= k;
        r.monomorphism_range = f.n() - k;
    } else {
        r.bound = cohom_dim_base + 2 * f.n() - k + 1;
        r.valid = 2 * f.n() >= k;
        r.monomorphism_range = 2 * f.n() - k + 1;
    }
    return r;
}

CoincidenceTrace coincidence_bound(const FiberSpec& f, int k, int cohom_dim_base) {
    CoincidenceTrace t;
    t.k = k;
    t.doubled_dim = 2 * k;
    t.diagonal_dim = k;
    t.complement_dim = k;
    t.composite = "h = g o f'";
    t.bound = borsuk_bound(f, k, cohom_dim_base);
    return t;
}

AuditReport audit_degree_argument(const BundleData& bd, const VectorBundleSpec& vb,
                                  int max_total_degree) {
    require_valid(bd);
    require_valid(vb);
    const PolyContext ctx = context_for(bd);

    AuditReport rep;
    rep.max_total_degree = max_total_degree;
    rep.range_threshold = bd.fiber.real() ? bd.fiber.n() - vb.k + 1 : 2 * bd.fiber.n() - vb.k + 2;

    for (int t = 0; t <= max_total_degree; ++t) {
        for (int j = 0; j <= t; ++j) {
            const int i = t - j;
            for (std::uint32_t b = 0; b < bd.base->dimension(); ++b) {
                const FiberedPolynomial q =
                    FiberedPolynomial::monomial(ctx, bd.base->basis_vector(b), i, j);
                AuditRow row;
                row.q = q.to_string();
                row.xy_degree = t;
                row.full_degree = ctx.weight(i, j) + bd.base->degree_of(b);
                row.verdict = membership(q, bd, vb);
                if (std::holds_alternative<Member>(row.verdict)) {
                    ++rep.member_count;
                    if (t < rep.range_threshold) {
                        row.tension = true;
                        ++rep.tension_count;
                    }
                } else if (std::holds_alternative<NonMember>(row.verdict)) {
                    ++rep.non_member_count;
                } else {
                    ++rep.unknown_count;
                }
                rep.rows.push_back(std::move(row));
            }
        }
    }
    return rep;
}

} // namespace pbu
