#include "pbu/charpoly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "pbu/errors.hpp"

namespace pbu {

PolyContext context_for(const BundleData& bd) {
    return {bd.base, bd.fiber.deg_y()};
}

void FiberedPolynomial::add_term(int i, int j, const Element& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second ^= c;
    if (it->second.is_zero()) terms_.erase(it);
}

FiberedPolynomial& FiberedPolynomial::operator^=(const FiberedPolynomial& o) {
    assert(ctx_ == o.ctx_);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

std::optional<FiberedPolynomial> FiberedPolynomial::multiply(const FiberedPolynomial& o) const {
    assert(ctx_ == o.ctx_);
    FiberedPolynomial out(ctx_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            auto prod = ctx_.base->multiply(ca, cb);
            if (!prod) return std::nullopt;
            out.add_term(ka.first + kb.first, ka.second + kb.second, *prod);
        }
    }
    return out;
}

std::optional<FiberedPolynomial> FiberedPolynomial::scale(const Element& c) const {
    FiberedPolynomial out(ctx_);
    for (const auto& [k, v] : terms_) {
        auto prod = ctx_.base->multiply(v, c);
        if (!prod) return std::nullopt;
        out.add_term(k.first, k.second, *prod);
    }
    return out;
}

FiberedPolynomial FiberedPolynomial::shifted(int di, int dj) const {
    FiberedPolynomial out(ctx_);
    for (const auto& [k, v] : terms_) out.add_term(k.first + di, k.second + dj, v);
    return out;
}

std::optional<int> FiberedPolynomial::degree() const {
    std::optional<int> deg;
    for (const auto& [k, c] : terms_) {
        const int top = *ctx_.base->top_degree(c); // stored coefficients are nonzero
        const int d = ctx_.weight(k.first, k.second) + top;
        if (!deg || d > *deg) deg = d;
    }
    return deg;
}

bool FiberedPolynomial::is_homogeneous(int d) const {
    for (const auto& [k, c] : terms_) {
        const int w = ctx_.weight(k.first, k.second);
        if (w > d || !ctx_.base->is_homogeneous(c, d - w)) return false;
    }
    return true;
}

bool FiberedPolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return is_homogeneous(*degree());
}

FiberedPolynomial FiberedPolynomial::homogeneous_part(int d) const {
    FiberedPolynomial out(ctx_);
    for (const auto& [k, c] : terms_) {
        const int w = ctx_.weight(k.first, k.second);
        if (w <= d) out.add_term(k.first, k.second, ctx_.base->homogeneous_part(c, d - w));
    }
    return out;
}

std::vector<int> FiberedPolynomial::homogeneous_degrees() const {
    std::vector<int> out;
    for (const auto& [k, c] : terms_) {
        const int w = ctx_.weight(k.first, k.second);
        for (std::size_t b : c.set_bits()) {
            const int d = w + ctx_.base->degree_of(static_cast<std::uint32_t>(b));
            if (!std::binary_search(out.begin(), out.end(), d)) {
                out.insert(std::upper_bound(out.begin(), out.end(), d), d);
            }
        }
    }
    return out;
}

namespace {

std::string xy_label(int i, int j) {
    std::string s;
    if (i > 0) {
        s += "x";
        if (i > 1) s += "^" + std::to_string(i);
    }
    if (j > 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (j > 1) s += "^" + std::to_string(j);
    }
    return s;
}

} // namespace

std::string FiberedPolynomial::to_string() const {
    // (weight, i, beta) triples, one per summand.
    std::vector<std::tuple<int, int, int, std::uint32_t>> items; // weight, i, j, beta
    for (const auto& [k, c] : terms_)
        for (std::size_t b : c.set_bits())
            items.emplace_back(ctx_.weight(k.first, k.second), k.first, k.second,
                               static_cast<std::uint32_t>(b));
    std::sort(items.begin(), items.end());
    std::string s;
    for (const auto& [w, i, j, b] : items) {
        if (!s.empty()) s += " + ";
        const std::string coeff = ctx_.base->basis()[b].label;
        const std::string mono = xy_label(i, j);
        if (mono.empty())
            s += coeff;
        else if (coeff == "1")
            s += mono;
        else
            s += coeff + "*" + mono;
    }
    return s.empty() ? "0" : s;
}

FiberedPolynomial FiberedPolynomial::constant(const PolyContext& ctx, const Element& c) {
    FiberedPolynomial p(ctx);
    p.add_term(0, 0, c);
    return p;
}

FiberedPolynomial FiberedPolynomial::monomial(const PolyContext& ctx, const Element& c, int i,
                                              int j) {
    FiberedPolynomial p(ctx);
    p.add_term(i, j, c);
    return p;
}

void require_valid(const BundleData& bd) {
    BundleValidation rep = validate_bundle(bd);
    if (!rep.ok()) throw ValidationError(rep.summary());
}

void require_valid(const VectorBundleSpec& vb) {
    BundleValidation rep = validate_vector_bundle(vb);
    if (!rep.ok()) throw ValidationError(rep.summary());
}

FiberedPolynomial build_w1(const BundleData& bd) {
    require_valid(bd);
    const PolyContext ctx = context_for(bd);
    FiberedPolynomial p(ctx);
    p.add_term(0, bd.fiber.y_power(), bd.base->unit());
    for (const auto& [i, j] : leray_hirsch_basis(bd.fiber).pairs) {
        const int sub = bd.fiber.w1_degree() - ctx.weight(i, j);
        auto it = bd.w.find(sub);
        if (it != bd.w.end()) p.add_term(i, j, it->second);
    }
    return p;
}

FiberedPolynomial build_w2(const BundleData& bd) {
    require_valid(bd);
    const PolyContext ctx = context_for(bd);
    FiberedPolynomial p(ctx);
    const int xp = bd.fiber.x_power();
    p.add_term(xp, 0, bd.base->unit());
    for (int i = 1; i < xp + (bd.fiber.real() ? 0 : 1); ++i) {
        // nu_i multiplies x^{x_power - i}
        auto it = bd.nu.find(i);
        if (it != bd.nu.end()) p.add_term(xp - i, 0, it->second);
    }
    if (bd.fiber.real()) {
        auto it = bd.nu.find(2);
        if (it != bd.nu.end()) p.add_term(0, 0, it->second);
        if (bd.alpha) p.add_term(0, 1, bd.base->unit());
    }
    return p;
}

FiberedPolynomial build_wprime(const VectorBundleSpec& vb, const FiberSpec& f) {
    require_valid(vb);
    PolyContext ctx{vb.base, f.deg_y()};
    FiberedPolynomial p(ctx);
    p.add_term(vb.k, 0, vb.base->unit());
    for (const auto& [i, c] : vb.wprime) p.add_term(vb.k - i, 0, c);
    return p;
}

CharPolySet build_charpolys(const BundleData& bd, const VectorBundleSpec& vb) {
    return {build_w1(bd), build_w2(bd), build_wprime(vb, bd.fiber),
            bd.fiber.w1_degree(), bd.fiber.w2_degree(), vb.k};
}

int safe_cap(const BundleData& bd) {
    return bd.base->cap() - bd.fiber.w1_degree();
}

int safe_cap(const BundleData& bd, const VectorBundleSpec& vb) {
    return bd.base->cap() - std::max(bd.fiber.w1_degree(), vb.k);
}

std::vector<SliceMonomial> ring_slice(const PolyContext& ctx, int d) {
    std::vector<SliceMonomial> out;
    if (d < 0) return out;
    for (int w = 0; w <= d; ++w) {
        for (int i = 0; i <= w; ++i) {
            if ((w - i) % ctx.deg_y != 0) continue;
            const int j = (w - i) / ctx.deg_y;
            const int cdeg = d - w;
            const auto& basis = ctx.base->basis();
            for (std::uint32_t b = 0; b < basis.size(); ++b)
                if (basis[b].degree == cdeg) out.push_back({i, j, b});
        }
    }
    return out;
}

std::string slice_label(const PolyContext& ctx, const SliceMonomial& m) {
    const std::string coeff = ctx.base->basis()[m.beta].label;
    const std::string mono = xy_label(m.i, m.j);
    if (mono.empty()) return coeff;
    if (coeff == "1") return mono;
    return coeff + "*" + mono;
}

BitVector slice_vector(const FiberedPolynomial& p, int d, const std::vector<SliceMonomial>& slice) {
    if (!p.is_homogeneous(d)) throw std::logic_error("slice_vector: polynomial not homogeneous");
    std::map<std::tuple<int, int, std::uint32_t>, std::size_t> pos;
    for (std::size_t s = 0; s < slice.size(); ++s)
        pos[{slice[s].i, slice[s].j, slice[s].beta}] = s;
    BitVector v(slice.size());
    for (const auto& [k, c] : p.terms()) {
        for (std::size_t b : c.set_bits()) {
            auto it = pos.find({k.first, k.second, static_cast<std::uint32_t>(b)});
            if (it == pos.end()) throw std::logic_error("slice_vector: term outside the slice");
            v.set(it->second);
        }
    }
    return v;
}

FiberedPolynomial from_slice_vector(const PolyContext& ctx, const BitVector& v,
                                    const std::vector<SliceMonomial>& slice) {
    FiberedPolynomial p(ctx);
    for (std::size_t s : v.set_bits())
        p.add_term(slice[s].i, slice[s].j, ctx.base->basis_vector(slice[s].beta));
    return p;
}

namespace {

// Largest term whose exponents fall outside the Leray-Hirsch range, under
// (y-exponent, x-exponent) lexicographic comparison.
std::optional<std::pair<int, int>> max_reducible(const FiberedPolynomial& p, int x_power,
                                                 int y_power) {
    std::optional<std::pair<int, int>> best;
    for (const auto& [k, c] : p.terms()) {
        if (k.first < x_power && k.second < y_power) continue;
        auto ji = std::make_pair(k.second, k.first);
        if (!best || ji > std::make_pair(best->second, best->first)) best = k;
    }
    return best;
}

} // namespace

std::optional<ReducedForm> reduce_to_basis(const FiberedPolynomial& p, const BundleData& bd) {
    require_valid(bd);
    const PolyContext ctx = context_for(bd);
    const auto deg = p.degree();
    if (deg && *deg > safe_cap(bd)) return std::nullopt;

    const FiberedPolynomial w1 = build_w1(bd);
    const FiberedPolynomial w2 = build_w2(bd);
    const int xp = bd.fiber.x_power();
    const int yp = bd.fiber.y_power();

    // Rewriting the top reducible term against monic W1 / W2 cancels it
    // exactly and only creates terms of strictly smaller multiset rank, so
    // this halts; the step bound is a guard against table corruption.
    FiberedPolynomial work = p;
    for (long steps = 0;; ++steps) {
        if (steps > 1000000) throw std::logic_error("reduce_to_basis failed to terminate");
        auto k = max_reducible(work, xp, yp);
        if (!k) break;
        const Element c = work.terms().at(*k);
        const FiberedPolynomial& rule = k->second >= yp ? w1 : w2;
        const int di = k->second >= yp ? k->first : k->first - xp;
        const int dj = k->second >= yp ? k->second - yp : k->second;
        auto sub = rule.shifted(di, dj).scale(c);
        if (!sub) return std::nullopt; // coefficient product past the cap
        work ^= *sub;
    }

    const auto pairs = leray_hirsch_basis(bd.fiber).pairs;
    ReducedForm out;
    out.coeffs.assign(pairs.size(), bd.base->zero());
    for (const auto& [k, c] : work.terms()) {
        auto it = std::find(pairs.begin(), pairs.end(), k);
        if (it == pairs.end()) throw std::logic_error("reduce_to_basis: non-basis exponent survived");
        out.coeffs[static_cast<std::size_t>(it - pairs.begin())] = c;
    }
    return out;
}

QuotientCheckReport quotient_check(const BundleData& bd, int up_to_degree) {
    require_valid(bd);
    const PolyContext ctx = context_for(bd);
    QuotientCheckReport rep;
    rep.safe_cap = safe_cap(bd);

    const FiberedPolynomial w1 = build_w1(bd);
    const FiberedPolynomial w2 = build_w2(bd);
    const int deg_w1 = bd.fiber.w1_degree();
    const int deg_w2 = bd.fiber.w2_degree();
    const auto lh = leray_hirsch_basis(bd.fiber).pairs;

    for (int d = 0; d <= up_to_degree; ++d) {
        QuotientCheckRow row;
        row.degree = d;
        for (const auto& [i, j] : lh) row.free_dim += bd.base->dim_in_degree(d - ctx.weight(i, j));
        if (d > rep.safe_cap) {
            row.status = QuotientCheckRow::Status::Unknown;
            rep.has_unknown = true;
            rep.rows.push_back(row);
            continue;
        }
        const auto slice = ring_slice(ctx, d);
        BitMatrix span(0, slice.size());
        for (const auto* gen : {&w1, &w2}) {
            const int dg = gen == &w1 ? deg_w1 : deg_w2;
            if (d < dg) continue;
            for (const SliceMonomial& m : ring_slice(ctx, d - dg)) {
                auto mult = gen->shifted(m.i, m.j).scale(bd.base->basis_vector(m.beta));
                // degree d <= safe cap keeps every coefficient product in range
                if (!mult) throw std::logic_error("quotient_check: unexpected cap overflow");
                span.append_row(slice_vector(*mult, d, slice));
            }
        }
        const std::size_t rank = span.rows() ? rref(span).rank : 0;
        row.quotient_dim = static_cast<int>(slice.size() - rank);
        row.status = row.quotient_dim == row.free_dim ? QuotientCheckRow::Status::Equal
                                                      : QuotientCheckRow::Status::Unequal;
        if (row.status != QuotientCheckRow::Status::Equal) rep.all_known_equal = false;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace pbu
