#include "pbu/bundle.hpp"

#include <algorithm>

#include "pbu/errors.hpp"

namespace pbu {

FiberSpec::FiberSpec(FiberKind kind, int n) : kind_(kind), n_(n) {
    if (n < 1) throw ValidationError("fiber dimension n must be >= 1", "fiber.n");
    if (n % 2 == 0) {
        const std::string chi =
            kind == FiberKind::RealProj ? "1" : std::to_string(n + 1);
        throw ValidationError(
            "no free involution exists for even n: chi = " + chi +
                " is odd, but Floyd's formula chi(X) + chi(fixed set) = 2*chi(X/Z2) "
                "with empty fixed set forces chi(X) even",
            "fiber.n");
    }
}

LerayHirschBasis leray_hirsch_basis(const FiberSpec& f) {
    LerayHirschBasis b;
    for (int j = 0; j < f.y_power(); ++j)
        for (int i = 0; i < f.x_power(); ++i) b.pairs.emplace_back(i, j);
    return b;
}

FiniteGradedAlgebra orbit_algebra(const FiberSpec& f, int cap) {
    std::vector<GeneratorSpec> gens = {
        {"u", 1, f.x_power()},
        {"v", f.deg_y(), f.y_power()},
    };
    return FiniteGradedAlgebra::from_presentation(std::move(gens), cap);
}

std::vector<int> valid_w_subscripts(const FiberSpec& f) {
    std::vector<int> out;
    for (const auto& [i, j] : leray_hirsch_basis(f).pairs)
        out.push_back(f.w1_degree() - (i * f.deg_x() + j * f.deg_y()));
    std::sort(out.begin(), out.end());
    return out;
}

std::string BundleValidation::summary() const {
    std::string s;
    for (const auto& v : violations) {
        if (!s.empty()) s += "; ";
        if (!v.path.empty()) s += v.path + ": ";
        s += v.detail;
    }
    return s;
}

namespace {

void check_coefficient(const FiniteGradedAlgebra& base, const Element& e, int degree,
                       const std::string& path, BundleValidation& rep) {
    if (e.size() != base.dimension()) {
        rep.violations.push_back({path, "coefficient vector does not match the base algebra"});
        return;
    }
    if (!base.is_homogeneous(e, degree))
        rep.violations.push_back({path, "must be homogeneous of degree " + std::to_string(degree) +
                                            ", got " + base.to_string(e)});
}

} // namespace

BundleValidation validate_bundle(const BundleData& bd) {
    BundleValidation rep;
    if (!bd.base) {
        rep.violations.push_back({"base", "missing base algebra"});
        return rep;
    }
    const auto subs = valid_w_subscripts(bd.fiber);
    for (const auto& [i, e] : bd.w) {
        const std::string path = "structure.w" + std::to_string(i);
        if (!std::binary_search(subs.begin(), subs.end(), i)) {
            rep.violations.push_back(
                {path, "no Leray-Hirsch monomial of complementary degree " +
                           std::to_string(bd.fiber.w1_degree() - i) + " exists for this fiber"});
            continue;
        }
        check_coefficient(*bd.base, e, i, path, rep);
    }
    for (const auto& [i, e] : bd.nu) {
        const std::string path = "structure.nu" + std::to_string(i);
        const int limit = bd.fiber.real() ? 2 : 3;
        if (i < 1 || i > limit) {
            rep.violations.push_back({path, "nu subscripts run 1.." + std::to_string(limit) +
                                                " for a " + bd.fiber.name() + " fiber"});
            continue;
        }
        check_coefficient(*bd.base, e, i, path, rep);
    }
    if (!bd.fiber.real() && bd.alpha)
        rep.violations.push_back({"structure.alpha", "alpha applies to real fibers only"});
    return rep;
}

BundleValidation validate_vector_bundle(const VectorBundleSpec& vb) {
    BundleValidation rep;
    if (!vb.base) {
        rep.violations.push_back({"vector_bundle", "missing base algebra"});
        return rep;
    }
    if (vb.k < 1) {
        rep.violations.push_back({"vector_bundle.k", "fiber dimension k must be >= 1"});
        return rep;
    }
    for (const auto& [i, e] : vb.wprime) {
        const std::string path = "vector_bundle.w" + std::to_string(i);
        if (i < 1 || i > vb.k) {
            rep.violations.push_back({path, "w' subscripts run 1..k = " + std::to_string(vb.k)});
            continue;
        }
        check_coefficient(*vb.base, e, i, path, rep);
    }
    return rep;
}

} // namespace pbu
