#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pbu/graded_algebra.hpp"

namespace pbu {

enum class FiberKind { RealProj, ComplexProj };

// Fiber with the mod-2 cohomology of RP^n or CP^n, n odd. Even n is rejected
// at construction: with a free involution, Floyd's formula
// chi(X) + chi(fixed set) = 2*chi(X/Z2) forces chi(X) even, and even-n
// projective spaces have odd Euler characteristic.
class FiberSpec {
public:
    FiberSpec(FiberKind kind, int n);

    FiberKind kind() const { return kind_; }
    int n() const { return n_; }
    bool real() const { return kind_ == FiberKind::RealProj; }

    int deg_x() const { return 1; }
    int deg_y() const { return real() ? 2 : 4; }
    int x_power() const { return real() ? 2 : 3; }   // exponent rewritten by W2
    int y_power() const { return (n_ + 1) / 2; }     // exponent rewritten by W1
    int w1_degree() const { return real() ? n_ + 1 : 2 * n_ + 2; }
    int w2_degree() const { return real() ? 2 : 3; }
    int orbit_top_degree() const { return real() ? n_ : 2 * n_; }

    std::string name() const { return real() ? "real" : "complex"; }

    bool operator==(const FiberSpec&) const = default;

private:
    FiberKind kind_;
    int n_;
};

// Monomials a^i b^j that generate H*(E/Z2) freely as an H*(B)-module,
// listed in fiber-degree order.
struct LerayHirschBasis {
    std::vector<std::pair<int, int>> pairs; // (x-exponent, y-exponent)
};

LerayHirschBasis leray_hirsch_basis(const FiberSpec& f);

// Orbit algebra of a free involution on the fiber:
//   real:    Z2[u,v]/(u^2, v^{(n+1)/2}),  deg u = 1, deg v = 2
//   complex: Z2[u,v]/(u^3, v^{(n+1)/2}),  deg u = 1, deg v = 4
FiniteGradedAlgebra orbit_algebra(const FiberSpec& f, int cap);

using AlgebraPtr = std::shared_ptr<const FiniteGradedAlgebra>;

// Algebraic shadow of the fiber bundle: the structure coefficients that
// express the top fiber relations in the Leray-Hirsch basis. Realizability
// by an actual bundle is not modeled; only degree bookkeeping is checked.
struct BundleData {
    FiberSpec fiber;
    AlgebraPtr base;
    std::map<int, Element> w;  // subscript i -> element of degree i
    std::map<int, Element> nu; // 1..2 (real) or 1..3 (complex)
    bool alpha = false;        // real case only
};

// The k-dimensional vector bundle side: w' coefficients of degree 1..k.
struct VectorBundleSpec {
    int k = 1;
    AlgebraPtr base;
    std::map<int, Element> wprime;
};

struct BundleValidation {
    struct Violation {
        std::string path; // coefficient that fails, e.g. "structure.w2"
        std::string detail;
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

BundleValidation validate_bundle(const BundleData& bd);
BundleValidation validate_vector_bundle(const VectorBundleSpec& vb);

// Subscripts i for which w_i pairs with a Leray-Hirsch monomial of
// complementary degree (real: 1..n+1; complex: the i with a monomial of
// degree w1_degree - i).
std::vector<int> valid_w_subscripts(const FiberSpec& f);

} // namespace pbu
