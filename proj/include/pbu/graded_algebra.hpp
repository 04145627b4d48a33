#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbu/gf2.hpp"

namespace pbu {

// One generator of a truncated-monomial presentation: g with deg(g) = degree
// and the relation g^truncation = 0 (no relation when truncation is empty).
struct GeneratorSpec {
    std::string name;
    int degree = 1;
    std::optional<int> truncation;

    bool operator==(const GeneratorSpec&) const = default;
};

// Elements are coefficient vectors over the algebra's monomial basis.
using Element = BitVector;

struct PoincareSeries {
    std::vector<int> dims; // dims[d] = basis count in degree d, 0..cap
    int total() const;

    bool operator==(const PoincareSeries&) const = default;
};

struct EulerData {
    long long chi = 0;
    bool complete = false; // top nonzero degree strictly below the cap
};

struct AlgebraValidation {
    struct Violation {
        std::string kind; // "unit", "commutativity", "degree", "associativity"
        std::string detail;
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// A finite graded-commutative algebra over GF(2), given by a basis with
// degrees and a structure-constant table truncated at a degree cap. Products
// whose degree exceeds the cap are a distinct "overflow" value, never a
// silent zero.
class FiniteGradedAlgebra {
public:
    struct BasisElement {
        std::vector<int> exps; // exponents per generator; empty for table-built algebras
        int degree = 0;
        std::string label;
    };

    struct TableEntry {
        bool overflow = false;
        std::vector<std::uint32_t> terms; // sorted basis indices, XOR-sum semantics
    };

    // Basis: all monomials with exponents below each truncation and total
    // degree <= cap, ordered by degree then lexicographic exponents.
    static FiniteGradedAlgebra from_presentation(std::vector<GeneratorSpec> gens, int cap);

    // Hand-built algebra; validate() reports whether the table is coherent.
    static FiniteGradedAlgebra from_table(std::vector<BasisElement> basis, int cap,
                                          std::vector<TableEntry> table, std::uint32_t unit_index);

    std::size_t dimension() const { return basis_.size(); }
    int cap() const { return cap_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    std::uint32_t unit_index() const { return unit_; }

    const TableEntry& entry(std::uint32_t i, std::uint32_t j) const {
        return table_[i * basis_.size() + j];
    }

    Element zero() const { return Element(basis_.size()); }
    Element unit() const;
    Element basis_vector(std::uint32_t idx) const;
    std::optional<std::uint32_t> index_of(const std::vector<int>& exps) const;
    std::optional<std::uint32_t> generator_index(std::string_view name) const;

    // Bilinear extension of the table; nullopt when any contributing product
    // of basis elements overflows the cap.
    std::optional<Element> multiply(const Element& a, const Element& b) const;

    int degree_of(std::uint32_t idx) const { return basis_[idx].degree; }
    std::optional<int> top_degree(const Element& e) const; // nullopt for 0
    bool is_homogeneous(const Element& e, int d) const;    // 0 is homogeneous in every degree
    Element homogeneous_part(const Element& e, int d) const;
    int dim_in_degree(int d) const;

    std::string to_string(const Element& e) const; // "0" or " + "-joined labels

    PoincareSeries poincare_series() const;
    EulerData euler_char() const;
    AlgebraValidation validate() const;

private:
    FiniteGradedAlgebra() = default;

    std::vector<GeneratorSpec> gens_;
    int cap_ = 0;
    std::vector<BasisElement> basis_;
    std::vector<TableEntry> table_;
    std::uint32_t unit_ = 0;
    std::map<std::vector<int>, std::uint32_t> index_of_exps_;
    std::vector<int> dim_by_degree_;
};

std::string monomial_label(const std::vector<GeneratorSpec>& gens, const std::vector<int>& exps);

} // namespace pbu
