#include "pbu/graded_algebra.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "pbu/errors.hpp"

namespace pbu {

int PoincareSeries::total() const {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

std::string monomial_label(const std::vector<GeneratorSpec>& gens, const std::vector<int>& exps) {
    std::string s;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (exps[g] == 0) continue;
        if (!s.empty()) s += "*";
        s += gens[g].name;
        if (exps[g] > 1) s += "^" + std::to_string(exps[g]);
    }
    return s.empty() ? "1" : s;
}

namespace {

void enumerate_monomials(const std::vector<GeneratorSpec>& gens, int cap, std::size_t g,
                         std::vector<int>& exps, int degree,
                         std::vector<std::pair<std::vector<int>, int>>& out) {
    if (g == gens.size()) {
        out.emplace_back(exps, degree);
        return;
    }
    const int d = gens[g].degree;
    const int max_e = gens[g].truncation ? *gens[g].truncation - 1 : (cap - degree) / d;
    for (int e = 0; e <= max_e && degree + e * d <= cap; ++e) {
        exps[g] = e;
        enumerate_monomials(gens, cap, g + 1, exps, degree + e * d, out);
    }
    exps[g] = 0;
}

} // namespace

FiniteGradedAlgebra FiniteGradedAlgebra::from_presentation(std::vector<GeneratorSpec> gens, int cap) {
    if (cap < 0) throw ValidationError("cap too small: degree cap must be >= 0");
    std::set<std::string> names;
    for (const auto& g : gens) {
        if (g.name.empty()) throw ValidationError("generator name must be nonempty");
        if (g.degree < 1)
            throw ValidationError("generator " + g.name + " must have degree >= 1");
        if (g.truncation && *g.truncation < 1)
            throw ValidationError("generator " + g.name + " must have truncation >= 1");
        if (!names.insert(g.name).second)
            throw ValidationError("duplicate generator name: " + g.name);
    }

    FiniteGradedAlgebra alg;
    alg.gens_ = std::move(gens);
    alg.cap_ = cap;

    std::vector<std::pair<std::vector<int>, int>> monos;
    std::vector<int> exps(alg.gens_.size(), 0);
    enumerate_monomials(alg.gens_, cap, 0, exps, 0, monos);
    std::sort(monos.begin(), monos.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });

    alg.basis_.reserve(monos.size());
    for (auto& [e, d] : monos) {
        alg.index_of_exps_.emplace(e, static_cast<std::uint32_t>(alg.basis_.size()));
        alg.basis_.push_back({e, d, monomial_label(alg.gens_, e)});
    }
    alg.unit_ = alg.index_of_exps_.at(std::vector<int>(alg.gens_.size(), 0));

    const std::size_t n = alg.basis_.size();
    alg.table_.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            TableEntry e;
            bool killed = false;
            std::vector<int> sum(alg.gens_.size());
            for (std::size_t g = 0; g < alg.gens_.size(); ++g) {
                sum[g] = alg.basis_[i].exps[g] + alg.basis_[j].exps[g];
                if (alg.gens_[g].truncation && sum[g] >= *alg.gens_[g].truncation) killed = true;
            }
            if (!killed) {
                if (alg.basis_[i].degree + alg.basis_[j].degree > cap) {
                    e.overflow = true;
                } else {
                    auto it = alg.index_of_exps_.find(sum);
                    assert(it != alg.index_of_exps_.end());
                    e.terms.push_back(it->second);
                }
            }
            alg.table_[i * n + j] = e;
            alg.table_[j * n + i] = std::move(e);
        }
    }

    alg.dim_by_degree_.assign(cap + 1, 0);
    for (const auto& b : alg.basis_) ++alg.dim_by_degree_[b.degree];
    return alg;
}

FiniteGradedAlgebra FiniteGradedAlgebra::from_table(std::vector<BasisElement> basis, int cap,
                                                    std::vector<TableEntry> table,
                                                    std::uint32_t unit_index) {
    if (cap < 0) throw ValidationError("cap too small: degree cap must be >= 0");
    if (table.size() != basis.size() * basis.size())
        throw ValidationError("table size must be basis size squared");
    if (unit_index >= basis.size()) throw ValidationError("unit index out of range");

    FiniteGradedAlgebra alg;
    alg.cap_ = cap;
    alg.basis_ = std::move(basis);
    alg.table_ = std::move(table);
    alg.unit_ = unit_index;
    alg.dim_by_degree_.assign(cap + 1, 0);
    for (const auto& b : alg.basis_) {
        if (b.degree < 0 || b.degree > cap)
            throw ValidationError("basis element degree outside 0..cap: " + b.label);
        ++alg.dim_by_degree_[b.degree];
    }
    return alg;
}

Element FiniteGradedAlgebra::unit() const {
    Element e = zero();
    e.set(unit_);
    return e;
}

Element FiniteGradedAlgebra::basis_vector(std::uint32_t idx) const {
    Element e = zero();
    e.set(idx);
    return e;
}

std::optional<std::uint32_t> FiniteGradedAlgebra::index_of(const std::vector<int>& exps) const {
    auto it = index_of_exps_.find(exps);
    if (it == index_of_exps_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> FiniteGradedAlgebra::generator_index(std::string_view name) const {
    for (std::size_t g = 0; g < gens_.size(); ++g)
        if (gens_[g].name == name) return static_cast<std::uint32_t>(g);
    return std::nullopt;
}

std::optional<Element> FiniteGradedAlgebra::multiply(const Element& a, const Element& b) const {
    assert(a.size() == basis_.size() && b.size() == basis_.size());
    Element out = zero();
    for (std::size_t i : a.set_bits()) {
        for (std::size_t j : b.set_bits()) {
            const TableEntry& e = entry(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            if (e.overflow) return std::nullopt;
            for (std::uint32_t t : e.terms) out.flip(t);
        }
    }
    return out;
}

std::optional<int> FiniteGradedAlgebra::top_degree(const Element& e) const {
    std::optional<int> top;
    for (std::size_t i : e.set_bits()) {
        const int d = basis_[i].degree;
        if (!top || d > *top) top = d;
    }
    return top;
}

bool FiniteGradedAlgebra::is_homogeneous(const Element& e, int d) const {
    for (std::size_t i : e.set_bits())
        if (basis_[i].degree != d) return false;
    return true;
}

Element FiniteGradedAlgebra::homogeneous_part(const Element& e, int d) const {
    Element out = zero();
    for (std::size_t i : e.set_bits())
        if (basis_[i].degree == d) out.set(i);
    return out;
}

int FiniteGradedAlgebra::dim_in_degree(int d) const {
    if (d < 0 || d > cap_) return 0;
    return dim_by_degree_[d];
}

std::string FiniteGradedAlgebra::to_string(const Element& e) const {
    std::string s;
    for (std::size_t i : e.set_bits()) {
        if (!s.empty()) s += " + ";
        s += basis_[i].label;
    }
    return s.empty() ? "0" : s;
}

PoincareSeries FiniteGradedAlgebra::poincare_series() const {
    return {dim_by_degree_};
}

EulerData FiniteGradedAlgebra::euler_char() const {
    EulerData out;
    int top = 0;
    for (int d = 0; d <= cap_; ++d) {
        if (dim_by_degree_[d] == 0) continue;
        top = d;
        out.chi += (d % 2 == 0) ? dim_by_degree_[d] : -dim_by_degree_[d];
    }
    out.complete = top < cap_;
    return out;
}

AlgebraValidation FiniteGradedAlgebra::validate() const {
    AlgebraValidation rep;
    const std::size_t n = basis_.size();
    auto label = [&](std::size_t i) { return basis_[i].label; };

    // Unit law.
    for (std::size_t i = 0; i < n; ++i) {
        const TableEntry& e = entry(unit_, static_cast<std::uint32_t>(i));
        if (e.overflow || e.terms != std::vector<std::uint32_t>{static_cast<std::uint32_t>(i)})
            rep.violations.push_back({"unit", "1 * " + label(i) + " != " + label(i)});
    }

    // Symmetry of the table (char 2: graded-commutative means commutative).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const TableEntry& a = entry(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            const TableEntry& b = entry(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(i));
            if (a.overflow != b.overflow || a.terms != b.terms)
                rep.violations.push_back(
                    {"commutativity", label(i) + " * " + label(j) + " != " + label(j) + " * " + label(i)});
        }
    }

    // Degrees add; overflow only past the cap.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const int ds = basis_[i].degree + basis_[j].degree;
            const TableEntry& e = entry(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            if (e.overflow && ds <= cap_)
                rep.violations.push_back(
                    {"degree", label(i) + " * " + label(j) + " marked overflow below the cap"});
            for (std::uint32_t t : e.terms) {
                if (basis_[t].degree != ds)
                    rep.violations.push_back({"degree", label(i) + " * " + label(j) + " has a term " +
                                                            label(t) + " of degree " +
                                                            std::to_string(basis_[t].degree) +
                                                            ", expected " + std::to_string(ds)});
            }
        }
    }

    // Associativity on triples whose total degree fits under the cap.
    auto mul_index_set = [&](const std::vector<std::uint32_t>& s,
                             std::uint32_t k) -> std::optional<std::vector<std::uint32_t>> {
        std::set<std::uint32_t> acc;
        for (std::uint32_t i : s) {
            const TableEntry& e = entry(i, k);
            if (e.overflow) return std::nullopt;
            for (std::uint32_t t : e.terms) {
                auto [it, ins] = acc.insert(t);
                if (!ins) acc.erase(it);
            }
        }
        return std::vector<std::uint32_t>(acc.begin(), acc.end());
    };
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i; j < n; ++j) {
            for (std::uint32_t k = j; k < n; ++k) {
                if (basis_[i].degree + basis_[j].degree + basis_[k].degree > cap_) continue;
                auto ab_c = mul_index_set(entry(i, j).terms, k);
                auto ac_b = mul_index_set(entry(i, k).terms, j);
                auto bc_a = mul_index_set(entry(j, k).terms, i);
                if (entry(i, j).overflow || entry(i, k).overflow || entry(j, k).overflow || !ab_c ||
                    !ac_b || !bc_a) {
                    rep.violations.push_back({"associativity", "overflow inside the in-cap triple (" +
                                                                   label(i) + ", " + label(j) + ", " +
                                                                   label(k) + ")"});
                    continue;
                }
                if (!(*ab_c == *ac_b && *ab_c == *bc_a))
                    rep.violations.push_back({"associativity", "(" + label(i) + ", " + label(j) +
                                                                   ", " + label(k) +
                                                                   ") groups inconsistently"});
            }
        }
    }
    return rep;
}

} // namespace pbu
