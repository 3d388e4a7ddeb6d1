#ifndef DUVAL_EC_TABLE_HPP
#define DUVAL_EC_TABLE_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "jets.hpp"
#include "newton.hpp"

namespace duval {

struct ComponentCheck {
    std::string label;
    ComponentSpec spec;
    LatticeVector expected_weight;
    std::optional<LatticeVector> weight;
    std::string weight_error;
    int persistence = -1;
    /// nu_a(f) for the computed weight a; the first jet level where the
    /// restriction survives is nu_a(f), so persistence = nu_a(f) - 1 unless capped.
    Int valuation = 0;
    bool weight_ok = false;
    bool contained_ok = false;
    bool valuation_ok = false;

    bool ok() const { return weight_ok && contained_ok && valuation_ok; }
};

struct ChainLink {
    std::string from;
    std::string to;
    std::size_t from_codimension = 0;
    std::size_t to_codimension = 0;
    bool ok() const { return from_codimension < to_codimension; }
};

struct EcTableReport {
    SingularityId id;
    int cap = 0;
    std::vector<ComponentCheck> components;
    std::vector<ChainLink> chains;
    std::vector<std::string> problems;

    bool passed() const { return problems.empty(); }
};

/// Twice the largest weight coordinate in the entry's table.
inline int default_jet_cap(const CatalogEntry& e) {
    Int top = 0;
    for (const auto& v : e.ee_vectors) {
        top = std::max({top, v[0], v[1], v[2]});
    }
    return static_cast<int>(2 * top);
}

/// Checks every catalog component: its weight vector, containment at its
/// persistence level, and the valuation relation. Chains are the covering
/// relations of inclusion among components with the same center.
inline EcTableReport verify_ec_table(const CatalogEntry& e, int cap) {
    if (cap < 0) {
        throw std::invalid_argument("cap must be nonnegative");
    }
    EcTableReport r;
    r.id = e.id;
    r.cap = cap;
    const auto js = jet_system(e.equation, static_cast<unsigned>(cap));
    for (const auto& comp : e.ec_specs) {
        ComponentCheck c{comp.label, comp.spec, comp.expected_weight, std::nullopt, {}};
        try {
            c.weight = weight_vector(comp.spec);
        } catch (const std::invalid_argument& ex) {
            c.weight_error = ex.what();
        }
        c.weight_ok = c.weight && *c.weight == comp.expected_weight &&
                      std::find(e.ee_vectors.begin(), e.ee_vectors.end(), *c.weight) != e.ee_vectors.end();
        c.persistence = persistence_level(comp.spec, js);
        c.contained_ok = c.persistence >= 0 && c.persistence >= static_cast<int>(comp.spec.max_level()) &&
                         component_contained(comp.spec, js, static_cast<unsigned>(c.persistence));
        if (c.weight) {
            c.valuation = nu_monomial(*c.weight, e.equation);
            c.valuation_ok = c.persistence == std::min<Int>(c.valuation - 1, cap);
        }
        if (!c.ok()) {
            r.problems.push_back(comp.label + " " + comp.spec.to_string() + ": weight " +
                                 (c.weight ? to_string(*c.weight) : c.weight_error) + " expected " +
                                 to_string(comp.expected_weight) + ", persistence " +
                                 std::to_string(c.persistence));
        }
        r.components.push_back(std::move(c));
    }
    const auto& cs = r.components;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = 0; j < cs.size(); ++j) {
            const auto& a = cs[i].spec;
            const auto& b = cs[j].spec;
            if (i == j || a.centered_at() != b.centered_at() || !a.is_subset_of(b) || a == b) {
                continue;
            }
            bool covering = true;
            for (std::size_t k = 0; k < cs.size() && covering; ++k) {
                const auto& m = cs[k].spec;
                if (k != i && k != j && m.centered_at() == a.centered_at() && a.is_subset_of(m) &&
                    m.is_subset_of(b) && !(m == a) && !(m == b)) {
                    covering = false;
                }
            }
            if (covering) {
                ChainLink link{cs[i].label, cs[j].label, a.codimension(), b.codimension()};
                if (!link.ok()) {
                    r.problems.push_back("codimension does not increase from " + link.from + " to " + link.to);
                }
                r.chains.push_back(std::move(link));
            }
        }
    }
    return r;
}

} // namespace duval

#endif
