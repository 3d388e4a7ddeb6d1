#ifndef DUVAL_CATALOG_HPP
#define DUVAL_CATALOG_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jets.hpp"
#include "lattice.hpp"
#include "polynomial.hpp"
#include "subdivision.hpp"

namespace duval {

enum class Family { A, D, E };

struct SingularityId {
    Family family = Family::A;
    int index = 1;

    std::string name() const {
        const char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
        return std::string(1, f) + std::to_string(index);
    }

    friend bool operator==(const SingularityId&, const SingularityId&) = default;
};

/// Rejects indices outside the catalog: A_n with n >= 1, D_2n with 2n >= 4,
/// E6, E7, E8.
inline void validate(const SingularityId& id) {
    switch (id.family) {
    case Family::A:
        if (id.index < 1) {
            throw std::invalid_argument("A_n needs n >= 1, got " + std::to_string(id.index));
        }
        break;
    case Family::D:
        if (id.index < 4) {
            throw std::invalid_argument("D_n needs n >= 4, got " + std::to_string(id.index));
        }
        if (id.index % 2 != 0) {
            throw std::invalid_argument("D" + std::to_string(id.index) +
                                        " is not in the catalog: only even indices D_2n have component tables");
        }
        break;
    case Family::E:
        if (id.index < 6 || id.index > 8) {
            throw std::invalid_argument("E_n exists only for n = 6, 7, 8, got " + std::to_string(id.index));
        }
        break;
    }
}

/// Parses "A3", "D4", "E8" (an optional underscore is accepted: "A_3").
inline SingularityId parse_singularity(std::string_view text) {
    if (text.size() < 2) {
        throw std::invalid_argument("unknown singularity '" + std::string(text) + "'");
    }
    SingularityId id;
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A':
        id.family = Family::A;
        break;
    case 'D':
        id.family = Family::D;
        break;
    case 'E':
        id.family = Family::E;
        break;
    default:
        throw std::invalid_argument("unknown singularity family in '" + std::string(text) + "'");
    }
    std::string_view digits = text.substr(1);
    if (!digits.empty() && digits[0] == '_') {
        digits.remove_prefix(1);
    }
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        throw std::invalid_argument("bad singularity index in '" + std::string(text) + "'");
    }
    id.index = std::stoi(std::string(digits));
    validate(id);
    return id;
}

struct CatalogComponent {
    std::string label;
    ComponentSpec spec;
    /// The weight vector the table attaches to this component, generated
    /// independently of the subspace.
    LatticeVector expected_weight;
};

/// One subdivision recipe and the weight vectors it is meant to realize.
struct Construction {
    std::string label;
    std::vector<SubdivisionStep> steps;
    std::vector<LatticeVector> inserted_rays;
};

struct CatalogEntry {
    SingularityId id;
    Polynomial equation;
    std::vector<LatticeVector> ee_vectors;
    std::vector<CatalogComponent> ec_specs;
    std::vector<SubdivisionStep> steps;
    std::vector<Construction> constructions;
    std::optional<std::vector<LatticeVector>> e8_minimal_subset;
    /// Covectors whose distance to the equation equals expected_distance:
    /// the compact facet normal, or the normals of the compact edge.
    std::vector<LatticeVector> facet_covectors;
    Int expected_distance = 0;
    std::vector<std::string> notes;
};

struct CatalogOptions {
    /// A_n only: start the trapezium split from (1,n,1) instead of (n,1,1);
    /// the whole step list is then the x<->y mirror of the default.
    bool mirrored = false;
};

namespace detail {

inline std::vector<SubdivisionStep> ray_steps(const std::vector<LatticeVector>& rays) {
    std::vector<SubdivisionStep> out;
    for (const auto& r : rays) {
        out.push_back(InsertRay{primitive(r).vector});
    }
    return out;
}

inline LatticeVector swap_xy(const LatticeVector& v) { return {v[1], v[0], v[2]}; }

inline CatalogComponent prefix_component(std::string label, const LatticeVector& subspace_prefix, Center center,
                                         const LatticeVector& expected) {
    return {std::move(label), ComponentSpec::prefix(subspace_prefix, center), expected};
}

inline CatalogEntry a_entry(int n, const CatalogOptions& opt) {
    CatalogEntry e;
    e.id = {Family::A, n};
    e.equation = parse_polynomial("x*y - z^" + std::to_string(n + 1));
    for (int m = 1; m <= n; ++m) {
        for (int l = 1; l <= m; ++l) {
            e.ee_vectors.push_back({l, m - l + 1, 1});
        }
    }
    for (int l = 1; l <= n + 1; ++l) {
        e.ee_vectors.push_back({l, 0, 1});
    }
    for (int l = 1; l <= n + 1; ++l) {
        e.ee_vectors.push_back({0, l, 1});
    }
    // V(x_0..x_{l-1}, y_0..y_{m-l}, z_0) at the origin, V(y_0..y_l, z_0) over
    // the x-axis and V(x_0..x_l, z_0) over the y-axis.
    for (int m = 1; m <= n; ++m) {
        for (int l = 1; l <= m; ++l) {
            e.ec_specs.push_back(prefix_component("origin l=" + std::to_string(l) + " m=" + std::to_string(m),
                                                  {l, m - l + 1, 1}, Center::origin, {l, m - l + 1, 1}));
        }
    }
    for (int l = 0; l <= n; ++l) {
        e.ec_specs.push_back(
            prefix_component("x-axis l=" + std::to_string(l), {0, l + 1, 1}, Center::x_axis, {0, l + 1, 1}));
    }
    for (int l = 0; l <= n; ++l) {
        e.ec_specs.push_back(
            prefix_component("y-axis l=" + std::to_string(l), {l + 1, 0, 1}, Center::y_axis, {l + 1, 0, 1}));
    }
    std::vector<LatticeVector> order{{1, 1, 1}};
    for (int k = n; k >= 1; --k) {
        order.push_back({k, 0, 1});
    }
    for (int k = n; k >= 1; --k) {
        order.push_back({0, k, 1});
    }
    if (n >= 2) {
        order.push_back({n, 1, 1});
        order.push_back({1, n, 1});
    }
    std::vector<LatticeVector> rest;
    for (const auto& v : e.ee_vectors) {
        if (std::find(order.begin(), order.end(), v) == order.end() && v != LatticeVector{n + 1, 0, 1} &&
            v != LatticeVector{0, n + 1, 1}) {
            rest.push_back(v);
        }
    }
    std::sort(rest.begin(), rest.end());
    order.insert(order.end(), rest.begin(), rest.end());
    if (opt.mirrored) {
        for (auto& v : order) {
            v = swap_xy(v);
        }
    }
    e.steps = ray_steps(order);
    e.constructions.push_back({"", e.steps, e.ee_vectors});
    for (int l = 0; l <= n + 1; ++l) {
        e.facet_covectors.push_back({l, n + 1 - l, 1});
    }
    e.expected_distance = n + 1;
    e.notes.push_back("the reordered weight list printed before the construction starts at (n,0,1) and (0,n,1); "
                      "the corner vectors (n+1,0,1) and (0,n+1,1) of the closed-form list are rays of the dual fan");
    return e;
}

inline CatalogEntry d_entry(int index) {
    const int n = index / 2;
    CatalogEntry e;
    e.id = {Family::D, index};
    e.equation = parse_polynomial("z^2 - x*y^2 - x^" + std::to_string(index - 1));
    const LatticeVector omega{2, 2 * n - 2, 2 * n - 1};
    const LatticeVector step{0, 1, 1};
    std::vector<LatticeVector> U{{1, 1, 1}};
    for (int i = 2; i <= n - 1; ++i) {
        U.push_back(U.back() + step);
    }
    std::vector<LatticeVector> W{{1, 0, 1}};
    for (int i = 1; i <= n - 1; ++i) {
        W.push_back(W.back() + step);
    }
    std::vector<LatticeVector> V{{2, 0, 1}};
    for (int i = 1; i <= 2 * n - 2; ++i) {
        V.push_back(V.back() + step);
    }
    e.ee_vectors.insert(e.ee_vectors.end(), U.begin(), U.end());
    e.ee_vectors.insert(e.ee_vectors.end(), W.begin() + 1, W.end());
    e.ee_vectors.insert(e.ee_vectors.end(), V.begin() + 1, V.end());
    e.ee_vectors.push_back(W[0]);
    e.ee_vectors.push_back(V[0]);

    const auto label = [](const char* name, int k) { return std::string(name) + std::to_string(k); };
    // X_1^0 = V(x_0,y_0,z_0) -> U_1 and X_2^0 = V(x_0,y_0,z_0,z_1) -> W_1.
    e.ec_specs.push_back(prefix_component("X1", {1, 1, 1}, Center::origin, U.at(0)));
    e.ec_specs.push_back(prefix_component("X2", {1, 1, 2}, Center::origin, W.at(1)));
    // H_2k = V(x_0, y_0..y_{k-1}, z_0..z_k) -> W_k, k = 2..n-1.
    for (int k = 2; k <= n - 1; ++k) {
        e.ec_specs.push_back(prefix_component(label("H", 2 * k), {1, k, k + 1}, Center::origin, W.at(k)));
    }
    // H_2k+1 = V(x_0, y_0..y_k, z_0..z_k) -> U_{k+1}, k = 1..n-2.
    for (int k = 1; k <= n - 2; ++k) {
        e.ec_specs.push_back(prefix_component(label("H", 2 * k + 1), {1, k + 1, k + 1}, Center::origin, U.at(k)));
    }
    // L_2k+1 = V(x_0,x_1, y_0..y_{k-1}, z_0..z_k) -> V_k, k = 1..2n-2.
    for (int k = 1; k <= 2 * n - 2; ++k) {
        e.ec_specs.push_back(prefix_component(label("L", 2 * k + 1), {2, k, k + 1}, Center::origin, V.at(k)));
    }
    e.ec_specs.push_back(prefix_component("y-axis V(x_0,z_0)", {1, 0, 1}, Center::y_axis, W[0]));
    e.ec_specs.push_back(prefix_component("y-axis V(x_0,x_1,z_0)", {2, 0, 1}, Center::y_axis, V[0]));

    e.steps.push_back(InsertWall{unit_vector(0), omega});
    e.steps.push_back(InsertRay{W[0]});
    for (const auto& u : U) {
        e.steps.push_back(InsertRay{u});
    }
    for (std::size_t i = 1; i < W.size(); ++i) {
        e.steps.push_back(InsertRay{W[i]});
    }
    for (std::size_t i = 1; i < V.size(); ++i) {
        e.steps.push_back(InsertRay{V[i]});
    }
    e.constructions.push_back({"", e.steps, e.ee_vectors});
    e.facet_covectors.push_back(omega);
    e.expected_distance = 4 * n - 2;
    e.notes = {
        "the printed first origin component X_1^0 = V(x_0,y_0,z_1) omits z_0; origin components must contain "
        "x_0, y_0 and z_0, so V(x_0,y_0,z_0) is used",
        "the printed determinant of the cone (U_i, e_2, Omega) is n-1-2i; exact expansion gives 2n-1-2i, "
        "which is a unit exactly at i = n-1",
        "the U-chain is described as a decomposition of the cone (e_1,(2,0,1),Omega) but U_i lies in "
        "(e_1,e_2,Omega) and the cones used contain e_2",
        "W_{n-1} = (1,n-1,n) satisfies 2 W_{n-1} = e_3 + Omega, so it lies on the wall (e_3, Omega) and the "
        "printed cone (W_{n-1}, e_3, Omega) is degenerate",
        "the printed range k = 1..2n-1 for L_{2k+1} would give weight (2,2n-1,2n), which is not a weight vector; "
        "the range is k = 1..2n-2",
    };
    return e;
}

inline CatalogEntry e6_entry() {
    CatalogEntry e;
    e.id = {Family::E, 6};
    e.equation = parse_polynomial("z^2 + y^3 + x^4");
    e.ee_vectors = {{1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 3}, {2, 3, 4}, {3, 4, 6}};
    const auto V = [](std::initializer_list<JetVariable> vs) {
        return ComponentSpec(std::vector<JetVariable>(vs), Center::origin);
    };
    const std::vector<ComponentSpec> listed{
        V({{'x', 0}, {'y', 0}, {'z', 0}}),
        V({{'x', 0}, {'y', 0}, {'z', 0}, {'z', 1}}),
        V({{'x', 0}, {'y', 0}, {'y', 1}, {'z', 0}, {'z', 1}}),
        V({{'x', 0}, {'x', 1}, {'y', 0}, {'y', 1}, {'z', 0}, {'z', 1}, {'z', 2}}),
        V({{'x', 0}, {'x', 1}, {'y', 0}, {'y', 1}, {'y', 2}, {'z', 0}, {'z', 1}, {'z', 2}, {'z', 3}}),
        V({{'x', 0},
           {'x', 1},
           {'x', 2},
           {'y', 0},
           {'y', 1},
           {'y', 2},
           {'y', 3},
           {'z', 0},
           {'z', 1},
           {'z', 2},
           {'z', 3},
           {'z', 4},
           {'z', 5}}),
    };
    for (std::size_t i = 0; i < listed.size(); ++i) {
        e.ec_specs.push_back({"C" + std::to_string(i + 1), listed[i], e.ee_vectors[i]});
    }
    auto order = e.ee_vectors;
    std::sort(order.begin(), order.end());
    e.steps = ray_steps(order);
    e.constructions.push_back({"", e.steps, e.ee_vectors});
    e.facet_covectors = {{3, 4, 6}};
    e.expected_distance = 12;
    return e;
}

inline CatalogEntry e7_entry() {
    CatalogEntry e;
    e.id = {Family::E, 7};
    e.equation = parse_polynomial("x^2 + y^3 + y*z^3");
    e.ee_vectors = {{1, 1, 0}, {1, 2, 0}, {1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {3, 2, 1}, {3, 3, 1},
                    {3, 2, 2}, {4, 3, 2}, {5, 3, 2}, {5, 4, 2}, {6, 4, 3}, {7, 5, 3}, {9, 6, 4}};
    for (const auto& v : e.ee_vectors) {
        const Center c = v[2] == 0 ? Center::z_axis : Center::origin;
        e.ec_specs.push_back(prefix_component("weight " + to_string(v), v, c, v));
    }
    auto order = e.ee_vectors;
    std::sort(order.begin(), order.end());
    e.steps.push_back(InsertWall{unit_vector(1), {9, 6, 4}});
    const auto rays = ray_steps(order);
    e.steps.insert(e.steps.end(), rays.begin(), rays.end());
    e.constructions.push_back({"", e.steps, e.ee_vectors});
    e.facet_covectors = {{9, 6, 4}};
    e.expected_distance = 18;
    e.notes = {
        "the printed component list has missing commas and a repeated x_6 in its last entry; the component "
        "subspaces are rebuilt as coordinate prefixes from the weight vectors",
        "the printed last component lists y_0..y_4, which would give weight (9,5,4); the weight vector (9,6,4) "
        "requires y_0..y_5",
    };
    return e;
}

inline std::vector<LatticeVector> e8_weight_list() {
    return {{1, 1, 1},  {1, 1, 2},  {1, 2, 2},  {1, 2, 3},  {2, 2, 3},  {2, 3, 4},   {2, 3, 5},
            {2, 4, 5},  {3, 4, 6},  {3, 5, 7},  {3, 5, 8},  {4, 6, 8},  {4, 6, 9},   {4, 7, 10},
            {5, 7, 11}, {5, 8, 11}, {5, 8, 12}, {5, 9, 13}, {5, 9, 14}, {6, 10, 14}, {6, 10, 15}};
}

inline std::vector<LatticeVector> e8_minimal_list() {
    return {{1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {1, 2, 3}, {2, 2, 3},  {2, 3, 4},  {2, 3, 5},  {2, 4, 5},
            {3, 4, 6}, {3, 5, 7}, {3, 5, 8}, {4, 6, 9}, {4, 7, 10}, {5, 8, 12}, {6, 10, 15}};
}

inline CatalogEntry e8_entry() {
    CatalogEntry e;
    e.id = {Family::E, 8};
    e.equation = parse_polynomial("z^2 + y^3 + x^5");
    e.ee_vectors = e8_weight_list();
    e.e8_minimal_subset = e8_minimal_list();
    for (const auto& v : e.ee_vectors) {
        e.ec_specs.push_back(prefix_component("weight " + to_string(v), v, Center::origin, v));
    }
    // The minimal vectors go in by descending coordinate sum; the remaining
    // six follow in graded-lexicographic order.
    auto minimal = *e.e8_minimal_subset;
    std::sort(minimal.begin(), minimal.end(), [](const LatticeVector& a, const LatticeVector& b) {
        const Int sa = a.coordinate_sum();
        const Int sb = b.coordinate_sum();
        return sa != sb ? sa > sb : a < b;
    });
    std::vector<LatticeVector> extra;
    for (const auto& v : e.ee_vectors) {
        if (std::find(minimal.begin(), minimal.end(), v) == minimal.end()) {
            extra.push_back(v);
        }
    }
    std::sort(extra.begin(), extra.end(), GradedLess{});
    const auto minimal_steps = ray_steps(minimal);
    auto full_steps = minimal_steps;
    const auto extra_steps = ray_steps(extra);
    full_steps.insert(full_steps.end(), extra_steps.begin(), extra_steps.end());
    e.steps = full_steps;
    e.constructions.push_back({"minimal", minimal_steps, *e.e8_minimal_subset});
    e.constructions.push_back({"full", full_steps, e.ee_vectors});
    e.facet_covectors = {{6, 10, 15}};
    e.expected_distance = 30;
    e.notes = {
        "the printed weight list reads \"4,6,8)\" with a missing parenthesis; (4,6,8) is restored",
        "(4,6,8) and (6,10,14) are not primitive: they are 2(2,3,4) and 2(3,5,7); the subdivision inserts the "
        "primitive rays",
        "the printed decomposition (6,9,13) = (3,4,6) + (3,5,7) concerns a vector that is not in the weight list",
        "the printed decomposition (5,9,14) = (3,4,6) + (3,5,8) does not add up: the right side is (6,9,14)",
        "inserting the fifteen minimal vectors in lexicographic order gives a regular fan, but the six remaining "
        "vectors then break regularity; the minimal vectors are therefore inserted by descending coordinate sum",
    };
    return e;
}

} // namespace detail

inline CatalogEntry entry(const SingularityId& id, const CatalogOptions& opt = {}) {
    validate(id);
    switch (id.family) {
    case Family::A:
        return detail::a_entry(id.index, opt);
    case Family::D:
        return detail::d_entry(id.index);
    default:
        return id.index == 6 ? detail::e6_entry() : id.index == 7 ? detail::e7_entry() : detail::e8_entry();
    }
}

inline CatalogEntry entry(std::string_view name, const CatalogOptions& opt = {}) {
    return entry(parse_singularity(name), opt);
}

/// A1..A10, D4..D12, E6, E7, E8.
inline std::vector<SingularityId> standard_catalog() {
    std::vector<SingularityId> out;
    for (int n = 1; n <= 10; ++n) {
        out.push_back({Family::A, n});
    }
    for (int n = 2; n <= 6; ++n) {
        out.push_back({Family::D, 2 * n});
    }
    for (int n = 6; n <= 8; ++n) {
        out.push_back({Family::E, n});
    }
    return out;
}

struct PrintedDecomposition {
    LatticeVector vector;
    LatticeVector first;
    LatticeVector second;
    bool sum_valid = false;
    bool member = false;
};

/// The seven printed E8 sum identities, each checked exactly.
inline std::vector<PrintedDecomposition> e8_reducibility_table() {
    const std::vector<std::array<LatticeVector, 3>> printed{
        {{{4, 6, 8}, {2, 3, 4}, {2, 3, 4}}},   {{{5, 7, 11}, {4, 6, 9}, {1, 1, 2}}},
        {{{5, 8, 11}, {4, 7, 10}, {1, 1, 1}}}, {{{5, 9, 13}, {3, 5, 8}, {2, 4, 5}}},
        {{{6, 9, 13}, {3, 4, 6}, {3, 5, 7}}},  {{{5, 9, 14}, {3, 4, 6}, {3, 5, 8}}},
        {{{6, 10, 14}, {3, 5, 7}, {3, 5, 7}}},
    };
    const auto list = detail::e8_weight_list();
    std::vector<PrintedDecomposition> out;
    for (const auto& [v, a, b] : printed) {
        out.push_back({v, a, b, a + b == v, std::find(list.begin(), list.end(), v) != list.end()});
    }
    return out;
}

} // namespace duval

#endif
