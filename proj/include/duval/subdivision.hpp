#ifndef DUVAL_SUBDIVISION_HPP
#define DUVAL_SUBDIVISION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lattice.hpp"

namespace duval {

struct InsertRay {
    LatticeVector ray;
    friend bool operator==(const InsertRay&, const InsertRay&) = default;
};

struct InsertWall {
    LatticeVector a;
    LatticeVector b;
    friend bool operator==(const InsertWall&, const InsertWall&) = default;
};

using SubdivisionStep = std::variant<InsertRay, InsertWall>;

inline std::string to_string(const SubdivisionStep& step) {
    if (const auto* r = std::get_if<InsertRay>(&step)) {
        return "insert_ray " + to_string(r->ray);
    }
    const auto& w = std::get<InsertWall>(step);
    return "insert_wall " + to_string(w.a) + " " + to_string(w.b);
}

class SubdivisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FanValidity {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

namespace detail {

inline bool facet_on_boundary(const Facet& f, const Cone& region) {
    for (const auto& n : region.halfspaces().inequalities) {
        bool on = true;
        for (const auto& r : f.rays) {
            on = on && dot(n, r) == 0;
        }
        if (on) {
            return true;
        }
    }
    return false;
}

// Whether cones (all of the region's dimension, inside it, meeting properly)
// cover the region. Every facet must lie on the region boundary or be shared
// with exactly one other cone; the union is then closed with no interior
// boundary, hence everything.
inline std::vector<std::string> coverage_gaps(const std::vector<Cone>& cones, const Cone& region) {
    std::vector<std::string> out;
    if (cones.empty()) {
        out.push_back("no cone inside " + to_string(region));
        return out;
    }
    if (region.dim() == 1) {
        return out;
    }
    std::map<std::vector<LatticeVector>, int> interior_facets;
    for (const auto& c : cones) {
        for (const auto& f : c.facets()) {
            if (!facet_on_boundary(f, region)) {
                ++interior_facets[f.rays];
            }
        }
    }
    for (const auto& [rays, count] : interior_facets) {
        if (count != 2) {
            out.push_back("facet " + to_string(Cone(rays)) + " of " + to_string(region) + " bounds " +
                          std::to_string(count) + " cone(s)");
        }
    }
    return out;
}

} // namespace detail

/// Every ray of `inner` lies in `outer`.
inline bool cone_inside(const Cone& inner, const Cone& outer) {
    return std::all_of(inner.rays().begin(), inner.rays().end(),
                       [&](const LatticeVector& r) { return outer.contains(r); });
}

/// Checks pairwise proper intersection, ray primitivity, maximality, and
/// coverage of the declared support.
inline FanValidity validate_fan(const Fan& fan) {
    FanValidity report;
    const auto& cones = fan.maximal_cones();
    for (const auto& c : cones) {
        for (const auto& r : c.rays()) {
            if (!is_primitive(r)) {
                report.violations.push_back("ray " + to_string(r) + " is not primitive");
            }
        }
        for (const auto& r : c.rays()) {
            if (c.contains(-r)) {
                report.violations.push_back(to_string(c) + " is not strongly convex");
            }
        }
    }
    for (std::size_t i = 0; i < cones.size(); ++i) {
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            if (cones[i] == cones[j]) {
                report.violations.push_back("duplicate cone " + to_string(cones[i]));
            } else if (!intersection_is_common_face(cones[i], cones[j])) {
                report.violations.push_back(to_string(cones[i]) + " and " + to_string(cones[j]) +
                                            " do not meet in a common face");
            } else if (cone_inside(cones[i], cones[j]) || cone_inside(cones[j], cones[i])) {
                report.violations.push_back(to_string(cones[i]) + " and " + to_string(cones[j]) +
                                            " are not both maximal");
            }
        }
    }
    if (fan.support()) {
        const Cone& region = *fan.support();
        bool ok = true;
        for (const auto& c : cones) {
            if (c.dim() != region.dim() || !cone_inside(c, region)) {
                report.violations.push_back(to_string(c) + " is not a full-dimensional cone inside the support");
                ok = false;
            }
        }
        if (ok) {
            for (auto& gap : detail::coverage_gaps(cones, region)) {
                report.violations.push_back(std::move(gap));
            }
        }
    }
    return report;
}

/// Every maximal cone of `fine` lies in a maximal cone of `coarse`, and the
/// cones inside each coarse cone cover it.
inline bool refines(const Fan& fine, const Fan& coarse) {
    std::vector<std::vector<Cone>> parts(coarse.maximal_cones().size());
    for (const auto& c : fine.maximal_cones()) {
        bool placed = false;
        for (std::size_t k = 0; k < coarse.maximal_cones().size(); ++k) {
            if (cone_inside(c, coarse.maximal_cones()[k])) {
                if (c.dim() == coarse.maximal_cones()[k].dim()) {
                    parts[k].push_back(c);
                }
                placed = true;
            }
        }
        if (!placed) {
            return false;
        }
    }
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (!detail::coverage_gaps(parts[k], coarse.maximal_cones()[k]).empty()) {
            return false;
        }
    }
    return true;
}

/// Star subdivision at v: every cone containing v is replaced by the joins
/// of v with its facets that do not contain v.
inline Fan star_subdivide(const Fan& fan, const LatticeVector& v) {
    if (!is_primitive(v)) {
        throw SubdivisionError("star subdivision needs a primitive vector, got " + to_string(v));
    }
    if (fan.has_ray(v)) {
        return fan;
    }
    std::vector<Cone> out;
    bool found = false;
    for (const auto& c : fan.maximal_cones()) {
        if (!c.contains(v)) {
            out.push_back(c);
            continue;
        }
        found = true;
        if (c.dim() < 3) {
            throw SubdivisionError("star subdivision of lower-dimensional cone " + to_string(c) +
                                   " is not supported");
        }
        std::vector<const Facet*> away;
        for (const auto& f : c.facets()) {
            if (dot(f.normal, v) != 0) {
                away.push_back(&f);
            }
        }
        if (!c.is_simplicial() && away.size() == c.facets().size()) {
            throw SubdivisionError(to_string(v) + " is interior to the non-simplicial cone " + to_string(c) +
                                   "; insert walls first");
        }
        for (const auto* f : away) {
            std::vector<LatticeVector> rays = f->rays;
            rays.push_back(v);
            out.emplace_back(std::move(rays));
        }
    }
    if (!found) {
        throw SubdivisionError(to_string(v) + " lies outside the fan support");
    }
    return Fan(std::move(out), fan.support());
}

/// Splits the non-simplicial maximal cone having rays a and b along the
/// plane through them.
inline Fan insert_wall(const Fan& fan, const LatticeVector& a, const LatticeVector& b) {
    std::vector<Cone> out;
    bool split = false;
    for (const auto& c : fan.maximal_cones()) {
        if (split || !c.has_ray(a) || !c.has_ray(b) || c.is_simplicial() || c.dim() != 3) {
            out.push_back(c);
            continue;
        }
        for (const auto& f : c.facets()) {
            if (std::find(f.rays.begin(), f.rays.end(), a) != f.rays.end() &&
                std::find(f.rays.begin(), f.rays.end(), b) != f.rays.end()) {
                throw SubdivisionError("wall " + to_string(a) + " " + to_string(b) +
                                       " does not split: the rays are adjacent on the boundary of " +
                                       to_string(c));
            }
        }
        const auto cyc = c.cyclic_rays();
        const std::size_t n = cyc.size();
        const auto ia = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), a) - cyc.begin());
        std::vector<LatticeVector> first;
        std::vector<LatticeVector> second;
        std::size_t k = ia;
        do {
            first.push_back(cyc[k]);
            k = (k + 1) % n;
        } while (cyc[k] != b);
        first.push_back(b);
        do {
            second.push_back(cyc[k]);
            k = (k + 1) % n;
        } while (cyc[k] != a);
        second.push_back(a);
        out.emplace_back(first);
        out.emplace_back(second);
        split = true;
    }
    if (!split) {
        throw SubdivisionError("rays " + to_string(a) + " and " + to_string(b) +
                               " do not lie in a common non-simplicial maximal cone");
    }
    return Fan(std::move(out), fan.support());
}

inline Fan apply_step(const Fan& fan, const SubdivisionStep& step) {
    if (const auto* r = std::get_if<InsertRay>(&step)) {
        return star_subdivide(fan, r->ray);
    }
    const auto& w = std::get<InsertWall>(step);
    return insert_wall(fan, w.a, w.b);
}

struct ConeDeterminant {
    Cone cone;
    BigInt determinant;
};

/// det3 of the (lexicographically ordered) rays of every maximal cone.
inline std::vector<ConeDeterminant> regularity_report(const Fan& fan) {
    std::vector<ConeDeterminant> out;
    for (const auto& c : fan.maximal_cones()) {
        if (c.dim() != 3 || !c.is_simplicial()) {
            throw SubdivisionError("regularity report needs simplicial 3-dimensional cones, got " + to_string(c));
        }
        out.push_back({c, det3(c.rays()[0], c.rays()[1], c.rays()[2])});
    }
    return out;
}

inline bool is_regular_fan(const Fan& fan) {
    return std::all_of(fan.maximal_cones().begin(), fan.maximal_cones().end(),
                       [](const Cone& c) { return c.dim() == 3 && is_regular_cone(c); });
}

/// Sum of |det| over any triangulation of a 3-dimensional cone.
inline BigInt normalized_volume(const Cone& c) {
    if (c.dim() != 3) {
        return 0;
    }
    BigInt total = 0;
    for (const auto& s : triangulate(c)) {
        total += abs(det3(s.rays()[0], s.rays()[1], s.rays()[2]));
    }
    return total;
}

/// Outcome of running a subdivision step list on a dual fan.
struct ResolutionFanResult {
    std::string label;
    Fan fan;
    std::vector<LatticeVector> inserted_rays;
    bool valid = false;
    bool regular = false;
    bool refines_dual_fan = false;
    std::vector<LatticeVector> boundary_weight_rays;
    /// The fan before the first step and after every step.
    std::vector<Fan> stages;
};

/// The vectors that lie on some 2-dimensional cone of `gamma`.
inline std::vector<LatticeVector> boundary_weight_rays(const Fan& gamma, const std::vector<LatticeVector>& rays) {
    const auto walls = gamma.two_dimensional_cones();
    std::vector<LatticeVector> out;
    for (const auto& r : rays) {
        const bool on_wall =
            std::any_of(walls.begin(), walls.end(), [&](const Cone& w) { return w.contains(r); });
        if (on_wall && std::find(out.begin(), out.end(), r) == out.end()) {
            out.push_back(r);
        }
    }
    return out;
}

} // namespace duval

#endif
