#ifndef DUVAL_GSIGMA_HPP
#define DUVAL_GSIGMA_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"
#include "subdivision.hpp"

namespace duval {

struct IrreducibilityVerdict {
    LatticeVector vector;
    Cone cone;
    bool irreducible = true;
    std::optional<std::pair<LatticeVector, LatticeVector>> witness;
};

namespace detail {

inline bool in_octant(const Cone& c) {
    return std::all_of(c.rays().begin(), c.rays().end(), [](const LatticeVector& r) { return r.is_nonnegative(); });
}

inline Int squared_norm(const LatticeVector& v) { return dot(v, v); }

} // namespace detail

/// Searches u with 0 <= u <= v coordinatewise, u and v - u nonzero lattice
/// points of c. Among all splits the most balanced one (smallest |2u - v|,
/// then lexicographically smallest u) is reported.
inline IrreducibilityVerdict is_irreducible(const LatticeVector& v, const Cone& c) {
    if (v.is_zero()) {
        throw std::invalid_argument("irreducibility of the zero vector is undefined");
    }
    if (!detail::in_octant(c)) {
        throw std::invalid_argument("irreducibility search needs a cone inside the nonnegative octant");
    }
    if (!c.contains(v)) {
        throw std::invalid_argument(to_string(v) + " is not in " + to_string(c));
    }
    IrreducibilityVerdict out{v, c, true, std::nullopt};
    std::optional<Int> best;
    LatticeVector u;
    for (u[0] = 0; u[0] <= v[0]; ++u[0]) {
        for (u[1] = 0; u[1] <= v[1]; ++u[1]) {
            for (u[2] = 0; u[2] <= v[2]; ++u[2]) {
                if (u.is_zero() || u == v) {
                    continue;
                }
                const auto w = v - u;
                if (!c.contains(u) || !c.contains(w)) {
                    continue;
                }
                const Int score = detail::squared_norm(u - w);
                if (!best || score < *best) {
                    best = score;
                    out.witness = std::make_pair(u, w);
                }
            }
        }
    }
    out.irreducible = !out.witness.has_value();
    return out;
}

struct ReducibleCertificate {
    LatticeVector point;
    LatticeVector generator;
    LatticeVector remainder;
};

struct HilbertBasis {
    std::vector<LatticeVector> generators;
    /// Enumeration box: every coordinate j ranges over [low[j], high[j]].
    std::array<Int, 3> low{};
    std::array<Int, 3> high{};
    std::size_t points_checked = 0;
    /// One splitting for each non-generator lattice point of the box.
    std::vector<ReducibleCertificate> reducible;
};

namespace detail {

// Strictly positive on c minus the origin: the sum of the inward facet normals.
inline LatticeVector positive_functional(const Cone& c) {
    LatticeVector L;
    for (const auto& n : c.halfspaces().inequalities) {
        L = L + n;
    }
    return L;
}

inline std::optional<HilbertBasis> hilbert_basis_in_box(const Cone& c, const std::array<Int, 3>& low,
                                                        const std::array<Int, 3>& high) {
    const auto L = positive_functional(c);
    std::vector<std::pair<Int, LatticeVector>> pts;
    LatticeVector p;
    for (p[0] = low[0]; p[0] <= high[0]; ++p[0]) {
        for (p[1] = low[1]; p[1] <= high[1]; ++p[1]) {
            for (p[2] = low[2]; p[2] <= high[2]; ++p[2]) {
                if (!p.is_zero() && c.contains(p)) {
                    pts.emplace_back(dot(L, p), p);
                }
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    HilbertBasis hb;
    hb.low = low;
    hb.high = high;
    hb.points_checked = pts.size();
    // Sieve: a point is reducible iff subtracting some earlier generator
    // stays in the cone.
    for (const auto& [level, q] : pts) {
        bool reducible = false;
        for (const auto& g : hb.generators) {
            const auto rest = q - g;
            if (c.contains(rest)) {
                hb.reducible.push_back({q, g, rest});
                reducible = true;
                break;
            }
        }
        if (!reducible) {
            hb.generators.push_back(q);
        }
    }
    // Closure certificate: every box point is a sum of generators.
    std::map<LatticeVector, bool> representable;
    for (const auto& [level, q] : pts) {
        bool ok = std::find(hb.generators.begin(), hb.generators.end(), q) != hb.generators.end();
        for (std::size_t i = 0; i < hb.generators.size() && !ok; ++i) {
            const auto rest = q - hb.generators[i];
            const auto it = representable.find(rest);
            ok = it != representable.end() && it->second;
        }
        if (!ok) {
            return std::nullopt;
        }
        representable[q] = true;
    }
    std::sort(hb.generators.begin(), hb.generators.end(), GradedLess{});
    return hb;
}

} // namespace detail

/// G_sigma by boxed enumeration. The box is bounded coordinatewise by the
/// sum of the ray generators: every irreducible point lies in the half-open
/// parallelepiped of some simplex of a triangulation, or is a ray.
inline HilbertBasis minimal_generators_certified(const Cone& c) {
    if (c.dim() != 3) {
        throw std::invalid_argument("minimal generators need a 3-dimensional cone, got " + to_string(c));
    }
    std::array<Int, 3> low{};
    std::array<Int, 3> high{};
    for (const auto& r : c.rays()) {
        for (std::size_t j = 0; j < 3; ++j) {
            high[j] = checked_add(high[j], r[j] > 0 ? r[j] : 0);
            low[j] = checked_sub(low[j], r[j] < 0 ? -r[j] : 0);
        }
    }
    for (int attempt = 0; attempt < 4; ++attempt) {
        if (auto hb = detail::hilbert_basis_in_box(c, low, high)) {
            return *hb;
        }
        for (std::size_t j = 0; j < 3; ++j) {
            high[j] = checked_mul(high[j], 2);
            low[j] = checked_mul(low[j], 2);
        }
    }
    throw std::runtime_error("generator closure check kept failing for " + to_string(c));
}

inline std::vector<LatticeVector> minimal_generators(const Cone& c) {
    return minimal_generators_certified(c).generators;
}

struct RayVerdict {
    LatticeVector ray;
    bool essential = false;
    bool dual_fan_ray = false;
    /// Maximal cones of the dual fan containing the ray, with the verdict in each.
    std::vector<IrreducibilityVerdict> checks;
    std::optional<std::pair<LatticeVector, LatticeVector>> witness;
};

struct MinimalityVerdict {
    std::vector<RayVerdict> per_ray;
    bool is_g_resolution = false;

    std::vector<LatticeVector> reducible_rays() const {
        std::vector<LatticeVector> out;
        for (const auto& r : per_ray) {
            if (!r.essential) {
                out.push_back(r.ray);
            }
        }
        return out;
    }
};

/// A ray is essential if it is a ray of gamma or irreducible in at least one
/// maximal cone of gamma containing it.
inline MinimalityVerdict minimality_verdict(const ResolutionFanResult& res, const Fan& gamma) {
    if (!refines(res.fan, gamma)) {
        throw std::invalid_argument("resolution fan does not refine the dual fan");
    }
    MinimalityVerdict out;
    out.is_g_resolution = true;
    for (const auto& v : res.inserted_rays) {
        RayVerdict rv;
        rv.ray = v;
        rv.dual_fan_ray = gamma.has_ray(v);
        if (rv.dual_fan_ray) {
            rv.essential = true;
        } else {
            for (const auto& c : gamma.maximal_cones()) {
                if (c.dim() == 3 && c.contains(v)) {
                    rv.checks.push_back(is_irreducible(v, c));
                    if (rv.checks.back().irreducible) {
                        rv.essential = true;
                    } else if (!rv.witness) {
                        rv.witness = rv.checks.back().witness;
                    }
                }
            }
        }
        if (rv.essential) {
            rv.witness.reset();
        }
        out.is_g_resolution = out.is_g_resolution && rv.essential;
        out.per_ray.push_back(std::move(rv));
    }
    return out;
}

} // namespace duval

#endif
