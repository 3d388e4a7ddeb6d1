#ifndef DUVAL_NEWTON_HPP
#define DUVAL_NEWTON_HPP

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "polynomial.hpp"

namespace duval {

namespace detail {

inline void require_three_variables(const Polynomial& f) {
    if (f.variables().size() != 3) {
        throw std::invalid_argument("expected a polynomial in three variables");
    }
}

inline void require_nonzero(const Polynomial& f) {
    if (f.is_zero()) {
        throw std::invalid_argument("zero polynomial");
    }
}

inline void require_nonnegative(const LatticeVector& L) {
    if (!L.is_nonnegative()) {
        throw std::invalid_argument("covector must have nonnegative coordinates: " + to_string(L));
    }
}

inline LatticeVector exponent_point(const Polynomial::Exponent& e) {
    return {static_cast<Int>(e[0]), static_cast<Int>(e[1]), static_cast<Int>(e[2])};
}

} // namespace detail

/// Exponent vectors of the terms of f, sorted.
inline std::vector<LatticeVector> support(const Polynomial& f) {
    detail::require_three_variables(f);
    std::vector<LatticeVector> out;
    for (const auto& [e, c] : f.terms()) {
        out.push_back(detail::exponent_point(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct CovectorReport {
    LatticeVector covector;
    Int distance = 0;
    std::vector<LatticeVector> face_support;
};

/// d(L,f): the minimum of L over the support, and the face where it is attained.
inline CovectorReport covector_report(const LatticeVector& L, const Polynomial& f) {
    detail::require_nonzero(f);
    detail::require_nonnegative(L);
    CovectorReport r{L, 0, {}};
    bool first = true;
    for (const auto& p : support(f)) {
        const Int v = dot(L, p);
        if (first || v < r.distance) {
            r.distance = v;
            r.face_support.clear();
            first = false;
        }
        if (v == r.distance) {
            r.face_support.push_back(p);
        }
    }
    return r;
}

/// f_L: the terms of f on the face dual to L.
inline Polynomial face_restriction(const LatticeVector& L, const Polynomial& f) {
    const auto report = covector_report(L, f);
    Polynomial out(f.variables());
    for (const auto& [e, c] : f.terms()) {
        if (dot(L, detail::exponent_point(e)) == report.distance) {
            out.add_term(e, c);
        }
    }
    return out;
}

/// Monomial valuation: min over the support of h of a.i.
inline Int nu_monomial(const LatticeVector& a, const Polynomial& h) {
    return covector_report(a, h).distance;
}

/// Dimension of the face of NP^+(f) dual to L, counting the recession
/// directions e_i with L_i = 0.
inline int face_dimension(const LatticeVector& L, std::span<const LatticeVector> face_points) {
    std::vector<LatticeVector> dirs;
    for (std::size_t i = 1; i < face_points.size(); ++i) {
        dirs.push_back(face_points[i] - face_points[0]);
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (L[i] == 0) {
            dirs.push_back(unit_vector(i));
        }
    }
    return rank(dirs);
}

struct CompactFace {
    LatticeVector covector;
    std::vector<LatticeVector> support;
    int dimension = 0;
};

struct NewtonData {
    std::vector<LatticeVector> support;
    std::vector<LatticeVector> vertices;
    std::vector<LatticeVector> facet_normals;
    std::vector<CompactFace> compact_faces;
};

namespace detail {

// Primitive inward normals of the facets of NP^+(f). Every facet is spanned
// by two independent directions among support differences and unit vectors,
// so their cross products enumerate all candidates.
inline std::vector<LatticeVector> facet_normals(const Polynomial& f) {
    const auto pts = support(f);
    std::vector<LatticeVector> dirs{unit_vector(0), unit_vector(1), unit_vector(2)};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            dirs.push_back(pts[j] - pts[i]);
        }
    }
    std::vector<LatticeVector> out;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        for (std::size_t j = i + 1; j < dirs.size(); ++j) {
            const auto n = cross(dirs[i], dirs[j]);
            if (n.is_zero()) {
                continue;
            }
            for (const auto& cand : {n, -n}) {
                if (!cand.is_nonnegative()) {
                    continue;
                }
                const auto L = primitive(cand).vector;
                if (std::find(out.begin(), out.end(), L) != out.end()) {
                    continue;
                }
                const auto rep = covector_report(L, f);
                if (face_dimension(L, rep.face_support) == 2) {
                    out.push_back(L);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), GradedLess{});
    return out;
}

} // namespace detail

inline NewtonData newton_data(const Polynomial& f) {
    detail::require_nonzero(f);
    NewtonData d;
    d.support = support(f);
    d.facet_normals = detail::facet_normals(f);
    std::vector<Cone> normal_cones;
    for (const auto& p : d.support) {
        std::vector<LatticeVector> normals;
        for (const auto& L : d.facet_normals) {
            if (dot(L, p) == covector_report(L, f).distance) {
                normals.push_back(L);
            }
        }
        if (rank(normals) == 3) {
            d.vertices.push_back(p);
            normal_cones.emplace_back(normals);
        }
    }
    // Compact faces are dual to the cones of the normal fan whose relative
    // interior meets the open positive octant.
    std::vector<LatticeVector> probes;
    for (const auto& c : normal_cones) {
        LatticeVector sum;
        for (const auto& r : c.rays()) {
            sum = sum + r;
        }
        probes.push_back(sum);
        for (const auto& fct : c.facets()) {
            probes.push_back(fct.rays[0] + fct.rays[1]);
        }
        for (const auto& r : c.rays()) {
            probes.push_back(r);
        }
    }
    for (const auto& L : probes) {
        if (L[0] <= 0 || L[1] <= 0 || L[2] <= 0) {
            continue;
        }
        const auto rep = covector_report(L, f);
        const bool seen = std::any_of(d.compact_faces.begin(), d.compact_faces.end(),
                                      [&](const CompactFace& cf) { return cf.support == rep.face_support; });
        if (!seen) {
            d.compact_faces.push_back({primitive(L).vector, rep.face_support,
                                       face_dimension(L, rep.face_support)});
        }
    }
    std::sort(d.compact_faces.begin(), d.compact_faces.end(), [](const CompactFace& a, const CompactFace& b) {
        if (a.dimension != b.dimension) {
            return a.dimension > b.dimension;
        }
        return a.support < b.support;
    });
    return d;
}

/// The normal fan of NP^+(f) in the nonnegative octant. Maximal cones are the
/// normal cones of the vertices.
inline Fan dual_fan(const Polynomial& f) {
    detail::require_three_variables(f);
    detail::require_nonzero(f);
    const auto facets = detail::facet_normals(f);
    std::vector<Cone> cones;
    for (const auto& p : support(f)) {
        std::vector<LatticeVector> normals;
        for (const auto& L : facets) {
            if (dot(L, p) == covector_report(L, f).distance) {
                normals.push_back(L);
            }
        }
        if (rank(normals) == 3) {
            cones.emplace_back(normals);
        }
    }
    return Fan(std::move(cones), positive_octant());
}

struct NondegeneracyWitness {
    LatticeVector covector;
    Int prime = 0;
    std::array<Int, 3> point{};
};

struct NondegeneracyReport {
    std::vector<Int> primes;
    std::size_t faces_checked = 0;
    std::vector<NondegeneracyWitness> witnesses;

    bool witness_free() const { return witnesses.empty(); }
    static constexpr const char* caveat =
        "sampled over finite fields only; the absence of witnesses is evidence, not a proof";
};

namespace detail {

// Points of (F_p^*)^3 where g and its three partials vanish.
inline std::vector<std::array<Int, 3>> torus_singular_points(const Polynomial& g, Int p, std::size_t limit) {
    const ModularPolynomial G(g, p);
    const ModularPolynomial Gx(g.derivative(0), p);
    const ModularPolynomial Gy(g.derivative(1), p);
    const ModularPolynomial Gz(g.derivative(2), p);
    std::vector<std::array<Int, 3>> out;
    std::array<Int, 3> pt{};
    for (pt[0] = 1; pt[0] < p; ++pt[0]) {
        for (pt[1] = 1; pt[1] < p; ++pt[1]) {
            for (pt[2] = 1; pt[2] < p; ++pt[2]) {
                if (G(pt) == 0 && Gx(pt) == 0 && Gy(pt) == 0 && Gz(pt) == 0) {
                    out.push_back(pt);
                    if (out.size() >= limit) {
                        return out;
                    }
                }
            }
        }
    }
    return out;
}

inline void require_primes(std::span<const Int> primes, Int minimum) {
    if (primes.empty()) {
        throw std::invalid_argument("no primes given");
    }
    for (Int p : primes) {
        if (p < minimum) {
            throw std::invalid_argument("prime below " + std::to_string(minimum) + ": " + std::to_string(p));
        }
        if (!is_prime(p)) {
            throw std::invalid_argument("not a prime: " + std::to_string(p));
        }
    }
}

} // namespace detail

/// Searches every compact face restriction f_L for torus points over F_p
/// where f_L and its gradient vanish together.
inline NondegeneracyReport check_nondegenerate_sampled(const Polynomial& f, std::span<const Int> primes,
                                                       std::size_t witnesses_per_face = 1) {
    detail::require_primes(primes, 2);
    const auto data = newton_data(f);
    NondegeneracyReport report;
    report.primes.assign(primes.begin(), primes.end());
    for (const auto& face : data.compact_faces) {
        ++report.faces_checked;
        const auto g = face_restriction(face.covector, f);
        for (Int p : primes) {
            for (const auto& pt : detail::torus_singular_points(g, p, witnesses_per_face)) {
                report.witnesses.push_back({face.covector, p, pt});
            }
        }
    }
    return report;
}

} // namespace duval

#endif
