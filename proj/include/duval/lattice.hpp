#ifndef DUVAL_LATTICE_HPP
#define DUVAL_LATTICE_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace duval {

/// A point of the rank-3 lattice Z^3. Used for rays, covectors, exponents
/// and weight vectors alike.
struct LatticeVector {
    std::array<Int, 3> c{};

    constexpr LatticeVector() = default;
    constexpr LatticeVector(Int x, Int y, Int z) : c{x, y, z} {}

    constexpr Int operator[](std::size_t i) const { return c[i]; }
    constexpr Int& operator[](std::size_t i) { return c[i]; }

    constexpr bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
    constexpr bool is_nonnegative() const { return c[0] >= 0 && c[1] >= 0 && c[2] >= 0; }

    Int coordinate_sum() const { return checked_add(checked_add(c[0], c[1]), c[2]); }

    friend constexpr auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

inline constexpr LatticeVector unit_vector(std::size_t i) {
    LatticeVector v;
    v.c[i] = 1;
    return v;
}

inline LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return {checked_add(a[0], b[0]), checked_add(a[1], b[1]), checked_add(a[2], b[2])};
}

inline LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    return {checked_sub(a[0], b[0]), checked_sub(a[1], b[1]), checked_sub(a[2], b[2])};
}

inline LatticeVector operator-(const LatticeVector& a) {
    return {checked_sub(0, a[0]), checked_sub(0, a[1]), checked_sub(0, a[2])};
}

inline LatticeVector operator*(Int k, const LatticeVector& a) {
    return {checked_mul(k, a[0]), checked_mul(k, a[1]), checked_mul(k, a[2])};
}

inline Int dot(const LatticeVector& a, const LatticeVector& b) {
    return checked_add(checked_add(checked_mul(a[0], b[0]), checked_mul(a[1], b[1])),
                       checked_mul(a[2], b[2]));
}

inline LatticeVector cross(const LatticeVector& a, const LatticeVector& b) {
    return {checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1])),
            checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2])),
            checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]))};
}

inline std::string to_string(const LatticeVector& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    return os << to_string(v);
}

/// Graded-lexicographic order: coordinate sum first, then lexicographic.
struct GradedLess {
    bool operator()(const LatticeVector& a, const LatticeVector& b) const {
        const Int sa = a.coordinate_sum();
        const Int sb = b.coordinate_sum();
        if (sa != sb) {
            return sa < sb;
        }
        return a < b;
    }
};

struct PrimitiveForm {
    LatticeVector vector;
    Int multiplier = 1;
};

/// Splits v into multiplier * (primitive vector).
inline PrimitiveForm primitive(const LatticeVector& v) {
    if (v.is_zero()) {
        throw std::invalid_argument("zero vector has no primitive form");
    }
    const Int g = abs_gcd(abs_gcd(v[0], v[1]), v[2]);
    return {{v[0] / g, v[1] / g, v[2] / g}, g};
}

inline bool is_primitive(const LatticeVector& v) {
    return !v.is_zero() && abs_gcd(abs_gcd(v[0], v[1]), v[2]) == 1;
}

/// Exact determinant of the 3x3 matrix with columns a, b, c.
inline BigInt det3(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
    const BigInt a0 = a[0], a1 = a[1], a2 = a[2];
    const BigInt b0 = b[0], b1 = b[1], b2 = b[2];
    const BigInt c0 = c[0], c1 = c[1], c2 = c[2];
    return a0 * (b1 * c2 - c1 * b2) - b0 * (a1 * c2 - c1 * a2) + c0 * (a1 * b2 - b1 * a2);
}

/// Rank of a set of lattice vectors (0..3).
inline int rank(std::span<const LatticeVector> vs) {
    const LatticeVector* first = nullptr;
    for (const auto& v : vs) {
        if (!v.is_zero()) {
            first = &v;
            break;
        }
    }
    if (first == nullptr) {
        return 0;
    }
    std::optional<LatticeVector> normal;
    for (const auto& v : vs) {
        const auto n = cross(*first, v);
        if (!n.is_zero()) {
            normal = n;
            break;
        }
    }
    if (!normal) {
        return 1;
    }
    for (const auto& v : vs) {
        if (dot(*normal, v) != 0) {
            return 3;
        }
    }
    return 2;
}

/// A point of Q^3; cpp_rational keeps every entry reduced with a positive
/// denominator.
struct RationalVector {
    std::array<Rational, 3> c{};

    RationalVector() = default;
    RationalVector(Rational x, Rational y, Rational z) : c{std::move(x), std::move(y), std::move(z)} {}
    explicit RationalVector(const LatticeVector& v) : c{Rational(v[0]), Rational(v[1]), Rational(v[2])} {}

    const Rational& operator[](std::size_t i) const { return c[i]; }

    friend bool operator==(const RationalVector&, const RationalVector&) = default;
};

inline RationalVector operator+(const RationalVector& a, const RationalVector& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline RationalVector operator*(const Rational& k, const RationalVector& a) {
    return {k * a[0], k * a[1], k * a[2]};
}

inline RationalVector operator*(const Rational& k, const LatticeVector& a) {
    return k * RationalVector(a);
}

/// Coefficients (l1, l2, l3) with v = l1*a + l2*b + l3*c, by Cramer's rule.
inline std::array<Rational, 3> coordinates_in_basis(const LatticeVector& a, const LatticeVector& b,
                                                    const LatticeVector& c, const LatticeVector& v) {
    const BigInt d = det3(a, b, c);
    if (d == 0) {
        throw std::invalid_argument("basis vectors are linearly dependent");
    }
    return {Rational(det3(v, b, c), d), Rational(det3(a, v, c), d), Rational(det3(a, b, v), d)};
}

namespace detail {

// Nonnegative-combination test for a linearly independent set of at most
// three vectors.
inline bool independent_cone_contains(std::span<const LatticeVector> gens, const LatticeVector& v) {
    switch (gens.size()) {
    case 1: {
        const auto& a = gens[0];
        return cross(a, v).is_zero() && dot(a, v) >= 0;
    }
    case 2: {
        const auto& a = gens[0];
        const auto& b = gens[1];
        const auto n = cross(a, b);
        if (dot(n, v) != 0) {
            return false;
        }
        // v = s a + t b  =>  cross(v, b) = s n, cross(a, v) = t n.
        return dot(cross(v, b), n) >= 0 && dot(cross(a, v), n) >= 0;
    }
    case 3: {
        const BigInt d = det3(gens[0], gens[1], gens[2]);
        const BigInt d0 = det3(v, gens[1], gens[2]);
        const BigInt d1 = det3(gens[0], v, gens[2]);
        const BigInt d2 = det3(gens[0], gens[1], v);
        const int s = d > 0 ? 1 : -1;
        return s * d0 >= 0 && s * d1 >= 0 && s * d2 >= 0;
    }
    default:
        return v.is_zero();
    }
}

// Membership in the cone generated by arbitrary vectors. By Caratheodory it
// suffices to try every linearly independent subset of size <= 3.
inline bool generated_cone_contains(std::span<const LatticeVector> gens, const LatticeVector& v) {
    if (v.is_zero()) {
        return true;
    }
    const std::size_t n = gens.size();
    std::vector<LatticeVector> subset;
    for (std::size_t i = 0; i < n; ++i) {
        subset = {gens[i]};
        if (independent_cone_contains(subset, v)) {
            return true;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            subset = {gens[i], gens[j]};
            if (rank(subset) == 2 && independent_cone_contains(subset, v)) {
                return true;
            }
            for (std::size_t k = j + 1; k < n; ++k) {
                subset = {gens[i], gens[j], gens[k]};
                if (rank(subset) == 3 && independent_cone_contains(subset, v)) {
                    return true;
                }
            }
        }
    }
    return false;
}

inline LatticeVector primitive_or_zero(const LatticeVector& v) {
    return v.is_zero() ? v : primitive(v).vector;
}

} // namespace detail

/// Inequalities n.v >= 0 and equations n.v == 0 cutting out a cone.
struct Halfspaces {
    std::vector<LatticeVector> inequalities;
    std::vector<LatticeVector> equations;

    bool contains(const LatticeVector& v) const {
        for (const auto& n : equations) {
            if (dot(n, v) != 0) {
                return false;
            }
        }
        for (const auto& n : inequalities) {
            if (dot(n, v) < 0) {
                return false;
            }
        }
        return true;
    }
};

/// A facet of a cone: its inward normal and the rays lying on it.
struct Facet {
    LatticeVector normal;
    std::vector<LatticeVector> rays;
};

/// Strongly convex rational polyhedral cone, stored by its primitive
/// extremal rays in lexicographic order.
class Cone {
public:
    /// The zero cone.
    Cone() = default;

    explicit Cone(std::vector<LatticeVector> generators) {
        std::vector<LatticeVector> gens;
        for (const auto& g : generators) {
            const auto p = primitive(g).vector;
            if (std::find(gens.begin(), gens.end(), p) == gens.end()) {
                gens.push_back(p);
            }
        }
        for (const auto& g : gens) {
            if (detail::generated_cone_contains(gens, -g)) {
                throw std::invalid_argument("cone is not strongly convex: contains the line through " +
                                            to_string(g));
            }
        }
        // Drop generators that are not extremal, one at a time.
        for (std::size_t i = 0; i < gens.size();) {
            std::vector<LatticeVector> others;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if (j != i) {
                    others.push_back(gens[j]);
                }
            }
            if (detail::generated_cone_contains(others, gens[i])) {
                gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                ++i;
            }
        }
        std::sort(gens.begin(), gens.end());
        rays_ = std::move(gens);
        dim_ = rank(rays_);
        build_halfspaces();
    }

    Cone(std::initializer_list<LatticeVector> generators) : Cone(std::vector<LatticeVector>(generators)) {}

    const std::vector<LatticeVector>& rays() const { return rays_; }
    int dim() const { return dim_; }
    bool is_simplicial() const { return static_cast<int>(rays_.size()) == dim_; }
    bool has_ray(const LatticeVector& v) const {
        return std::binary_search(rays_.begin(), rays_.end(), v);
    }

    const Halfspaces& halfspaces() const { return halfspaces_; }
    const std::vector<Facet>& facets() const { return facets_; }

    /// Halfspace membership test.
    bool contains(const LatticeVector& v) const { return halfspaces_.contains(v); }

    /// Rays in cyclic order around the boundary (dim 3 only).
    std::vector<LatticeVector> cyclic_rays() const {
        if (dim_ != 3) {
            return rays_;
        }
        std::vector<LatticeVector> order{rays_.front()};
        std::optional<LatticeVector> previous;
        while (order.size() < rays_.size()) {
            const auto& current = order.back();
            bool advanced = false;
            for (const auto& f : facets_) {
                if (std::find(f.rays.begin(), f.rays.end(), current) == f.rays.end()) {
                    continue;
                }
                const auto& other = f.rays[0] == current ? f.rays[1] : f.rays[0];
                if (previous && other == *previous) {
                    continue;
                }
                previous = current;
                order.push_back(other);
                advanced = true;
                break;
            }
            if (!advanced) {
                throw std::logic_error("cone boundary is not a cycle");
            }
        }
        return order;
    }

    friend bool operator==(const Cone& a, const Cone& b) { return a.rays_ == b.rays_; }
    friend bool operator<(const Cone& a, const Cone& b) {
        return std::lexicographical_compare(a.rays_.begin(), a.rays_.end(), b.rays_.begin(), b.rays_.end(),
                                            GradedLess{});
    }

private:
    void build_halfspaces() {
        halfspaces_ = {};
        facets_.clear();
        if (dim_ == 3) {
            for (std::size_t i = 0; i < rays_.size(); ++i) {
                for (std::size_t j = i + 1; j < rays_.size(); ++j) {
                    auto n = cross(rays_[i], rays_[j]);
                    if (n.is_zero()) {
                        continue;
                    }
                    bool nonneg = true;
                    bool nonpos = true;
                    for (const auto& r : rays_) {
                        const Int s = dot(n, r);
                        nonneg = nonneg && s >= 0;
                        nonpos = nonpos && s <= 0;
                    }
                    if (!nonneg && !nonpos) {
                        continue;
                    }
                    n = primitive(nonneg ? n : -n).vector;
                    if (std::find(halfspaces_.inequalities.begin(), halfspaces_.inequalities.end(), n) !=
                        halfspaces_.inequalities.end()) {
                        continue;
                    }
                    Facet f{n, {}};
                    for (const auto& r : rays_) {
                        if (dot(n, r) == 0) {
                            f.rays.push_back(r);
                        }
                    }
                    halfspaces_.inequalities.push_back(n);
                    facets_.push_back(std::move(f));
                }
            }
        } else if (dim_ == 2) {
            const auto& a = rays_[0];
            const auto& b = rays_[1];
            const auto n0 = primitive(cross(a, b)).vector;
            halfspaces_.equations.push_back(n0);
            auto m1 = cross(n0, a);
            if (dot(m1, b) < 0) {
                m1 = -m1;
            }
            auto m2 = cross(n0, b);
            if (dot(m2, a) < 0) {
                m2 = -m2;
            }
            halfspaces_.inequalities.push_back(primitive(m1).vector);
            halfspaces_.inequalities.push_back(primitive(m2).vector);
            facets_.push_back({halfspaces_.inequalities[0], {a}});
            facets_.push_back({halfspaces_.inequalities[1], {b}});
        } else if (dim_ == 1) {
            const auto& a = rays_[0];
            for (std::size_t i = 0; i < 3 && halfspaces_.equations.size() < 2; ++i) {
                const auto n = cross(a, unit_vector(i));
                if (n.is_zero()) {
                    continue;
                }
                std::vector<LatticeVector> probe = halfspaces_.equations;
                probe.push_back(n);
                if (rank(probe) == static_cast<int>(probe.size())) {
                    halfspaces_.equations.push_back(primitive(n).vector);
                }
            }
            halfspaces_.inequalities.push_back(a);
            facets_.push_back({a, {}});
        } else {
            halfspaces_.equations = {unit_vector(0), unit_vector(1), unit_vector(2)};
        }
    }

    std::vector<LatticeVector> rays_;
    int dim_ = 0;
    Halfspaces halfspaces_{{}, {unit_vector(0), unit_vector(1), unit_vector(2)}};
    std::vector<Facet> facets_;
};

inline std::string to_string(const Cone& c) {
    std::string out = "<";
    for (std::size_t i = 0; i < c.rays().size(); ++i) {
        out += (i ? "," : "") + to_string(c.rays()[i]);
    }
    return out + ">";
}

inline std::ostream& operator<<(std::ostream& os, const Cone& c) { return os << to_string(c); }

inline Cone positive_octant() { return Cone{unit_vector(0), unit_vector(1), unit_vector(2)}; }

/// Fan triangulation of a 3-dimensional cone from the ray at `apex` in the
/// cyclic boundary order.
inline std::vector<Cone> triangulate(const Cone& c, std::size_t apex = 0) {
    if (c.dim() != 3 || c.is_simplicial()) {
        return {c};
    }
    const auto cyc = c.cyclic_rays();
    const std::size_t n = cyc.size();
    std::vector<Cone> out;
    const auto& a = cyc[apex % n];
    for (std::size_t k = 1; k + 1 < n; ++k) {
        out.push_back(Cone{a, cyc[(apex + k) % n], cyc[(apex + k + 1) % n]});
    }
    return out;
}

/// |det| == 1 for simplicial 3-cones, primitive 2x2 minors for 2-cones.
inline bool is_regular_cone(const Cone& c) {
    const auto& r = c.rays();
    switch (c.dim()) {
    case 3:
        if (r.size() != 3) {
            return false;
        }
        return abs(det3(r[0], r[1], r[2])) == 1;
    case 2:
        return is_primitive(cross(r[0], r[1]));
    case 1:
        return is_primitive(r[0]);
    default:
        return true;
    }
}

/// Exact membership: Cramer's rule on simplicial 3-cones, a triangulation
/// for non-simplicial ones, a direct solve in lower dimension.
inline bool cone_contains(const Cone& c, const LatticeVector& v) {
    if (c.dim() == 3) {
        for (const auto& simplex : triangulate(c)) {
            if (detail::independent_cone_contains(simplex.rays(), v)) {
                return true;
            }
        }
        return false;
    }
    return detail::generated_cone_contains(c.rays(), v);
}

namespace detail {

// Extreme rays of {v : H.v >= 0, E.v == 0}, assumed pointed.
inline std::vector<LatticeVector> rays_from_halfspaces(const Halfspaces& h) {
    std::vector<LatticeVector> normals = h.inequalities;
    normals.insert(normals.end(), h.equations.begin(), h.equations.end());
    std::vector<LatticeVector> out;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        for (std::size_t j = i + 1; j < normals.size(); ++j) {
            const auto d = cross(normals[i], normals[j]);
            if (d.is_zero()) {
                continue;
            }
            for (const auto& cand : {d, -d}) {
                if (h.contains(cand)) {
                    const auto p = primitive(cand).vector;
                    if (std::find(out.begin(), out.end(), p) == out.end()) {
                        out.push_back(p);
                    }
                }
            }
        }
    }
    return out;
}

// Whether `face` (a subcone of c) is a face of c: it must coincide with the
// smallest face of c containing a relative-interior point of it.
inline bool is_face_of(const Cone& face, const Cone& c) {
    if (face.rays().empty()) {
        return true;
    }
    LatticeVector p;
    for (const auto& r : face.rays()) {
        p = p + r;
    }
    std::vector<LatticeVector> tight;
    for (const auto& n : c.halfspaces().inequalities) {
        if (dot(n, p) == 0) {
            tight.push_back(n);
        }
    }
    std::vector<LatticeVector> face_rays;
    for (const auto& r : c.rays()) {
        bool on = true;
        for (const auto& n : tight) {
            on = on && dot(n, r) == 0;
        }
        if (on) {
            face_rays.push_back(r);
        }
    }
    return face_rays == face.rays();
}

} // namespace detail

/// The cone c1 ∩ c2, from the union of both halfspace descriptions.
inline Cone intersection(const Cone& a, const Cone& b) {
    Halfspaces h = a.halfspaces();
    h.inequalities.insert(h.inequalities.end(), b.halfspaces().inequalities.begin(),
                          b.halfspaces().inequalities.end());
    h.equations.insert(h.equations.end(), b.halfspaces().equations.begin(), b.halfspaces().equations.end());
    const auto rays = detail::rays_from_halfspaces(h);
    return rays.empty() ? Cone{} : Cone(rays);
}

inline bool intersection_is_common_face(const Cone& a, const Cone& b) {
    if (a == b) {
        return true;
    }
    const Cone meet = intersection(a, b);
    return detail::is_face_of(meet, a) && detail::is_face_of(meet, b);
}

/// A fan given by its maximal cones. Faces are derived on demand.
class Fan {
public:
    Fan() = default;

    explicit Fan(std::vector<Cone> maximal_cones, std::optional<Cone> support = std::nullopt)
        : cones_(std::move(maximal_cones)), support_(std::move(support)) {
        std::sort(cones_.begin(), cones_.end());
        for (const auto& c : cones_) {
            rays_.insert(rays_.end(), c.rays().begin(), c.rays().end());
        }
        std::sort(rays_.begin(), rays_.end(), GradedLess{});
        rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
    }

    const std::vector<Cone>& maximal_cones() const { return cones_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const std::optional<Cone>& support() const { return support_; }

    bool has_ray(const LatticeVector& v) const {
        return std::binary_search(rays_.begin(), rays_.end(), v, GradedLess{});
    }

    /// Index of a ray in rays(), or npos.
    std::size_t ray_index(const LatticeVector& v) const {
        const auto it = std::lower_bound(rays_.begin(), rays_.end(), v, GradedLess{});
        return it != rays_.end() && *it == v ? static_cast<std::size_t>(it - rays_.begin()) : npos;
    }

    /// Every 2-dimensional cone of the fan (walls and boundary faces).
    std::vector<Cone> two_dimensional_cones() const {
        std::vector<Cone> out;
        for (const auto& c : cones_) {
            if (c.dim() != 3) {
                continue;
            }
            for (const auto& f : c.facets()) {
                Cone w(f.rays);
                if (std::find(out.begin(), out.end(), w) == out.end()) {
                    out.push_back(std::move(w));
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend bool operator==(const Fan& a, const Fan& b) {
        return a.cones_ == b.cones_ && a.support_ == b.support_;
    }

private:
    std::vector<Cone> cones_;
    std::vector<LatticeVector> rays_;
    std::optional<Cone> support_;
};

} // namespace duval

#endif
