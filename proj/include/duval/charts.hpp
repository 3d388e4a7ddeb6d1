#ifndef DUVAL_CHARTS_HPP
#define DUVAL_CHARTS_HPP

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "newton.hpp"
#include "polynomial.hpp"

namespace duval {

inline std::vector<std::string> chart_variables() { return {"q", "r", "s"}; }

/// The affine chart of a regular 3-cone with ordered rays v_1, v_2, v_3:
/// x = q^{v_1,1} r^{v_2,1} s^{v_3,1}, and likewise for y, z.
struct ChartMap {
    Cone cone;
    std::array<LatticeVector, 3> rays;

    /// Exponent vector in (q, r, s) of the pullback of x^e1 y^e2 z^e3.
    LatticeVector transform(const LatticeVector& e) const { return {dot(rays[0], e), dot(rays[1], e), dot(rays[2], e)}; }

    /// Pullback of the coordinate x (axis 0), y (1) or z (2) as a monomial.
    LatticeVector coordinate_exponent(std::size_t axis) const { return transform(unit_vector(axis)); }
};

inline ChartMap chart_map(const std::array<LatticeVector, 3>& ordered_rays) {
    const Cone c(std::vector<LatticeVector>(ordered_rays.begin(), ordered_rays.end()));
    if (c.dim() != 3 || !is_regular_cone(c)) {
        throw std::invalid_argument("chart needs a regular 3-dimensional cone, got " + to_string(c));
    }
    for (const auto& r : ordered_rays) {
        if (!c.has_ray(r)) {
            throw std::invalid_argument("chart rays must be primitive generators: " + to_string(r));
        }
    }
    return {c, ordered_rays};
}

/// Chart variables follow the cone's normalized ray order.
inline ChartMap chart_map(const Cone& c) {
    if (c.rays().size() != 3) {
        throw std::invalid_argument("chart needs a regular 3-dimensional cone, got " + to_string(c));
    }
    return chart_map(std::array<LatticeVector, 3>{c.rays()[0], c.rays()[1], c.rays()[2]});
}

/// pullback(f) = q^d1 r^d2 s^d3 * strict.
struct FactoredPullback {
    LatticeVector exceptional;
    Polynomial strict;
    Polynomial pullback;
};

inline Polynomial pullback(const Polynomial& f, const ChartMap& cm) {
    detail::require_three_variables(f);
    Polynomial out(chart_variables());
    for (const auto& [e, c] : f.terms()) {
        const auto t = cm.transform(detail::exponent_point(e));
        out.add_term({static_cast<std::uint32_t>(t[0]), static_cast<std::uint32_t>(t[1]),
                      static_cast<std::uint32_t>(t[2])},
                     c);
    }
    return out;
}

inline FactoredPullback factored_pullback(const Polynomial& f, const ChartMap& cm) {
    detail::require_nonzero(f);
    FactoredPullback fp{{}, Polynomial(chart_variables()), pullback(f, cm)};
    bool first = true;
    for (const auto& [e, c] : fp.pullback.terms()) {
        for (std::size_t j = 0; j < 3; ++j) {
            const Int k = e[j];
            if (first || k < fp.exceptional[j]) {
                fp.exceptional[j] = k;
            }
        }
        first = false;
    }
    for (std::size_t j = 0; j < 3; ++j) {
        const Int nu = nu_monomial(cm.rays[j], f);
        if (fp.exceptional[j] != nu) {
            throw std::logic_error("exceptional exponent " + std::to_string(fp.exceptional[j]) + " along " +
                                   to_string(cm.rays[j]) + " differs from the valuation " + std::to_string(nu));
        }
    }
    for (const auto& [e, c] : fp.pullback.terms()) {
        fp.strict.add_term({static_cast<std::uint32_t>(e[0] - fp.exceptional[0]),
                            static_cast<std::uint32_t>(e[1] - fp.exceptional[1]),
                            static_cast<std::uint32_t>(e[2] - fp.exceptional[2])},
                           c);
    }
    return fp;
}

struct SmoothnessWitness {
    Int prime = 0;
    std::array<Int, 3> point{};
};

struct SmoothnessReport {
    std::vector<Int> primes;
    std::size_t points_scanned = 0;
    std::vector<SmoothnessWitness> witnesses;

    bool witness_free() const { return witnesses.empty(); }
};

/// Scans every F_p point with at least one chart coordinate zero for a
/// common zero of the strict transform and its three partials.
inline SmoothnessReport smoothness_sample(const Polynomial& strict, std::span<const Int> primes,
                                          std::size_t witnesses_per_prime = 1) {
    detail::require_primes(primes, 3);
    if (strict.variables().size() != 3) {
        throw std::invalid_argument("expected a polynomial in three chart variables");
    }
    SmoothnessReport report;
    report.primes.assign(primes.begin(), primes.end());
    for (Int p : primes) {
        const ModularPolynomial g(strict, p);
        const ModularPolynomial gq(strict.derivative(0), p);
        const ModularPolynomial gr(strict.derivative(1), p);
        const ModularPolynomial gs(strict.derivative(2), p);
        std::size_t found = 0;
        std::array<Int, 3> pt{};
        for (pt[0] = 0; pt[0] < p && found < witnesses_per_prime; ++pt[0]) {
            for (pt[1] = 0; pt[1] < p && found < witnesses_per_prime; ++pt[1]) {
                for (pt[2] = 0; pt[2] < p && found < witnesses_per_prime; ++pt[2]) {
                    if (pt[0] != 0 && pt[1] != 0 && pt[2] != 0) {
                        continue;
                    }
                    ++report.points_scanned;
                    if (g(pt) == 0 && gq(pt) == 0 && gr(pt) == 0 && gs(pt) == 0) {
                        report.witnesses.push_back({p, pt});
                        if (++found >= witnesses_per_prime) {
                            break;
                        }
                    }
                }
            }
        }
    }
    return report;
}

inline SmoothnessReport smoothness_sample(const FactoredPullback& fp, std::span<const Int> primes) {
    return smoothness_sample(fp.strict, primes);
}

} // namespace duval

#endif
