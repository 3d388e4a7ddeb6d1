#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "duval/catalog.hpp"
#include "duval/gsigma.hpp"
#include "duval/newton.hpp"
#include "duval/resolution.hpp"

using namespace duval;

namespace {

const LatticeVector e1 = unit_vector(0);
const LatticeVector e2 = unit_vector(1);
const LatticeVector e3 = unit_vector(2);

std::set<LatticeVector> as_set(const std::vector<LatticeVector>& v) { return {v.begin(), v.end()}; }

// Irreducible points of c with every coordinate at most `bound`, by testing
// each point against all smaller ones; independent of the sieve.
std::set<LatticeVector> brute_generators(const Cone& c, Int bound) {
    std::vector<LatticeVector> pts;
    LatticeVector p;
    for (p[0] = 0; p[0] <= bound; ++p[0]) {
        for (p[1] = 0; p[1] <= bound; ++p[1]) {
            for (p[2] = 0; p[2] <= bound; ++p[2]) {
                if (!p.is_zero() && cone_contains(c, p)) {
                    pts.push_back(p);
                }
            }
        }
    }
    std::set<LatticeVector> out;
    for (const auto& v : pts) {
        bool split = false;
        for (const auto& u : pts) {
            const auto w = v - u;
            if (u != v && w.is_nonnegative() && !w.is_zero() && cone_contains(c, w)) {
                split = true;
                break;
            }
        }
        if (!split) {
            out.insert(v);
        }
    }
    return out;
}

} // namespace

TEST(IsIrreducible, E8ReducibleWitness) {
    const Fan g = dual_fan(parse_polynomial("z^2 + y^3 + x^5"));
    const LatticeVector v{4, 6, 8};
    int checked = 0;
    for (const auto& c : g.maximal_cones()) {
        if (!c.contains(v)) {
            continue;
        }
        ++checked;
        const auto verdict = is_irreducible(v, c);
        EXPECT_FALSE(verdict.irreducible);
        ASSERT_TRUE(verdict.witness);
        EXPECT_EQ(verdict.witness->first, (LatticeVector{2, 3, 4}));
        EXPECT_EQ(verdict.witness->second, (LatticeVector{2, 3, 4}));
    }
    EXPECT_GT(checked, 0);
}

TEST(IsIrreducible, Cases) {
    EXPECT_TRUE(is_irreducible(e1, positive_octant()).irreducible);
    EXPECT_TRUE(is_irreducible({1, 1, 1}, Cone{e3, {3, 0, 1}, {0, 3, 1}}).irreducible);
    const auto r = is_irreducible({1, 1, 1}, positive_octant());
    EXPECT_FALSE(r.irreducible);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->first + r.witness->second, (LatticeVector{1, 1, 1}));
    EXPECT_THROW(is_irreducible({1, 1, 0}, Cone{e3, {3, 0, 1}, {0, 3, 1}}), std::invalid_argument);
    EXPECT_THROW(is_irreducible({0, 0, 0}, positive_octant()), std::invalid_argument);
}

TEST(IsIrreducible, SymmetricUnderCoordinateSwap) {
    const auto swap = [](const LatticeVector& v) { return LatticeVector{v[1], v[0], v[2]}; };
    for (int n = 1; n <= 5; ++n) {
        const Cone c{e3, {n + 1, 0, 1}, {0, n + 1, 1}};
        const Cone cs{swap(e3), swap({n + 1, 0, 1}), swap({0, n + 1, 1})};
        LatticeVector p;
        for (p[0] = 0; p[0] <= n + 1; ++p[0]) {
            for (p[1] = 0; p[1] <= n + 1; ++p[1]) {
                for (p[2] = 1; p[2] <= 2; ++p[2]) {
                    if (!c.contains(p)) {
                        continue;
                    }
                    EXPECT_EQ(is_irreducible(p, c).irreducible, is_irreducible(swap(p), cs).irreducible) << p;
                }
            }
        }
    }
}

TEST(MinimalGenerators, Examples) {
    EXPECT_EQ(as_set(minimal_generators(Cone{e1, e2, {1, 1, 2}})), (std::set<LatticeVector>{e1, e2, {1, 1, 2}, {1, 1, 1}}));
    EXPECT_EQ(as_set(minimal_generators(positive_octant())), (std::set<LatticeVector>{e1, e2, e3}));
    EXPECT_EQ(as_set(minimal_generators(Cone{e3, {2, 0, 1}, {0, 2, 1}})),
              (std::set<LatticeVector>{e3, {2, 0, 1}, {0, 2, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    EXPECT_EQ(as_set(minimal_generators(Cone{e3, {3, 0, 1}, {0, 3, 1}})),
              (std::set<LatticeVector>{e3, {3, 0, 1}, {0, 3, 1}, {1, 0, 1}, {2, 0, 1}, {0, 1, 1}, {0, 2, 1},
                                       {1, 1, 1}, {2, 1, 1}, {1, 2, 1}}));
    EXPECT_THROW(minimal_generators(Cone{e1, e2}), std::invalid_argument);
}

TEST(MinimalGenerators, MatchBruteForceOnDualFanCones) {
    for (const char* text : {"x*y - z^4", "z^2 - x*y^2 - x^3", "z^2 + y^3 + x^4", "x^2 + y^3 + y*z^3"}) {
        const Fan g = dual_fan(parse_polynomial(text));
        for (const auto& c : g.maximal_cones()) {
            Int bound = 0;
            for (const auto& r : c.rays()) {
                bound = std::max({bound, r[0], r[1], r[2]});
            }
            const Int box = std::min<Int>(2 * bound, 12);
            const auto brute = brute_generators(c, box);
            const auto got = as_set(minimal_generators(c));
            for (const auto& v : brute) {
                EXPECT_TRUE(got.count(v)) << text << " " << c << " " << v;
            }
            for (const auto& v : got) {
                if (v[0] <= box && v[1] <= box && v[2] <= box) {
                    EXPECT_TRUE(brute.count(v)) << text << " " << c << " " << v;
                }
            }
        }
    }
}

TEST(MinimalGenerators, RegularConeGivesItsRays) {
    const auto res = build_resolution_fan(SingularityId{Family::E, 6}).front();
    for (const auto& c : res.fan.maximal_cones()) {
        EXPECT_EQ(as_set(minimal_generators(c)), as_set(c.rays())) << c;
    }
}

TEST(MinimalGenerators, GenerationAndMinimality) {
    const Fan g = dual_fan(parse_polynomial("z^2 + y^3 + x^5"));
    for (const auto& c : g.maximal_cones()) {
        const auto hb = minimal_generators_certified(c);
        EXPECT_EQ(hb.reducible.size() + hb.generators.size(), hb.points_checked);
        for (const auto& cert : hb.reducible) {
            EXPECT_EQ(cert.generator + cert.remainder, cert.point);
            EXPECT_TRUE(cone_contains(c, cert.remainder));
            EXPECT_TRUE(std::find(hb.generators.begin(), hb.generators.end(), cert.generator) != hb.generators.end());
        }
        for (const auto& gen : hb.generators) {
            EXPECT_TRUE(is_irreducible(gen, c).irreducible) << gen;
        }
        for (const auto& r : c.rays()) {
            EXPECT_TRUE(std::find(hb.generators.begin(), hb.generators.end(), r) != hb.generators.end());
        }
    }
}

TEST(Minimality, A3AndE7AreGResolutions) {
    for (const SingularityId id : {SingularityId{Family::A, 3}, SingularityId{Family::E, 7}}) {
        const auto e = entry(id);
        const auto res = build_resolution_fan(e).front();
        const auto mv = minimality_verdict(res, dual_fan(e.equation));
        EXPECT_TRUE(mv.is_g_resolution) << id.name();
        EXPECT_TRUE(mv.reducible_rays().empty());
    }
}

TEST(Minimality, E8FullHasSixReducible) {
    const auto e = entry(SingularityId{Family::E, 8});
    const auto res = build_resolution_fan(e);
    const Fan g = dual_fan(e.equation);
    EXPECT_TRUE(minimality_verdict(res[0], g).is_g_resolution);
    const auto mv = minimality_verdict(res[1], g);
    EXPECT_FALSE(mv.is_g_resolution);
    EXPECT_EQ(as_set(mv.reducible_rays()),
              (std::set<LatticeVector>{{4, 6, 8}, {5, 7, 11}, {5, 8, 11}, {5, 9, 13}, {5, 9, 14}, {6, 10, 14}}));
    for (const auto& r : mv.per_ray) {
        if (!r.essential) {
            ASSERT_TRUE(r.witness);
            EXPECT_EQ(r.witness->first + r.witness->second, r.ray);
            EXPECT_FALSE(r.witness->first.is_zero());
            EXPECT_FALSE(r.witness->second.is_zero());
        }
    }
}

TEST(Minimality, RejectsNonRefinement) {
    const auto e = entry(SingularityId{Family::A, 2});
    const auto res = build_resolution_fan(e).front();
    EXPECT_THROW(minimality_verdict(res, dual_fan(parse_polynomial("z^2 + y^3 + x^4"))), std::invalid_argument);
}
