// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "duval/duval.hpp"

using namespace duval;

namespace {

const LatticeVector e1 = unit_vector(0);
const LatticeVector e2 = unit_vector(1);
const LatticeVector e3 = unit_vector(2);

using VectorSet = std::set<LatticeVector>;

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string str(const VectorSet& s) {
    std::string out = "{";
    for (const auto& v : s) {
        out += (out.size() > 1 ? "," : "") + to_string(v);
    }
    return out + "}";
}

VectorSet as_set(const std::vector<LatticeVector>& v) { return {v.begin(), v.end()}; }

std::vector<SingularityId> ids(Family f, std::initializer_list<int> idx) {
    std::vector<SingularityId> out;
    for (int i : idx) {
        out.push_back({f, i});
    }
    return out;
}

std::vector<SingularityId> a_range(int hi) {
    std::vector<SingularityId> out;
    for (int n = 1; n <= hi; ++n) {
        out.push_back({Family::A, n});
    }
    return out;
}

bool has_cone(const Fan& f, const Cone& c) {
    return std::find(f.maximal_cones().begin(), f.maximal_cones().end(), c) != f.maximal_cones().end();
}

BigInt volume_inside(const Fan& f, const Cone& big) {
    BigInt total = 0;
    for (const auto& c : f.maximal_cones()) {
        if (cone_inside(c, big)) {
            total += normalized_volume(c);
        }
    }
    return total;
}

BigInt abs_det(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) { return abs(det3(a, b, c)); }

// 1. Dual fan ray sets.
Outcome dual_fans() {
    Outcome o;
    for (const auto& id : standard_catalog()) {
        const auto e = entry(id);
        const Fan g = dual_fan(e.equation);
        o.require(validate_fan(g).valid(), id.name() + " dual fan invalid");
        VectorSet expected{e1, e2, e3};
        const Int n = id.index;
        switch (id.family) {
        case Family::A: {
            const LatticeVector u{n + 1, 0, 1};
            const LatticeVector w{0, n + 1, 1};
            expected.insert({u, w});
            o.require(has_cone(g, Cone{e1, e2, u, w}), id.name() + " missing 4-ray cone at the z-vertex");
            const auto four = std::count_if(g.maximal_cones().begin(), g.maximal_cones().end(),
                                            [](const Cone& c) { return c.rays().size() == 4; });
            o.require(four == 1, id.name() + " expected exactly one 4-ray cone");
            break;
        }
        case Family::D: {
            const Int h = n / 2;
            expected.insert({{2, 0, 1}, {2, 2 * h - 2, 2 * h - 1}});
            break;
        }
        case Family::E:
            if (n == 6) {
                expected.insert(LatticeVector{3, 4, 6});
            } else if (n == 7) {
                expected.insert({{9, 6, 4}, {1, 2, 0}});
            } else {
                expected.insert(LatticeVector{6, 10, 15});
            }
            break;
        }
        o.require(as_set(g.rays()) == expected,
                  id.name() + " rays " + str(as_set(g.rays())) + " expected " + str(expected));
    }
    return o;
}

// 2. Regularity of every resolution fan and the printed determinant families.
Outcome regularity() {
    Outcome o;
    for (const auto& id : standard_catalog()) {
        const auto e = entry(id);
        for (const auto& r : build_resolution_fan(e)) {
            const std::string tag = id.name() + (r.label.empty() ? "" : "[" + r.label + "]");
            o.require(r.valid, tag + " invalid fan");
            o.require(r.refines_dual_fan, tag + " does not refine the dual fan");
            for (const auto& c : r.fan.maximal_cones()) {
                const bool unit = c.dim() == 3 && c.rays().size() == 3 && abs_det(c.rays()[0], c.rays()[1], c.rays()[2]) == 1;
                o.require(unit, tag + " cone " + to_string(c) + " not unimodular");
            }
        }
    }
    // A_n triangle list, rays as columns, signed values as printed.
    for (Int n = 1; n <= 10; ++n) {
        const auto tag = "A" + std::to_string(n) + ": ";
        for (Int k = 1; k <= n; ++k) {
            o.require(det3({1, 1, 1}, {0, k, 1}, {0, k + 1, 1}) == -1, tag + "triangle with (0,k,1) k=" + std::to_string(k));
            o.require(det3({1, 1, 1}, {k, 0, 1}, {k + 1, 0, 1}) == 1, tag + "triangle with (k,0,1) k=" + std::to_string(k));
        }
        o.require(det3({1, 0, 1}, {1, 1, 1}, {0, 0, 1}) == 1, tag + "triangle [(1,0,1),(1,1,1),e3]");
        o.require(abs_det({0, 1, 1}, {1, 1, 1}, {0, 0, 1}) == 1, tag + "triangle [(0,1,1),(1,1,1),e3]");
        for (Int k = 1; k <= n; ++k) {
            const BigInt d = det3({k, n - k, 1}, {k - 1, n - k + 1, 1}, e2);
            o.require(abs(d) == 1, tag + "chain triangle k=" + std::to_string(k));
            if (d != 1 && k == 1 && n == 1) {
                o.notes.push_back("A: printed +1 for [(k,n-k,1),(k-1,n-k+1,1),e2], recomputed " + str(d));
            }
        }
        const Int c = (n + 2) / 2;
        if (n % 2 == 0) {
            o.require(abs_det({c - 1, c, 1}, {c, c + 1, 1}, e2) == 1, tag + "even-n middle triangle");
        } else {
            o.require(abs_det({c + 1, c, 1}, {c, c, 1}, e2) == 1, tag + "odd-n middle triangle");
            if (n == 1) {
                o.notes.push_back("A odd: printed middle triangle [(c,c-1,1),(c,c,1),e2] is degenerate (det " +
                                  str(det3({c, c - 1, 1}, {c, c, 1}, e2)) + "), excluded");
            }
        }
        o.require(abs_det(e1, {n + 1, 0, 1}, {n, 1, 1}) == 1, tag + "[e1,(n+1,0,1),(n,1,1)]");
        o.require(abs_det(e1, e2, {n, 1, 1}) == 1, tag + "[e1,e2,(n,1,1)]");
        for (Int k = 1; k <= (n + 2) / 2; ++k) {
            for (Int l = k; l <= n - 1; ++l) {
                o.require(abs_det({k + l, k, 1}, {k + l - 1, k, 1}, {k + 1, k + 1, 1}) == 1,
                          tag + "(k+l) family first, k=" + std::to_string(k) + " l=" + std::to_string(l));
                o.require(det3({k + l, k, 1}, {k + l - 1, k, 1}, {n + 2 - k, k - 1, 1}) == 1,
                          tag + "(k+l) family second, k=" + std::to_string(k) + " l=" + std::to_string(l));
            }
        }
    }
    // D_2n chains: unit determinant exactly at the endpoints, and the endpoint cones are in the fan.
    for (Int n = 2; n <= 6; ++n) {
        const auto tag = "D" + std::to_string(2 * n) + ": ";
        const LatticeVector om{2, 2 * n - 2, 2 * n - 1};
        for (Int i = 1; i <= n - 1; ++i) {
            const BigInt d = abs_det({1, i, i}, e2, om);
            o.require(d == std::abs(2 * n - 1 - 2 * i), tag + "U determinant at i=" + std::to_string(i));
            o.require((d == 1) == (i == n - 1), tag + "U unit only at i=n-1");
        }
        for (Int i = 1; i <= 2 * n - 3; ++i) {
            const LatticeVector v{2, i, i + 1};
            const BigInt a = det3(v, om, e1);
            const BigInt b = det3(v, om, {1, 0, 1});
            o.require(a == i - 2 * n + 2 && b == 2 * n - 2 - i, tag + "V determinants at i=" + std::to_string(i));
            o.require((abs(a) == 1 && abs(b) == 1) == (i == 2 * n - 3), tag + "V unit only at i=2n-3");
        }
        const auto r = build_resolution_fan(SingularityId{Family::D, static_cast<int>(2 * n)}).front();
        const LatticeVector u{1, n - 1, n - 1};
        const LatticeVector v{2, 2 * n - 3, 2 * n - 2};
        o.require(has_cone(r.fan, Cone{u, e2, om}), tag + "endpoint cone <U_{n-1},e2,Omega> absent");
        o.require(has_cone(r.fan, Cone{v, e1, om}), tag + "endpoint cone <V_{2n-3},e1,Omega> absent");
        o.require(has_cone(r.fan, Cone{v, {1, 0, 1}, om}), tag + "endpoint cone <V_{2n-3},(1,0,1),Omega> absent");
    }
    return o;
}

// Reducible lattice points among `rays`, found by enumerating every u <= v.
VectorSet brute_reducible(const std::vector<LatticeVector>& rays, const Fan& gamma) {
    VectorSet out;
    for (const auto& v : rays) {
        if (gamma.has_ray(v)) {
            continue;
        }
        bool irreducible_somewhere = false;
        for (const auto& c : gamma.maximal_cones()) {
            if (!cone_contains(c, v)) {
                continue;
            }
            bool split = false;
            LatticeVector u;
            for (u[0] = 0; u[0] <= v[0] && !split; ++u[0]) {
                for (u[1] = 0; u[1] <= v[1] && !split; ++u[1]) {
                    for (u[2] = 0; u[2] <= v[2] && !split; ++u[2]) {
                        if (!u.is_zero() && u != v && cone_contains(c, u) && cone_contains(c, v - u)) {
                            split = true;
                        }
                    }
                }
            }
            irreducible_somewhere = irreducible_somewhere || !split;
        }
        if (!irreducible_somewhere) {
            out.insert(v);
        }
    }
    return out;
}

// 3. Minimality.
Outcome minimality() {
    Outcome o;
    auto all = a_range(10);
    for (const auto& id : ids(Family::D, {4, 6, 8, 10, 12})) {
        all.push_back(id);
    }
    all.push_back({Family::E, 6});
    all.push_back({Family::E, 7});
    for (const auto& id : all) {
        const auto e = entry(id);
        const Fan g = dual_fan(e.equation);
        const auto r = build_resolution_fan(e).front();
        const auto mv = minimality_verdict(r, g);
        o.require(mv.is_g_resolution, id.name() + " not a G-resolution: " + str(as_set(mv.reducible_rays())));
        o.require(brute_reducible(r.fan.rays(), g).empty(), id.name() + " brute force finds a reducible ray");
    }
    const auto e8 = entry("E8");
    const Fan g8 = dual_fan(e8.equation);
    const auto res = build_resolution_fan(e8);
    const auto full = std::find_if(res.begin(), res.end(), [](const ResolutionFanResult& r) { return r.fan.rays().size() == 22; });
    o.require(full != res.end(), "E8 full fan with 21 weight vectors not built");
    if (full != res.end()) {
        const auto mv = minimality_verdict(*full, g8);
        o.require(!mv.is_g_resolution, "E8 full fan reported minimal");
        const auto brute = brute_reducible(full->inserted_rays, g8);
        o.require(brute.size() == 6, "E8 brute-force reducible count " + std::to_string(brute.size()));
        o.require(as_set(mv.reducible_rays()) == brute,
                  "E8 reducible " + str(as_set(mv.reducible_rays())) + " vs brute force " + str(brute));
        for (const auto& rv : mv.per_ray) {
            if (rv.essential) {
                continue;
            }
            const bool ok = rv.witness && !rv.witness->first.is_zero() && !rv.witness->second.is_zero() &&
                            rv.witness->first + rv.witness->second == rv.ray &&
                            std::any_of(g8.maximal_cones().begin(), g8.maximal_cones().end(), [&](const Cone& c) {
                                return c.contains(rv.ray) && cone_contains(c, rv.witness->first) &&
                                       cone_contains(c, rv.witness->second);
                            });
            o.require(ok, "E8 witness for " + to_string(rv.ray));
        }
        const auto minimal = res.front();
        o.require(minimality_verdict(minimal, g8).is_g_resolution, "E8 minimal fan not a G-resolution");
    }
    for (const auto& d : e8_reducibility_table()) {
        o.require(d.sum_valid == (d.first + d.second == d.vector), "E8 printed identity check for " + to_string(d.vector));
        if (!d.sum_valid) {
            o.notes.push_back("printed " + to_string(d.vector) + " = " + to_string(d.first) + " + " + to_string(d.second) +
                              " does not hold (sum is " + to_string(d.first + d.second) + ")");
        }
        if (!d.member) {
            o.notes.push_back("printed " + to_string(d.vector) + " is not among the 21 weight vectors");
        }
    }
    return o;
}

// 4. Minimal generators of each dual-fan cone versus the catalog vectors.
Outcome gsigma_consistency() {
    Outcome o;
    auto list = a_range(6);
    list.push_back({Family::D, 4});
    list.push_back({Family::D, 6});
    list.push_back({Family::E, 6});
    list.push_back({Family::E, 7});
    list.push_back({Family::E, 8});
    for (const auto& id : list) {
        const auto e = entry(id);
        const auto& vectors = e.e8_minimal_subset ? *e.e8_minimal_subset : e.ee_vectors;
        const Fan g = dual_fan(e.equation);
        for (const auto& c : g.maximal_cones()) {
            VectorSet got = as_set(minimal_generators(c));
            VectorSet want;
            for (const auto& v : vectors) {
                if (cone_contains(c, v)) {
                    want.insert(v);
                }
            }
            for (const auto& r : c.rays()) {
                got.erase(r);
                want.erase(r);
            }
            o.require(got == want, id.name() + " " + to_string(c) + ": " + str(got) + " vs " + str(want));
        }
    }
    return o;
}

// 5. Jet tables.
Outcome jet_tables() {
    Outcome o;
    for (const auto& id : standard_catalog()) {
        const auto e = entry(id);
        Int top = 0;
        for (const auto& c : e.ec_specs) {
            top = std::max({top, c.expected_weight[0], c.expected_weight[1], c.expected_weight[2]});
        }
        for (const auto& v : e.ee_vectors) {
            top = std::max({top, v[0], v[1], v[2]});
        }
        const auto rep = verify_ec_table(e, static_cast<int>(2 * top));
        std::string why;
        for (const auto& p : rep.problems) {
            why += " " + p;
        }
        o.require(rep.passed(), id.name() + ":" + why);
        for (const auto& c : rep.components) {
            o.require(c.weight && *c.weight == c.expected_weight, id.name() + " " + c.label + " weight");
            o.require(c.persistence >= 0 && component_contained(c.spec, e.equation, static_cast<unsigned>(c.persistence)),
                      id.name() + " " + c.label + " not contained at its persistence level");
        }
    }
    const auto spec = ComponentSpec({{'x', 0}, {'y', 0}, {'z', 0}, {'z', 1}}, Center::origin);
    const int p = persistence_level(spec, entry("E6").equation, 24);
    o.require(p == 2, "E6 persistence of V(x_0,y_0,z_0,z_1) is " + std::to_string(p));
    return o;
}

// 6. Valuation at the compact facet normals.
Outcome valuations() {
    Outcome o;
    for (const auto& id : standard_catalog()) {
        const auto e = entry(id);
        Int expected = 0;
        switch (id.family) {
        case Family::A:
            expected = id.index + 1;
            break;
        case Family::D:
            expected = 2 * id.index - 2;
            break;
        case Family::E:
            expected = id.index == 6 ? 12 : id.index == 7 ? 18 : 30;
            break;
        }
        o.require(e.expected_distance == expected, id.name() + " catalog distance " + std::to_string(e.expected_distance));
        for (const auto& L : e.facet_covectors) {
            // Independent minimum over the exponents.
            Int d = -1;
            for (const auto& [ex, co] : e.equation.terms()) {
                const Int v = L[0] * ex[0] + L[1] * ex[1] + L[2] * ex[2];
                d = d < 0 ? v : std::min(d, v);
            }
            o.require(nu_monomial(L, e.equation) == d && d == expected,
                      id.name() + " at " + to_string(L) + ": nu " + std::to_string(nu_monomial(L, e.equation)) + ", d " +
                          std::to_string(d));
        }
        if (id.family == Family::A) {
            // Normals along the compact edge, from (0,n+1,1) to (n+1,0,1).
            o.require(e.facet_covectors.size() == static_cast<std::size_t>(id.index + 2), id.name() + " covector count");
            for (Int l = 1; l <= id.index; ++l) {
                o.require(covector_report({l, id.index + 1 - l, 1}, e.equation).distance == id.index + 1,
                          id.name() + " d((l,n+1-l,1)) at l=" + std::to_string(l));
            }
        }
    }
    return o;
}

// 7. Chart factorization and sampled smoothness.
Outcome charts() {
    Outcome o;
    const std::vector<Int> primes{5, 7, 11};
    for (const auto& id : standard_catalog()) {
        const auto e = entry(id);
        for (const auto& r : build_resolution_fan(e)) {
            for (const auto& c : r.fan.maximal_cones()) {
                const std::string tag = id.name() + " " + to_string(c);
                try {
                    const auto cm = chart_map(c);
                    const auto fp = factored_pullback(e.equation, cm);
                    for (std::size_t i = 0; i < 3; ++i) {
                        o.require(fp.exceptional[i] == nu_monomial(cm.rays[i], e.equation), tag + " exponent " + std::to_string(i));
                    }
                    const auto s = smoothness_sample(fp, primes);
                    o.require(s.witness_free(), tag + " singular point mod " +
                                                    (s.witnesses.empty() ? std::string() : std::to_string(s.witnesses[0].prime)));
                } catch (const std::exception& ex) {
                    o.require(false, tag + ": " + ex.what());
                }
            }
        }
    }
    const auto control = parse_polynomial("q^2 - r^3 + s^2", chart_variables());
    o.require(!smoothness_sample(control, primes).witness_free(), "control input produced no witness");
    return o;
}

// 8. Property suites.
Outcome properties() {
    Outcome o;
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<Int> coord(-50, 50);
    for (int k = 0; k < 1000; ++k) {
        const LatticeVector a{coord(rng), coord(rng), coord(rng)};
        const LatticeVector b{coord(rng), coord(rng), coord(rng)};
        const LatticeVector c{coord(rng), coord(rng), coord(rng)};
        const BigInt d = det3(a, b, c);
        o.require(det3(b, a, c) == -d && det3(a, c, b) == -d && det3(c, b, a) == -d && det3(b, c, a) == d &&
                      d == BigInt(dot(a, cross(b, c))),
                  "det3 not alternating at " + to_string(a) + to_string(b) + to_string(c));
    }
    for (const auto& id : standard_catalog()) {
        const auto e = entry(id);
        const Fan g = dual_fan(e.equation);
        const auto results = build_resolution_fan(e);
        for (std::size_t k = 0; k < results.size(); ++k) {
            const auto& r = results[k];
            const auto& steps = e.constructions[k].steps;
            const auto reducible = minimality_verdict(r, g).reducible_rays();
            for (std::size_t s = 0; s < r.stages.size(); ++s) {
                const auto& f = r.stages[s];
                o.require(validate_fan(f).valid(), id.name() + " stage " + std::to_string(s) + " invalid");
                // Volume is kept by every insertion on the base plane, i.e. every irreducible one.
                bool adds_reducible = false;
                for (const auto& v : reducible) {
                    adds_reducible = adds_reducible || (s > 0 && f.has_ray(v) && !r.stages[s - 1].has_ray(v));
                }
                BigInt grown = 0;
                for (const auto& big : g.maximal_cones()) {
                    const BigInt now = volume_inside(f, big);
                    const BigInt was = s == 0 ? normalized_volume(big) : volume_inside(r.stages[s - 1], big);
                    o.require(now >= was, id.name() + " volume shrank at stage " + std::to_string(s));
                    grown += now - was;
                }
                o.require((grown > 0) == adds_reducible,
                          id.name() + (r.label.empty() ? "" : "[" + r.label + "]") + " volume " +
                              (grown > 0 ? "changed" : "unchanged") + " at stage " + std::to_string(s));
                if (adds_reducible && grown > 0) {
                    o.notes.push_back(id.name() + "[" + r.label + "] stage " + std::to_string(s) +
                                      ": reducible insertion off the base plane adds volume " + str(grown));
                }
                if (s > 0 && std::holds_alternative<InsertRay>(steps[s - 1])) {
                    const bool existed = r.stages[s - 1].has_ray(primitive(std::get<InsertRay>(steps[s - 1]).ray).vector);
                    o.require(f.rays().size() == r.stages[s - 1].rays().size() + (existed ? 0 : 1),
                              id.name() + " ray count at stage " + std::to_string(s));
                }
                const auto text = dump_fan(FanDocument{f, {}, is_regular_fan(f), std::nullopt, {}});
                o.require(dump_fan(parse_fan(text)) == text, id.name() + " JSON round trip at stage " + std::to_string(s));
            }
        }
        for (unsigned m = 0; m <= 10; ++m) {
            o.require(weighted_homogeneous(jet_system(e.equation, m)), id.name() + " jets not homogeneous at m=" + std::to_string(m));
        }
    }
    std::vector<Cone> cones;
    for (const char* name : {"A3", "D4", "E6", "E7"}) {
        const auto r = build_resolution_fan(entry(name)).front();
        for (const auto& c : r.fan.maximal_cones()) {
            cones.push_back(c);
        }
    }
    std::uniform_int_distribution<std::uint32_t> deg(0, 3);
    std::uniform_int_distribution<int> coef(1, 5);
    std::uniform_int_distribution<std::size_t> pick(0, cones.size() - 1);
    const auto random_poly = [&] {
        Polynomial p;
        for (int t = 0; t < 3; ++t) {
            p.add_term({deg(rng), deg(rng), deg(rng)}, coef(rng));
        }
        return p;
    };
    for (int k = 0; k < 100; ++k) {
        const auto g = random_poly();
        const auto h = random_poly();
        const auto cm = chart_map(cones[pick(rng)]);
        const auto fg = factored_pullback(g, cm);
        const auto fh = factored_pullback(h, cm);
        const auto fgh = factored_pullback(g * h, cm);
        o.require(pullback(g * h, cm) == pullback(g, cm) * pullback(h, cm) &&
                      fgh.exceptional == fg.exceptional + fh.exceptional && fgh.strict == fg.strict * fh.strict,
                  "pullback not multiplicative for " + g.to_string() + " and " + h.to_string());
    }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"dual fans", dual_fans},
        {"resolution regularity", regularity},
        {"minimality", minimality},
        {"minimal generators", gsigma_consistency},
        {"jet tables", jet_tables},
        {"valuation at facet normals", valuations},
        {"chart factorization", charts},
        {"property suites", properties},
    };
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& ex) {
            o.require(false, std::string("exception: ") + ex.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << k + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " " << criteria[k].first << " ("
                  << ms << " ms)\n";
        for (std::size_t i = 0; i < o.failures.size() && i < 20; ++i) {
            std::cout << "    fail: " << o.failures[i] << "\n";
        }
        if (o.failures.size() > 20) {
            std::cout << "    ... " << o.failures.size() - 20 << " more\n";
        }
        for (const auto& n : o.notes) {
            std::cout << "    note: " << n << "\n";
        }
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
