#ifndef DUVAL_VERIFY_HPP
#define DUVAL_VERIFY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "charts.hpp"
#include "ec_table.hpp"
#include "gsigma.hpp"
#include "io.hpp"
#include "newton.hpp"
#include "resolution.hpp"
#include "subdivision.hpp"

namespace duval {

struct VerifyOptions {
    std::vector<Int> primes{5, 7, 11};
    /// Jet order cap; default_jet_cap(entry) when unset.
    std::optional<int> cap;
    CatalogOptions catalog;
};

struct ReportSection {
    std::string name;
    bool passed = false;
    Json detail;
};

struct VerificationReport {
    std::string singularity;
    std::vector<ReportSection> sections;
    /// Catalog notes; informational, they never fail a run.
    std::vector<std::string> discrepancies;

    bool passed() const {
        return std::all_of(sections.begin(), sections.end(), [](const ReportSection& s) { return s.passed; });
    }

    const ReportSection* section(const std::string& name) const {
        for (const auto& s : sections) {
            if (s.name == name) {
                return &s;
            }
        }
        return nullptr;
    }
};

inline Json to_json(const VerificationReport& r) {
    Json j;
    j["singularity"] = r.singularity;
    j["passed"] = r.passed();
    j["sections"] = Json::object();
    for (const auto& s : r.sections) {
        j["sections"][s.name] = Json{{"passed", s.passed}, {"detail", s.detail}};
    }
    j["discrepancies"] = r.discrepancies;
    return j;
}

namespace detail {

inline Json vectors_json(const std::vector<LatticeVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) {
        a.push_back(to_json(v));
    }
    return a;
}

inline ReportSection dual_fan_section(const Polynomial& f, const Fan& gamma, std::span<const Int> primes) {
    ReportSection s{"dual_fan", true, Json::object()};
    const auto validity = validate_fan(gamma);
    s.detail["rays"] = vectors_json(gamma.rays());
    s.detail["maximal_cones"] = gamma.maximal_cones().size();
    s.detail["violations"] = validity.violations;
    const auto nd = check_nondegenerate_sampled(f, primes);
    s.detail["nondegeneracy"] = Json{{"primes", nd.primes},
                                     {"faces_checked", nd.faces_checked},
                                     {"witnesses", nd.witnesses.size()},
                                     {"caveat", NondegeneracyReport::caveat}};
    s.passed = validity.valid() && nd.witness_free();
    return s;
}

inline Json component_json(const ComponentCheck& c) {
    return Json{{"label", c.label},
                {"spec", c.spec.to_string()},
                {"center", to_string(c.spec.centered_at())},
                {"codimension", c.spec.codimension()},
                {"weight", c.weight ? to_json(*c.weight) : Json(c.weight_error)},
                {"expected_weight", to_json(c.expected_weight)},
                {"persistence", c.persistence},
                {"valuation", c.valuation},
                {"ok", c.ok()}};
}

} // namespace detail

inline Json to_json(const EcTableReport& r) {
    Json j;
    j["singularity"] = r.id.name();
    j["cap"] = r.cap;
    j["components"] = Json::array();
    for (const auto& c : r.components) {
        j["components"].push_back(detail::component_json(c));
    }
    j["chains"] = Json::array();
    for (const auto& l : r.chains) {
        j["chains"].push_back(Json{{"from", l.from}, {"to", l.to}, {"ok", l.ok()}});
    }
    j["problems"] = r.problems;
    j["passed"] = r.passed();
    return j;
}

inline Json to_json(const MinimalityVerdict& v) {
    Json j;
    j["is_g_resolution"] = v.is_g_resolution;
    j["reducible"] = Json::array();
    for (const auto& r : v.per_ray) {
        if (!r.essential) {
            j["reducible"].push_back(Json{{"ray", to_json(r.ray)},
                                          {"witness", r.witness ? Json::array({to_json(r.witness->first),
                                                                               to_json(r.witness->second)})
                                                                : Json(nullptr)}});
        }
    }
    return j;
}

/// The expected minimality of a construction: every catalog fan is a
/// G-resolution except the full E8 weight-vector fan.
inline bool expected_minimal(const CatalogEntry& e, const ResolutionFanResult& r) {
    return !(e.e8_minimal_subset && r.label == "full");
}

inline VerificationReport verify_singularity(const SingularityId& id, const VerifyOptions& opt = {}) {
    const auto e = entry(id, opt.catalog);
    VerificationReport report;
    report.singularity = id.name();
    report.discrepancies = e.notes;
    const Fan gamma = dual_fan(e.equation);

    auto dual = detail::dual_fan_section(e.equation, gamma, opt.primes);
    Json facets = Json::array();
    for (const auto& L : e.facet_covectors) {
        const Int nu = nu_monomial(L, e.equation);
        const Int d = covector_report(L, e.equation).distance;
        const bool ok = nu == d && d == e.expected_distance;
        facets.push_back(Json{{"covector", to_json(L)}, {"valuation", nu}, {"distance", d}, {"ok", ok}});
        dual.passed = dual.passed && ok;
    }
    dual.detail["facet_distances"] = facets;
    dual.detail["expected_distance"] = e.expected_distance;
    report.sections.push_back(std::move(dual));

    std::vector<ResolutionFanResult> results;
    ReportSection resolution{"resolution", true, Json::array()};
    try {
        results = build_resolution_fan(e);
    } catch (const std::exception& ex) {
        resolution.passed = false;
        resolution.detail.push_back(Json{{"error", ex.what()}});
    }
    ReportSection regularity{"regularity", !results.empty(), Json::array()};
    ReportSection minimality{"minimality", !results.empty(), Json::array()};
    ReportSection charts{"charts", !results.empty(), Json::array()};
    for (const auto& r : results) {
        const bool ok = r.valid && r.refines_dual_fan;
        resolution.passed = resolution.passed && ok;
        resolution.detail.push_back(Json{{"construction", r.label},
                                         {"rays", r.fan.rays().size()},
                                         {"maximal_cones", r.fan.maximal_cones().size()},
                                         {"inserted", r.inserted_rays.size()},
                                         {"valid", r.valid},
                                         {"refines", r.refines_dual_fan},
                                         {"boundary_weight_rays", detail::vectors_json(r.boundary_weight_rays)}});

        Json bad = Json::array();
        for (const auto& c : r.fan.maximal_cones()) {
            if (!c.is_simplicial()) {
                bad.push_back(Json{{"cone", to_string(c)}, {"determinant", nullptr}});
            } else if (const auto d = det3(c.rays()[0], c.rays()[1], c.rays()[2]); abs(d) != 1) {
                bad.push_back(Json{{"cone", to_string(c)}, {"determinant", d.str()}});
            }
        }
        regularity.passed = regularity.passed && r.regular;
        regularity.detail.push_back(Json{{"construction", r.label}, {"regular", r.regular}, {"non_unimodular", bad}});

        if (!r.refines_dual_fan) {
            minimality.passed = false;
            charts.passed = false;
            continue;
        }
        const auto mv = minimality_verdict(r, gamma);
        bool mv_ok = mv.is_g_resolution == expected_minimal(e, r);
        if (e.e8_minimal_subset && !mv.is_g_resolution) {
            // The reducible rays must be exactly the weight vectors outside the minimal subset.
            std::vector<LatticeVector> expected;
            for (const auto& v : r.inserted_rays) {
                if (std::find(e.e8_minimal_subset->begin(), e.e8_minimal_subset->end(), v) ==
                    e.e8_minimal_subset->end()) {
                    expected.push_back(v);
                }
            }
            auto got = mv.reducible_rays();
            std::sort(expected.begin(), expected.end());
            std::sort(got.begin(), got.end());
            mv_ok = mv_ok && got == expected;
        }
        minimality.passed = minimality.passed && mv_ok;
        auto mj = to_json(mv);
        mj["construction"] = r.label;
        mj["expected"] = expected_minimal(e, r);
        minimality.detail.push_back(std::move(mj));

        std::size_t count = 0;
        std::size_t scanned = 0;
        Json failures = Json::array();
        for (const auto& c : r.fan.maximal_cones()) {
            ++count;
            try {
                const auto fp = factored_pullback(e.equation, chart_map(c));
                const auto sm = smoothness_sample(fp, opt.primes);
                scanned += sm.points_scanned;
                for (const auto& w : sm.witnesses) {
                    failures.push_back(Json{{"cone", to_string(c)}, {"prime", w.prime}, {"point", w.point}});
                }
            } catch (const std::exception& ex) {
                failures.push_back(Json{{"cone", to_string(c)}, {"error", ex.what()}});
            }
        }
        charts.passed = charts.passed && failures.empty();
        charts.detail.push_back(Json{{"construction", r.label},
                                     {"charts", count},
                                     {"primes", opt.primes},
                                     {"points_scanned", scanned},
                                     {"failures", failures}});
    }
    if (e.e8_minimal_subset) {
        Json table = Json::array();
        for (const auto& d : e8_reducibility_table()) {
            table.push_back(Json{{"vector", to_json(d.vector)},
                                 {"printed", Json::array({to_json(d.first), to_json(d.second)})},
                                 {"sum_valid", d.sum_valid},
                                 {"member", d.member}});
        }
        minimality.detail.push_back(Json{{"printed_decompositions", table}});
    }
    report.sections.push_back(std::move(resolution));
    report.sections.push_back(std::move(regularity));
    report.sections.push_back(std::move(minimality));

    const int cap = opt.cap.value_or(default_jet_cap(e));
    const auto ec = verify_ec_table(e, cap);
    report.sections.push_back({"jets", ec.passed(), to_json(ec)});
    report.sections.push_back(std::move(charts));
    return report;
}

/// Checks for an arbitrary equation: dual fan validity and sampled non-degeneracy.
inline VerificationReport verify_equation(const Polynomial& f, const VerifyOptions& opt = {}) {
    VerificationReport report;
    report.singularity = f.to_string();
    report.sections.push_back(detail::dual_fan_section(f, dual_fan(f), opt.primes));
    return report;
}

} // namespace duval

#endif
