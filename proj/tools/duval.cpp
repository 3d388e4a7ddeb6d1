// duval: dual fans, resolution fans, jet tables and verification reports
// for the ADE surface singularities.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "duval/duval.hpp"

namespace {

using namespace duval;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

// Bad user input: selector, polynomial, cone string.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string sing;
    std::string eq;
    std::string json_path;
    std::string svg_path;
    std::string stage;
    std::string cone;
    int order = 2;
    std::optional<int> cap;
    std::vector<Int> primes{5, 7, 11};
    bool full = false;
    bool witnesses = false;
    bool mirrored = false;
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
    if (!out.flush()) {
        throw std::runtime_error("cannot write " + path);
    }
}

SingularityId selected(const Options& o) {
    if (o.sing.empty()) {
        throw UsageError("--sing is required");
    }
    try {
        const auto id = parse_singularity(o.sing);
        validate(id);
        return id;
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
}

std::optional<Polynomial> equation(const Options& o) {
    if (o.eq.empty()) {
        return std::nullopt;
    }
    if (!o.sing.empty()) {
        throw UsageError("--sing and --eq are exclusive");
    }
    try {
        return parse_polynomial(o.eq);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
}

CatalogEntry selected_entry(const Options& o) { return entry(selected(o), CatalogOptions{o.mirrored}); }

const ResolutionFanResult& pick_construction(const std::vector<ResolutionFanResult>& results, bool full) {
    if (full) {
        for (const auto& r : results) {
            if (r.label == "full") {
                return r;
            }
        }
        throw UsageError("--full applies to E8 only");
    }
    return results.front();
}

int cmd_verify(const Options& o) {
    VerifyOptions vo;
    vo.primes = o.primes;
    try {
        detail::require_primes(vo.primes, 3);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(std::string("--primes: ") + ex.what());
    }
    if (o.cap && *o.cap < 0) {
        throw UsageError("--cap must be nonnegative");
    }
    vo.cap = o.cap;
    vo.catalog.mirrored = o.mirrored;
    std::vector<VerificationReport> reports;
    if (const auto f = equation(o)) {
        reports.push_back(verify_equation(*f, vo));
    } else if (o.sing == "all") {
        for (const auto& id : standard_catalog()) {
            reports.push_back(verify_singularity(id, vo));
        }
    } else {
        reports.push_back(verify_singularity(selected(o), vo));
    }
    bool all = true;
    Json j = Json::array();
    for (const auto& r : reports) {
        std::cout << r.singularity << ": " << (r.passed() ? "PASS" : "FAIL");
        for (const auto& s : r.sections) {
            std::cout << ' ' << s.name << '=' << (s.passed ? "ok" : "fail");
        }
        if (const auto* m = r.section("minimality")) {
            for (const auto& c : m->detail) {
                if (c.contains("is_g_resolution")) {
                    std::cout << " minimal" << (c["construction"].get<std::string>().empty() ? "" : "[" + c["construction"].get<std::string>() + "]")
                              << '=' << (c["is_g_resolution"].get<bool>() ? "true" : "false");
                }
            }
        }
        std::cout << '\n';
        all = all && r.passed();
        j.push_back(to_json(r));
    }
    if (!o.json_path.empty()) {
        write_output(o.json_path, (reports.size() == 1 ? j[0] : j).dump(2) + "\n");
    }
    return all ? exit_pass : exit_fail;
}

int cmd_fan(const Options& o) {
    FanDocument doc;
    if (const auto f = equation(o)) {
        doc.fan = dual_fan(*f);
    } else {
        const auto e = selected_entry(o);
        doc.fan = dual_fan(e.equation);
        doc.discrepancies = e.notes;
    }
    doc.regular = std::all_of(doc.fan.maximal_cones().begin(), doc.fan.maximal_cones().end(),
                              [](const Cone& c) { return is_regular_cone(c); });
    write_output(o.json_path, dump_fan(doc));
    return validate_fan(doc.fan).valid() ? exit_pass : exit_fail;
}

int cmd_resolve(const Options& o) {
    const auto e = selected_entry(o);
    const Fan gamma = dual_fan(e.equation);
    const auto results = build_resolution_fan(e);
    const auto& r = pick_construction(results, o.full);
    ResolutionFanResult staged = r;
    if (!o.stage.empty()) {
        std::size_t k = 0;
        try {
            k = std::stoul(o.stage);
        } catch (const std::exception&) {
            throw UsageError("--stage must be a step count for resolve, got '" + o.stage + "'");
        }
        if (k >= r.stages.size()) {
            throw UsageError("--stage out of range: the construction has " + std::to_string(r.stages.size() - 1) +
                             " steps");
        }
        staged.fan = r.stages[k];
        staged.inserted_rays.clear();
        for (const auto& v : staged.fan.rays()) {
            if (!gamma.has_ray(v)) {
                staged.inserted_rays.push_back(v);
            }
        }
        staged.regular = is_regular_fan(staged.fan);
    }
    FanDocument doc{staged.fan, staged.inserted_rays, staged.regular, std::nullopt, e.notes};
    for (auto& v : doc.inserted) {
        v = primitive(v).vector;
    }
    doc.minimal = minimality_verdict(staged, gamma).is_g_resolution;
    write_output(o.json_path, dump_fan(doc));
    return r.valid && r.regular && r.refines_dual_fan ? exit_pass : exit_fail;
}

int cmd_jets(const Options& o) {
    if (o.order < 0) {
        throw UsageError("-m must be nonnegative");
    }
    const auto m = static_cast<unsigned>(o.order);
    std::optional<CatalogEntry> e;
    Polynomial f;
    if (const auto g = equation(o)) {
        f = *g;
    } else {
        e = selected_entry(o);
        f = e->equation;
    }
    const auto js = jet_system(f, m);
    Json j;
    j["order"] = m;
    j["variables"] = js.variables;
    j["equations"] = Json::array();
    for (const auto& F : js.equations) {
        j["equations"].push_back(F.to_string());
    }
    bool ok = true;
    if (e) {
        const auto table = verify_ec_table(*e, o.order);
        j["components"] = to_json(table);
        ok = table.passed();
    }
    write_output(o.json_path, j.dump(2) + "\n");
    return ok ? exit_pass : exit_fail;
}

std::vector<LatticeVector> parse_cone(const std::string& text) {
    std::vector<LatticeVector> rays;
    std::stringstream all(text);
    std::string part;
    while (std::getline(all, part, ';')) {
        std::stringstream ss(part);
        std::string field;
        std::vector<Int> coords;
        while (std::getline(ss, field, ',')) {
            std::size_t used = 0;
            try {
                coords.push_back(std::stoll(field, &used));
            } catch (const std::exception&) {
                throw UsageError("cannot read integer '" + field + "' in cone '" + text + "'");
            }
            if (field.find_first_not_of(" \t", used) != std::string::npos) {
                throw UsageError("cannot read integer '" + field + "' in cone '" + text + "'");
            }
        }
        if (coords.size() != 3) {
            throw UsageError("each ray needs three coordinates, got '" + part + "'");
        }
        rays.push_back({coords[0], coords[1], coords[2]});
    }
    if (rays.size() < 3 || rays.size() > 4) {
        throw UsageError("a cone needs three or four rays separated by ';'");
    }
    return rays;
}

int cmd_gsigma(const Options& o) {
    const auto rays = parse_cone(o.cone);
    std::optional<Cone> c;
    try {
        c.emplace(rays);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    if (c->dim() != 3) {
        throw UsageError("cone " + to_string(*c) + " is not 3-dimensional");
    }
    const auto hb = minimal_generators_certified(*c);
    Json j;
    j["cone"] = Json::array();
    for (const auto& r : c->rays()) {
        j["cone"].push_back(to_json(r));
    }
    j["generators"] = Json::array();
    for (const auto& g : hb.generators) {
        j["generators"].push_back(to_json(g));
    }
    j["box"] = Json{{"low", hb.low}, {"high", hb.high}};
    j["points_checked"] = hb.points_checked;
    if (o.witnesses) {
        j["reducible"] = Json::array();
        for (const auto& rc : hb.reducible) {
            j["reducible"].push_back(
                Json{{"point", to_json(rc.point)}, {"generator", to_json(rc.generator)}, {"remainder", to_json(rc.remainder)}});
        }
    }
    write_output(o.json_path, j.dump(2) + "\n");
    return exit_pass;
}

int cmd_svg(const Options& o) {
    const std::string stage = o.stage.empty() ? "resolved" : o.stage;
    if (stage != "dual" && stage != "resolved") {
        throw UsageError("--stage must be 'dual' or 'resolved' for svg");
    }
    if (o.svg_path.empty()) {
        throw UsageError("--svg <path> is required");
    }
    Fan gamma;
    Fan shown;
    std::string title;
    if (const auto f = equation(o)) {
        if (stage != "dual") {
            throw UsageError("only the dual stage is available for --eq");
        }
        gamma = dual_fan(*f);
        shown = gamma;
        title = f->to_string() + " dual fan";
    } else {
        const auto e = selected_entry(o);
        gamma = dual_fan(e.equation);
        shown = gamma;
        title = e.id.name() + " dual fan";
        if (stage == "resolved") {
            const auto results = build_resolution_fan(e);
            const auto& r = pick_construction(results, o.full);
            shown = r.fan;
            title = e.id.name() + " resolution" + (r.label.empty() ? "" : " (" + r.label + ")");
        }
    }
    write_output(o.svg_path, render_svg(fan_diagram(shown, gamma.rays()), title));
    return exit_pass;
}

void add_selector(CLI::App* cmd, Options& o) {
    cmd->add_option("--sing", o.sing, "singularity: A<n>, D<2n>, E6, E7, E8");
    cmd->add_option("--eq", o.eq, "polynomial in x, y, z");
    cmd->add_option("--json", o.json_path, "JSON output path ('-' or omitted: stdout)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric resolutions of the ADE surface singularities"};
    app.require_subcommand(1);
    Options o;

    auto* verify = app.add_subcommand("verify", "run every verification for a singularity");
    add_selector(verify, o);
    verify->add_option("--primes", o.primes, "primes for the sampled checks")->delimiter(',');
    verify->add_option("--cap", o.cap, "jet order cap (default: twice the largest weight coordinate)");
    verify->add_flag("--mirrored", o.mirrored, "A_n: use the mirrored step list");

    auto* fan = app.add_subcommand("fan", "dual fan as JSON");
    add_selector(fan, o);

    auto* resolve = app.add_subcommand("resolve", "resolution fan as JSON");
    add_selector(resolve, o);
    resolve->add_flag("--full", o.full, "E8: all 21 weight vectors instead of the minimal 15");
    resolve->add_option("--stage", o.stage, "fan after this many steps");
    resolve->add_flag("--mirrored", o.mirrored, "A_n: use the mirrored step list");

    auto* jets = app.add_subcommand("jets", "jet equations and component checks");
    add_selector(jets, o);
    jets->add_option("-m", o.order, "jet order");

    auto* gsigma = app.add_subcommand("gsigma", "minimal generators of a cone");
    gsigma->add_option("cone", o.cone, "rays as 'a,b,c;d,e,f;g,h,i'")->required();
    gsigma->add_option("--json", o.json_path, "JSON output path");
    gsigma->add_flag("--witnesses", o.witnesses, "list a splitting for every reducible box point");

    auto* svg = app.add_subcommand("svg", "barycentric trace of a fan as SVG");
    add_selector(svg, o);
    svg->add_option("--svg", o.svg_path, "SVG output path");
    svg->add_option("--stage", o.stage, "dual or resolved");
    svg->add_flag("--full", o.full, "E8: all 21 weight vectors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*verify) {
            return cmd_verify(o);
        }
        if (*fan) {
            return cmd_fan(o);
        }
        if (*resolve) {
            return cmd_resolve(o);
        }
        if (*jets) {
            return cmd_jets(o);
        }
        if (*gsigma) {
            return cmd_gsigma(o);
        }
        return cmd_svg(o);
    } catch (const UsageError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_usage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_fail;
    }
}
