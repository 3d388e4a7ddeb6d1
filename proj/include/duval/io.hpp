#ifndef DUVAL_IO_HPP
#define DUVAL_IO_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lattice.hpp"

namespace duval {

using Json = nlohmann::ordered_json;

/// A fan plus the report fields carried next to it in fan JSON files.
struct FanDocument {
    Fan fan;
    std::vector<LatticeVector> inserted;
    bool regular = false;
    /// Unset for fans where minimality is not asked (dual fans).
    std::optional<bool> minimal;
    std::vector<std::string> discrepancies;

    friend bool operator==(const FanDocument&, const FanDocument&) = default;
};

inline Json to_json(const LatticeVector& v) { return Json::array({v[0], v[1], v[2]}); }

inline LatticeVector vector_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) {
        throw std::invalid_argument("expected an integer triple, got " + j.dump());
    }
    LatticeVector v;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!j[i].is_number_integer()) {
            throw std::invalid_argument("expected an integer triple, got " + j.dump());
        }
        v[i] = j[i].get<Int>();
    }
    return v;
}

namespace detail {

inline std::size_t require_index(const Fan& fan, const LatticeVector& v) {
    const auto k = fan.ray_index(v);
    if (k == Fan::npos) {
        throw std::invalid_argument(to_string(v) + " is not a ray of the fan");
    }
    return k;
}

} // namespace detail

/// {"rays", "maximal_cones", "inserted", "regular", "minimal", "discrepancies", "support"}.
/// Cones and inserted rays are indices into "rays"; rays are in graded-lex order.
/// "support" is null for a complete fan, otherwise the ray list of the support cone.
inline Json to_json(const FanDocument& doc) {
    const auto& fan = doc.fan;
    Json j;
    j["rays"] = Json::array();
    for (const auto& r : fan.rays()) {
        j["rays"].push_back(to_json(r));
    }
    j["maximal_cones"] = Json::array();
    for (const auto& c : fan.maximal_cones()) {
        Json idx = Json::array();
        for (const auto& r : c.rays()) {
            idx.push_back(detail::require_index(fan, r));
        }
        std::sort(idx.begin(), idx.end());
        j["maximal_cones"].push_back(std::move(idx));
    }
    std::vector<std::size_t> inserted;
    for (const auto& v : doc.inserted) {
        inserted.push_back(detail::require_index(fan, primitive(v).vector));
    }
    std::sort(inserted.begin(), inserted.end());
    inserted.erase(std::unique(inserted.begin(), inserted.end()), inserted.end());
    j["inserted"] = inserted;
    j["regular"] = doc.regular;
    j["minimal"] = doc.minimal ? Json(*doc.minimal) : Json(nullptr);
    j["discrepancies"] = doc.discrepancies;
    if (fan.support()) {
        Json s = Json::array();
        for (const auto& r : fan.support()->rays()) {
            s.push_back(to_json(r));
        }
        j["support"] = std::move(s);
    } else {
        j["support"] = nullptr;
    }
    return j;
}

inline std::string dump_fan(const FanDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline FanDocument fan_document_from_json(const Json& j) {
    for (const char* key : {"rays", "maximal_cones", "inserted", "regular", "minimal", "discrepancies", "support"}) {
        if (!j.contains(key)) {
            throw std::invalid_argument(std::string("fan JSON lacks \"") + key + "\"");
        }
    }
    std::vector<LatticeVector> rays;
    for (const auto& r : j.at("rays")) {
        rays.push_back(vector_from_json(r));
    }
    const auto ray_at = [&](const Json& k) {
        const auto i = k.get<std::size_t>();
        if (i >= rays.size()) {
            throw std::invalid_argument("ray index " + std::to_string(i) + " out of range");
        }
        return rays[i];
    };
    std::vector<Cone> cones;
    for (const auto& c : j.at("maximal_cones")) {
        std::vector<LatticeVector> gens;
        for (const auto& k : c) {
            gens.push_back(ray_at(k));
        }
        cones.emplace_back(gens);
    }
    std::optional<Cone> support;
    if (!j.at("support").is_null()) {
        std::vector<LatticeVector> gens;
        for (const auto& r : j.at("support")) {
            gens.push_back(vector_from_json(r));
        }
        support = Cone(gens);
    }
    FanDocument doc{Fan(std::move(cones), support), {}, j.at("regular").get<bool>(), std::nullopt,
                    j.at("discrepancies").get<std::vector<std::string>>()};
    for (const auto& k : j.at("inserted")) {
        doc.inserted.push_back(ray_at(k));
    }
    if (!j.at("minimal").is_null()) {
        doc.minimal = j.at("minimal").get<bool>();
    }
    if (doc.fan.rays() != rays) {
        throw std::invalid_argument("fan JSON rays are not the graded-lex ray list of its cones");
    }
    return doc;
}

inline FanDocument parse_fan(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw std::invalid_argument(std::string("malformed fan JSON: ") + ex.what());
    }
    return fan_document_from_json(j);
}

} // namespace duval

#endif
