#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sloped_width/decomposition.hpp"
#include "sloped_width/deduction.hpp"
#include "sloped_width/torus_knot.hpp"

namespace sloped_width {

/**
 * Decomposition file format:
 *
 *   {"slope":"3/5","thick":[[{"g":1,"b":2}]],"thin":[],"stabilized":false}
 *
 * Surfaces are arrays of component objects. The order of the thick and
 * thin arrays is significant; the order of components inside a surface
 * is not. serialize() is canonical (fixed key order, components sorted,
 * compact), so serialize(parse(serialize(d))) == serialize(d) byte for
 * byte. On input, "thin" defaults to [] and "stabilized" to false.
 */
inline nlohmann::ordered_json to_json(const Decomposition& d) {
    auto surface_to_json = [](const Surface& s) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : s.components())
            arr.push_back({{"g", c.genus()}, {"b", c.boundary()}});
        return arr;
    };
    nlohmann::ordered_json j;
    j["slope"] = d.slope.to_string();
    j["thick"] = nlohmann::ordered_json::array();
    for (const Surface& s : d.thick) j["thick"].push_back(surface_to_json(s));
    j["thin"] = nlohmann::ordered_json::array();
    for (const Surface& s : d.thin) j["thin"].push_back(surface_to_json(s));
    j["stabilized"] = d.stabilized;
    return j;
}

inline std::string serialize(const Decomposition& d) { return to_json(d).dump(); }

namespace detail {

template <typename Json>
Surface surface_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("decomposition JSON: a surface must be an array");
    std::vector<SurfaceComponent> comps;
    comps.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("g") || !item.contains("b") ||
            !item["g"].is_number_integer() || !item["b"].is_number_integer())
            throw std::invalid_argument(
                "decomposition JSON: a component must be {\"g\": int, \"b\": int}");
        comps.emplace_back(item["g"].template get<int>(), item["b"].template get<int>());
    }
    return Surface(std::move(comps));
}

}  // namespace detail

template <typename Json>
Decomposition decomposition_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("slope") || !j.contains("thick"))
        throw std::invalid_argument("decomposition JSON: need \"slope\" and \"thick\"");
    if (!j["slope"].is_string())
        throw std::invalid_argument("decomposition JSON: \"slope\" must be a string");
    Decomposition d;
    d.slope = parse_slope(j["slope"].template get<std::string>());
    if (!j["thick"].is_array())
        throw std::invalid_argument("decomposition JSON: \"thick\" must be an array");
    for (const auto& s : j["thick"]) d.thick.push_back(detail::surface_from_json(s));
    if (j.contains("thin")) {
        if (!j["thin"].is_array())
            throw std::invalid_argument("decomposition JSON: \"thin\" must be an array");
        for (const auto& s : j["thin"]) d.thin.push_back(detail::surface_from_json(s));
    }
    if (j.contains("stabilized")) {
        if (!j["stabilized"].is_boolean())
            throw std::invalid_argument("decomposition JSON: \"stabilized\" must be a boolean");
        d.stabilized = j["stabilized"].template get<bool>();
    }
    return d;
}

inline Decomposition parse_decomposition(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("decomposition JSON: ") + e.what());
    }
    return decomposition_from_json(j);
}

inline nlohmann::ordered_json to_json(const ValidationReport& report) {
    auto violations_to_json = [](const std::vector<Violation>& list) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& v : list)
            arr.push_back({{"rule", v.rule}, {"where", v.where}, {"message", v.message}});
        return arr;
    };
    nlohmann::ordered_json j;
    j["ok"] = report.ok();
    j["violations"] = violations_to_json(report.violations);
    j["strict_violations"] = violations_to_json(report.strict_violations);
    j["warnings"] = violations_to_json(report.warnings);
    return j;
}

inline nlohmann::ordered_json to_json(const std::vector<ConclusionGroup>& groups) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& g : groups) {
        nlohmann::ordered_json tags = nlohmann::ordered_json::array();
        for (ConclusionTag t : g.disjunction) tags.push_back(std::string(conclusion_tag_name(t)));
        arr.push_back({{"rule", g.rule}, {"disjunction", tags}});
    }
    return arr;
}

inline nlohmann::ordered_json to_json(long long p, long long q,
                                      const SurgeryClassification& c) {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["q"] = q;
    j["slope"] = c.witness.slope.to_string();
    if (c.delta) j["delta"] = *c.delta;
    j["class"] = std::string(surgery_class_name(c.surgery_class));
    j["width"] = c.width.to_string();
    if (c.filled_manifold) j["filled_manifold"] = *c.filled_manifold;
    if (c.filled_width) j["filled_width"] = c.filled_width->to_string();
    j["witness"] = to_json(c.witness);
    return j;
}

}  // namespace sloped_width
