#ifndef TANGENCY_TESTS_SCHEMA_CHECK_HPP
#define TANGENCY_TESTS_SCHEMA_CHECK_HPP

// Minimal JSON Schema validator covering the keywords the shipped schemas
// use: type, properties, required, additionalProperties (bool), items, enum,
// minimum, minItems, maxItems.

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace schema {

using nlohmann::json;

inline bool type_matches(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    throw std::runtime_error("unknown schema type " + t);
}

inline void validate(const json& v, const json& s, const std::string& path, std::vector<std::string>& errors) {
    if (s.contains("type")) {
        bool ok = false;
        if (s["type"].is_array()) {
            for (const auto& t : s["type"]) ok = ok || type_matches(v, t.get<std::string>());
        } else {
            ok = type_matches(v, s["type"].get<std::string>());
        }
        if (!ok) {
            errors.push_back(path + ": type mismatch, expected " + s["type"].dump() + ", got " + v.dump());
            return;
        }
    }
    if (s.contains("enum")) {
        bool found = false;
        for (const auto& e : s["enum"]) found = found || e == v;
        if (!found) errors.push_back(path + ": " + v.dump() + " not in enum");
    }
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
        errors.push_back(path + ": below minimum");
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& r : s["required"])
                if (!v.contains(r.get<std::string>())) errors.push_back(path + ": missing " + r.get<std::string>());
        const json props = s.value("properties", json::object());
        for (const auto& [key, value] : v.items()) {
            if (props.contains(key))
                validate(value, props[key], path + "." + key, errors);
            else if (s.contains("additionalProperties") && s["additionalProperties"] == false)
                errors.push_back(path + ": unexpected property " + key);
        }
    }
    if (v.is_array()) {
        if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) errors.push_back(path + ": too few items");
        if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) errors.push_back(path + ": too many items");
        if (s.contains("items"))
            for (std::size_t i = 0; i < v.size(); ++i) validate(v[i], s["items"], path + "[" + std::to_string(i) + "]", errors);
    }
}

inline json load(const std::string& name) {
    std::ifstream in(std::string(TANGENCY_SCHEMA_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing schema " + name);
    return json::parse(in);
}

/// Errors found validating `v` against schemas/<name>; empty means valid.
inline std::vector<std::string> check(const json& v, const std::string& name) {
    std::vector<std::string> errors;
    validate(v, load(name), "$", errors);
    return errors;
}

}  // namespace schema

#endif
