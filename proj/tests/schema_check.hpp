// Just enough JSON Schema (draft-07 subset) to validate the shipped report
// schema: type, required, properties, additionalProperties, items, enum,
// numeric bounds, minItems/minProperties. Returns a list of violations.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const std::string& type, const json& value) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline void validate(const json& schema, const json& value, const std::string& path,
                     std::vector<std::string>& errors) {
    if (schema.contains("type")) {
        const json& t = schema.at("type");
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(t.get<std::string>(), value);
        } else {
            for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), value);
        }
        if (!ok) {
            errors.push_back(path + ": type mismatch, schema wants " + t.dump());
            return;
        }
    }

    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& candidate : schema.at("enum")) ok = ok || candidate == value;
        if (!ok) errors.push_back(path + ": value " + value.dump() + " not in enum");
    }

    if (value.is_number()) {
        const double x = value.get<double>();
        if (schema.contains("minimum") && x < schema.at("minimum").get<double>()) {
            errors.push_back(path + ": below minimum");
        }
        if (schema.contains("exclusiveMinimum") &&
            x <= schema.at("exclusiveMinimum").get<double>()) {
            errors.push_back(path + ": not above exclusiveMinimum");
        }
        if (schema.contains("maximum") && x > schema.at("maximum").get<double>()) {
            errors.push_back(path + ": above maximum");
        }
    }

    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto& key : schema.at("required")) {
                if (!value.contains(key.get<std::string>())) {
                    errors.push_back(path + ": missing required key " + key.get<std::string>());
                }
            }
        }
        if (schema.contains("minProperties") &&
            value.size() < schema.at("minProperties").get<size_t>()) {
            errors.push_back(path + ": too few properties");
        }
        const json props = schema.value("properties", json::object());
        for (const auto& [key, sub] : value.items()) {
            if (props.contains(key)) {
                validate(props.at(key), sub, path + "/" + key, errors);
            } else if (schema.contains("additionalProperties")) {
                const json& ap = schema.at("additionalProperties");
                if (ap.is_boolean() && !ap.get<bool>()) {
                    errors.push_back(path + ": unexpected key " + key);
                } else if (ap.is_object()) {
                    validate(ap, sub, path + "/" + key, errors);
                }
            }
        }
    }

    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema.at("minItems").get<size_t>()) {
            errors.push_back(path + ": too few items");
        }
        if (schema.contains("items")) {
            for (size_t i = 0; i < value.size(); ++i) {
                validate(schema.at("items"), value[i], path + "/" + std::to_string(i), errors);
            }
        }
    }
}

inline std::vector<std::string> violations(const json& schema, const json& value) {
    std::vector<std::string> errors;
    validate(schema, value, "", errors);
    return errors;
}

}  // namespace schema_check
