// Minimal JSON-Schema subset validator: type / enum / required / properties /
// items / additionalProperties. Enough to pin the report formats.
#pragma once

#include <string>

#include <json.hpp>

namespace testutil {

inline bool schema_validate(const nlohmann::json& schema, const nlohmann::json& doc,
                            std::string& error, const std::string& path = "$") {
    using nlohmann::json;
    if (schema.contains("type")) {
        const std::string type = schema["type"].get<std::string>();
        bool ok = (type == "object" && doc.is_object()) || (type == "array" && doc.is_array()) ||
                  (type == "string" && doc.is_string()) || (type == "boolean" && doc.is_boolean()) ||
                  (type == "integer" && doc.is_number_integer()) ||
                  (type == "number" && doc.is_number());
        if (!ok) {
            error = path + ": expected " + type + ", got " + std::string(doc.type_name());
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& v : schema["enum"]) ok = ok || v == doc;
        if (!ok) {
            error = path + ": value not in enum";
            return false;
        }
    }
    if (doc.is_object()) {
        if (schema.contains("required")) {
            for (const auto& key : schema["required"]) {
                if (!doc.contains(key.get<std::string>())) {
                    error = path + ": missing required key '" + key.get<std::string>() + "'";
                    return false;
                }
            }
        }
        const auto props = schema.value("properties", nlohmann::json::object());
        if (schema.value("additionalProperties", true) == false) {
            for (auto it = doc.begin(); it != doc.end(); ++it) {
                if (!props.contains(it.key())) {
                    error = path + ": unexpected key '" + it.key() + "'";
                    return false;
                }
            }
        }
        for (auto it = props.begin(); it != props.end(); ++it) {
            if (!doc.contains(it.key())) continue;
            if (!schema_validate(it.value(), doc[it.key()], error, path + "." + it.key()))
                return false;
        }
    }
    if (doc.is_array() && schema.contains("items")) {
        int i = 0;
        for (const auto& item : doc) {
            if (!schema_validate(schema["items"], item, error,
                                 path + "[" + std::to_string(i) + "]"))
                return false;
            ++i;
        }
    }
    return true;
}

} // namespace testutil
