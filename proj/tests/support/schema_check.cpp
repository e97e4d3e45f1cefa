#include "support/schema_check.hpp"

namespace weylcactus::testing {

namespace {

using nlohmann::json;

std::string check(const json& value, const json& schema, const std::string& path) {
  if (schema.contains("enum")) {
    for (const json& option : schema["enum"])
      if (value == option) return "";
    return path + ": not one of the enum values";
  }
  if (schema.contains("type")) {
    const std::string& type = schema["type"].get_ref<const std::string&>();
    bool ok = type == "object"    ? value.is_object()
              : type == "array"   ? value.is_array()
              : type == "string"  ? value.is_string()
              : type == "integer" ? value.is_number_integer()
              : type == "number"  ? value.is_number()
              : type == "boolean" ? value.is_boolean()
                                  : false;
    if (!ok) return path + ": expected " + type + ", got " + std::string(value.type_name());
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const json& key : schema["required"])
        if (!value.contains(key.get_ref<const std::string&>()))
          return path + ": missing required key " + key.get<std::string>();
    const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
    for (const auto& [key, member] : value.items()) {
      if (props && props->contains(key)) {
        std::string err = check(member, (*props)[key], path + "." + key);
        if (!err.empty()) return err;
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_boolean() &&
                 !schema["additionalProperties"].get<bool>()) {
        return path + ": unexpected key " + key;
      }
    }
  }
  if (value.is_array()) {
    if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>())
      return path + ": fewer than minItems elements";
    if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>())
      return path + ": more than maxItems elements";
    if (schema.contains("items"))
      for (std::size_t i = 0; i < value.size(); ++i) {
        std::string err =
            check(value[i], schema["items"], path + "[" + std::to_string(i) + "]");
        if (!err.empty()) return err;
      }
  }
  return "";
}

}  // namespace

std::string schema_errors(const nlohmann::json& value, const nlohmann::json& schema) {
  return check(value, schema, "$");
}

}  // namespace weylcactus::testing
