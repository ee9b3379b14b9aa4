#pragma once

// Internal helpers shared by the ontology and context document readers.

#include <string>
#include <string_view>

#include <json.hpp>

namespace ctxsim::detail {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with line/column.
json parse_document(std::string_view source);

/// Structural checks. `at` is the JSON pointer of `value` and is used in the
/// ParseError raised on mismatch.
const json& member(const json& object, std::string_view key,
                   const std::string& at);
const json* optional_member(const json& object, std::string_view key,
                            const std::string& at);
const json& expect_object(const json& value, const std::string& at);
const json& expect_array(const json& value, const std::string& at);
std::string expect_string(const json& value, const std::string& at);
/// Rejects keys outside `allowed`.
void expect_keys(const json& object, std::initializer_list<std::string_view> allowed,
                 const std::string& at);

std::string child(const std::string& at, std::string_view key);
std::string child(const std::string& at, std::size_t index);

std::string read_text_file(const std::string& path);

}  // namespace ctxsim::detail
