#include "json_support.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ctxsim/errors.hpp"

namespace ctxsim::detail {

namespace {

[[noreturn]] void shape_error(const std::string& at, const std::string& message) {
  throw ParseError(message, 0, 0, at.empty() ? "/" : at);
}

std::string_view type_label(const json& value) { return value.type_name(); }

}  // namespace

json parse_document(std::string_view source) {
  try {
    return json::parse(source.begin(), source.end());
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the last character read.
    const std::size_t offset =
        std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, source.size());
    std::size_t line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < offset; ++i) {
      if (source[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    std::string message = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at ...:"
    // prefix; position is reported separately.
    if (auto colon = message.find(": "); colon != std::string::npos) {
      message = message.substr(colon + 2);
    }
    throw ParseError(message, line, offset - line_start + 1);
  }
}

const json& member(const json& object, std::string_view key, const std::string& at) {
  const json* found = optional_member(object, key, at);
  if (found == nullptr) {
    shape_error(at, "missing required field '" + std::string(key) + "'");
  }
  return *found;
}

const json* optional_member(const json& object, std::string_view key,
                            const std::string& at) {
  expect_object(object, at);
  auto it = object.find(key);
  return it == object.end() ? nullptr : &*it;
}

const json& expect_object(const json& value, const std::string& at) {
  if (!value.is_object()) {
    shape_error(at, "expected object, found " + std::string(type_label(value)));
  }
  return value;
}

const json& expect_array(const json& value, const std::string& at) {
  if (!value.is_array()) {
    shape_error(at, "expected array, found " + std::string(type_label(value)));
  }
  return value;
}

std::string expect_string(const json& value, const std::string& at) {
  if (!value.is_string()) {
    shape_error(at, "expected string, found " + std::string(type_label(value)));
  }
  return value.get<std::string>();
}

void expect_keys(const json& object, std::initializer_list<std::string_view> allowed,
                 const std::string& at) {
  for (const auto& [key, _] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      shape_error(child(at, key), "unexpected field '" + key + "'");
    }
  }
}

std::string child(const std::string& at, std::string_view key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return at + "/" + escaped;
}

std::string child(const std::string& at, std::size_t index) {
  return at + "/" + std::to_string(index);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace ctxsim::detail
