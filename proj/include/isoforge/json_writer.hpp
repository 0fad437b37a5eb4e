#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace isoforge {

// Minimal JSON document builder.  Object keys keep insertion order and
// doubles print with 17 significant digits, so identical inputs always
// serialize to byte-identical text.
class JsonValue {
 public:
  using Array = std::vector<JsonValue>;
  using Object = std::vector<std::pair<std::string, JsonValue>>;

  JsonValue() : value_(nullptr) {}
  JsonValue(std::nullptr_t) : value_(nullptr) {}
  JsonValue(bool b) : value_(b) {}
  JsonValue(int v) : value_(static_cast<std::int64_t>(v)) {}
  JsonValue(std::int64_t v) : value_(v) {}
  JsonValue(std::uint64_t v) : value_(v) {}
  JsonValue(double v) : value_(v) {}
  JsonValue(const char* s) : value_(std::string(s)) {}
  JsonValue(std::string s) : value_(std::move(s)) {}
  JsonValue(Array a) : value_(std::move(a)) {}
  JsonValue(Object o) : value_(std::move(o)) {}

  static JsonValue array() { return JsonValue(Array{}); }
  static JsonValue object() { return JsonValue(Object{}); }

  JsonValue& push_back(JsonValue v) {
    std::get<Array>(value_).push_back(std::move(v));
    return *this;
  }

  JsonValue& set(std::string key, JsonValue v) {
    std::get<Object>(value_).emplace_back(std::move(key), std::move(v));
    return *this;
  }

  std::string dump(int indent = 0) const {
    std::string out;
    write(out, indent, 0);
    return out;
  }

 private:
  static std::string format_double(double x) {
    if (!std::isfinite(x)) return "null";  // JSON has no inf/nan
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
  }

  static void escape(std::string& out, const std::string& s) {
    out += '"';
    for (char ch : s) {
      switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
            out += buf;
          } else {
            out += ch;
          }
      }
    }
    out += '"';
  }

  void write(std::string& out, int indent, int depth) const {
    const std::string pad(indent > 0 ? static_cast<std::size_t>(indent) * (depth + 1) : 0, ' ');
    const std::string close_pad(indent > 0 ? static_cast<std::size_t>(indent) * depth : 0, ' ');
    const char* newline = indent > 0 ? "\n" : "";
    if (std::holds_alternative<std::nullptr_t>(value_)) {
      out += "null";
    } else if (const bool* b = std::get_if<bool>(&value_)) {
      out += *b ? "true" : "false";
    } else if (const std::int64_t* i = std::get_if<std::int64_t>(&value_)) {
      out += std::to_string(*i);
    } else if (const std::uint64_t* u = std::get_if<std::uint64_t>(&value_)) {
      out += std::to_string(*u);
    } else if (const double* d = std::get_if<double>(&value_)) {
      out += format_double(*d);
    } else if (const std::string* s = std::get_if<std::string>(&value_)) {
      escape(out, *s);
    } else if (const Array* a = std::get_if<Array>(&value_)) {
      if (a->empty()) {
        out += "[]";
        return;
      }
      out += '[';
      out += newline;
      for (std::size_t k = 0; k < a->size(); ++k) {
        out += pad;
        (*a)[k].write(out, indent, depth + 1);
        if (k + 1 < a->size()) out += ',';
        out += newline;
      }
      out += close_pad;
      out += ']';
    } else if (const Object* o = std::get_if<Object>(&value_)) {
      if (o->empty()) {
        out += "{}";
        return;
      }
      out += '{';
      out += newline;
      for (std::size_t k = 0; k < o->size(); ++k) {
        out += pad;
        escape(out, (*o)[k].first);
        out += indent > 0 ? ": " : ":";
        (*o)[k].second.write(out, indent, depth + 1);
        if (k + 1 < o->size()) out += ',';
        out += newline;
      }
      out += close_pad;
      out += '}';
    }
  }

  std::variant<std::nullptr_t, bool, std::int64_t, std::uint64_t, double, std::string,
               Array, Object>
      value_;
};

}  // namespace isoforge
