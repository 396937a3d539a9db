#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "totirr/bounds.hpp"
#include "totirr/rational.hpp"
#include "totirr/search.hpp"

namespace totirr {

/**
 * One JSON object per line with keys in insertion order. Integers print in
 * decimal, ratios as "p/q" strings, reals with 12 significant digits.
 */
class Record {
 public:
  Record& field(std::string_view key, std::string_view value) { return raw(key, quote(value)); }
  Record& field(std::string_view key, const char* value) { return field(key, std::string_view(value)); }
  Record& field(std::string_view key, bool value) { return raw(key, value ? "true" : "false"); }
  Record& field(std::string_view key, Int value) { return raw(key, std::to_string(value)); }
  Record& field(std::string_view key, int value) { return field(key, Int{value}); }
  Record& field(std::string_view key, std::uint64_t value) { return raw(key, std::to_string(value)); }
  Record& field(std::string_view key, const Ratio& value) { return field(key, value.str()); }

  Record& field(std::string_view key, double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return raw(key, buf);
  }

  Record& field(std::string_view key, const std::vector<std::string>& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) s += ",";
      s += quote(values[i]);
    }
    return raw(key, s + "]");
  }

  template <class T>
  Record& field(std::string_view key, const std::optional<T>& value) {
    if (!value) return raw(key, "null");
    return field(key, *value);
  }

  std::string line() const { return "{" + body_ + "}"; }

 private:
  Record& raw(std::string_view key, std::string_view json) {
    if (!body_.empty()) body_ += ",";
    body_ += quote(key);
    body_ += ":";
    body_ += json;
    return *this;
  }

  static std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
          } else {
            out += c;
          }
      }
    }
    return out + "\"";
  }

  std::string body_;
};

inline Record to_record(const BoundReport& r, const std::string& g6_g, const std::string& g6_h) {
  Record rec;
  rec.field("task", "bound")
      .field("kind", to_string(r.kind))
      .field("inputs", std::vector<std::string>{g6_g, g6_h})
      .field("n1", r.n1)
      .field("m1", r.m1)
      .field("n2", r.n2)
      .field("m2", r.m2)
      .field("irr_t_g", r.irr_t_g)
      .field("irr_t_h", r.irr_t_h)
      .field("actual", r.actual)
      .field("bound", r.bound)
      .field("slack", r.slack)
      .field("tight", r.tight)
      .field("hypothesis_ok", r.hypothesis_ok);
  return rec;
}

inline Record theorem1_bound_record(int n) {
  Record rec;
  rec.field("task", "bound").field("kind", "theorem1").field("n", n).field("bound", bound_theorem1(n));
  return rec;
}

inline Record to_record(const SearchOutcome& o) {
  Record rec;
  rec.field("task", "search").field("search", to_string(o.task));
  if (o.task == SearchTask::theorem1) {
    rec.field("n", o.n)
        .field("cases_examined", o.cases_examined)
        .field("max_value", o.max_value)
        .field("bound", o.bound)
        .field("witness", o.witness)
        .field("falsified", o.falsified());
    return rec;
  }
  rec.field("kind", to_string(*o.kind)).field("n1", o.n1).field("n2", o.n2);
  if (o.task == SearchTask::probe) rec.field("samples", o.samples).field("seed", o.seed);
  rec.field("cases_examined", o.cases_examined)
      .field("hypothesis_cases", o.hypothesis_cases)
      .field("min_slack", o.min_slack)
      .field("max_ratio", o.max_ratio)
      .field("witness", o.witness)
      .field("violations", o.violations)
      .field("unflagged_violations", o.unflagged_violations)
      .field("falsified", o.falsified());
  return rec;
}

}  // namespace totirr
