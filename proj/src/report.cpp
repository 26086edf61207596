#include "homcover/report.hpp"

#include <algorithm>
#include <cctype>
#include "json.hpp"

namespace homcover {

namespace {

bool needs_quotes(const std::string& v) {
  return v.empty() || std::any_of(v.begin(), v.end(), [](char c) {
           return std::isspace(static_cast<unsigned char>(c)) || c == '"' || c == '=' || c == '\\';
         });
}

std::string quoted(const std::string& v) {
  std::string out = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

bool is_number(const std::string& v) {
  return !v.empty() && v.size() <= 19 && (v == "0" || v[0] != '0') &&
         std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Record& Record::add(std::string key, std::string value) {
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

Record& Record::add(std::string key, std::uint64_t value) { return add(std::move(key), std::to_string(value)); }

Record& Record::add(std::string key, bool value) {
  return add(std::move(key), std::string(value ? "true" : "false"));
}

std::string format_record(const Record& record, OutputFormat format) {
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.fields) {
      if (is_number(value)) {
        object[key] = std::stoull(value);
      } else if (value == "true" || value == "false") {
        object[key] = value == "true";
      } else {
        object[key] = value;
      }
    }
    return object.dump();
  }
  std::string out;
  for (const auto& [key, value] : record.fields) {
    if (!out.empty()) out += ' ';
    out += key + "=" + (needs_quotes(value) ? quoted(value) : value);
  }
  return out;
}

Record report_record(const CheckReport& report) {
  Record record;
  record.add("check", report.check)
      .add("group", report.group)
      .add("n", static_cast<std::uint64_t>(report.n))
      .add("status", std::string(status_name(report.status)));
  for (const auto& [key, value] : report.data) record.add(key, value);
  if (!report.witness.empty()) record.add("witness", report.witness);
  return record;
}

}  // namespace homcover
