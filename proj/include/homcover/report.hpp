#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "homcover/verify.hpp"

namespace homcover {

enum class OutputFormat { KeyValue, Json };

// One line of machine-readable output: fields in a stable order.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;

  Record& add(std::string key, std::string value);
  Record& add(std::string key, std::uint64_t value);
  Record& add(std::string key, bool value);
};

// key=value pairs separated by spaces; values containing spaces, quotes, '='
// or nothing at all are double-quoted with backslash escapes. Json emits one
// object per line, with all-digit values as numbers and true/false as
// booleans.
std::string format_record(const Record& record, OutputFormat format);

Record report_record(const CheckReport& report);

}  // namespace homcover
