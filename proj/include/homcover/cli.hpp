#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "homcover/report.hpp"

namespace homcover {

struct Command {
  std::string subcommand;  // info, rank, gamma-count, hn, orbits, cover, tower, verify
  std::string group;
  std::size_t n = 0;  // 0 means "not given"
  std::size_t m = 0;
  std::string export_path;
  bool elements = false;
  OutputFormat format = OutputFormat::KeyValue;
  std::string suite = "all";
  std::size_t k = 2;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::optional<std::uint64_t> max_order;
  std::optional<std::uint64_t> max_closure;
  std::optional<std::uint64_t> max_candidates;

  bool operator==(const Command&) const = default;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

// Throws Error(InvalidSpec) on a usage error. `args` excludes the program
// name.
Command parse_command(const std::vector<std::string>& args);

// Canonical argument list; parse_command(print_command(c)) == c.
std::vector<std::string> print_command(const Command& command);

// Full front end: parses, runs, prints records to `out` and errors to `err`,
// and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homcover
