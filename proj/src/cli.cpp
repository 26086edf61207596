#include "homcover/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>

#include "CLI11.hpp"
#include "homcover/cover.hpp"
#include "homcover/error.hpp"
#include "homcover/genseq.hpp"
#include "homcover/orbits.hpp"
#include "homcover/spec.hpp"
#include "homcover/subgroup.hpp"
#include "homcover/verify.hpp"

namespace homcover {

namespace {

const std::vector<std::string> kSubcommands = {"info", "rank", "gamma-count", "hn",
                                               "orbits", "cover", "tower", "verify"};

struct Parser {
  std::unique_ptr<CLI::App> app;
  std::string format = "kv";
};

void build_app(Parser& parser, Command& command) {
  parser.app = std::make_unique<CLI::App>("Generating sequences, automorphism orbits and homogeneous "
                                          "covers of small finite groups",
                                          "homcover");
  CLI::App& app = *parser.app;
  app.require_subcommand(1, 1);
  const std::vector<std::string> descriptions = {
      "order, exponent, structure flags and rank of a group",
      "minimal number of generators",
      "number of generating n-tuples",
      "number of Aut(G)-orbits on generating n-tuples",
      "orbit representatives and sizes",
      "build H(n, G) as a subgroup of G^h",
      "surjection H(n, G) -> H(m, G)",
      "run verification checks",
  };
  for (std::size_t i = 0; i < kSubcommands.size(); ++i) {
    const std::string& name = kSubcommands[i];
    CLI::App* sub = app.add_subcommand(name, descriptions[i]);
    sub->callback([&command, name] { command.subcommand = name; });
    sub->add_option("--group,-g", command.group, "group spec, e.g. C2xC3, S4, pq(2,3), perm:(1,2);(1,2,3)")
        ->required();
    sub->add_option("--format", parser.format, "output format")
        ->check(CLI::IsMember({"kv", "json"}));
    sub->add_option("--max-order", command.max_order, "largest Cayley table to build");
    sub->add_option("--max-closure", command.max_closure, "largest tuple-group closure");
    sub->add_option("--max-candidates", command.max_candidates, "largest enumeration");
    const bool needs_n = name != "info" && name != "rank";
    if (needs_n) {
      sub->add_option("--n,-n", command.n, "sequence length")->required()->check(CLI::PositiveNumber);
    }
    if (name == "tower") {
      sub->add_option("--m,-m", command.m, "lower level (default n - 1)")->check(CLI::PositiveNumber);
    }
    if (name == "cover") {
      sub->add_option("--export", command.export_path, "write the cover to this file");
      sub->add_flag("--elements", command.elements, "include every element in the export");
    }
    if (name == "verify") {
      std::vector<std::string> suites;
      for (auto s : suite_names()) suites.emplace_back(s);
      sub->add_option("--suite", command.suite, "check to run")->check(CLI::IsMember(suites));
      sub->add_option("--m,-m", command.m, "tower lower level (default n - 1)")->check(CLI::PositiveNumber);
      sub->add_option("--k", command.k, "copies for the independence check")->check(CLI::PositiveNumber);
      sub->add_option("--samples", command.samples, "sampled pairs for the lifting check");
      sub->add_option("--seed", command.seed, "random seed for sampling");
      sub->add_option("--threads", command.threads, "checks run concurrently")->check(CLI::PositiveNumber);
    }
  }
}

void finish(const Parser& parser, Command& command) {
  command.format = parser.format == "json" ? OutputFormat::Json : OutputFormat::KeyValue;
}

void parse_into(Parser& parser, Command& command, const std::vector<std::string>& args) {
  build_app(parser, command);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  parser.app->parse(reversed);
  finish(parser, command);
}

Limits make_limits(const Command& c) {
  Limits limits = Limits::from_environment();
  if (c.max_order) limits.max_table_order = *c.max_order;
  if (c.max_closure) limits.max_closure = *c.max_closure;
  if (c.max_candidates) limits.max_candidates = *c.max_candidates;
  return limits;
}

std::string ids_text(std::span<const Element> s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i].id);
  return out + ")";
}

std::string tuple_text(std::span<const std::uint32_t> s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

int execute(const Command& c, std::ostream& out) {
  const Limits limits = make_limits(c);
  const FiniteGroup group = construct_group(c.group, limits);
  const std::string spec = group.name();
  auto emit = [&](const Record& r) { out << format_record(r, c.format) << '\n'; };

  if (c.subcommand == "info") {
    StructureFlags flags = structure_predicates(group);
    Record r;
    r.add("group", spec)
        .add("order", static_cast<std::uint64_t>(group.order()))
        .add("exponent", group.exponent())
        .add("abelian", flags.is_abelian)
        .add("nilpotent", flags.is_nilpotent)
        .add("solvable", flags.is_solvable)
        .add("rank", static_cast<std::uint64_t>(rank(group)))
        .add("generators", ids_text(group.generators()));
    emit(r);
    return kExitOk;
  }
  if (c.subcommand == "rank") {
    emit(Record().add("group", spec).add("rank", static_cast<std::uint64_t>(rank(group))));
    return kExitOk;
  }
  if (c.subcommand == "gamma-count") {
    emit(Record()
             .add("group", spec)
             .add("n", static_cast<std::uint64_t>(c.n))
             .add("count", count_gamma(group, c.n)));
    return kExitOk;
  }
  if (c.subcommand == "hn") {
    const std::uint64_t gamma = count_gamma(group, c.n);
    Record r;
    r.add("group", spec).add("n", static_cast<std::uint64_t>(c.n));
    if (c.n < rank(group)) {
      r.add("h", std::uint64_t{0}).add("gamma", gamma);
    } else {
      const std::uint64_t aut = aut_order(group, limits);
      r.add("h", gamma / aut).add("gamma", gamma).add("aut_order", aut);
    }
    emit(r);
    return kExitOk;
  }
  if (c.subcommand == "orbits") {
    OrbitDecomposition d = orbit_decompose(group, c.n, OrbitStrategy::Automatic, limits);
    emit(Record()
             .add("group", spec)
             .add("n", static_cast<std::uint64_t>(c.n))
             .add("h", d.h_n)
             .add("gamma", d.gamma_count)
             .add("orbit_size", d.orbit_size)
             .add("free_action", d.free_action)
             .add("strategy", std::string(strategy_name(d.strategy))));
    for (std::size_t i = 0; i < d.representatives.size(); ++i) {
      emit(Record()
               .add("orbit", static_cast<std::uint64_t>(i + 1))
               .add("representative", ids_text(d.representatives[i]))
               .add("size", d.orbit_sizes[i]));
    }
    return d.free_action ? kExitOk : kExitCheckFailed;
  }
  if (c.subcommand == "cover") {
    CoverResult cover = build_cover(group, c.n, limits);
    std::string gens;
    for (Element g : cover.cover_generators) {
      gens += (gens.empty() ? "" : ";") + tuple_text(cover.cover.coordinates(g));
    }
    Record r;
    r.add("group", spec)
        .add("n", static_cast<std::uint64_t>(c.n))
        .add("h", static_cast<std::uint64_t>(cover.h()))
        .add("order", static_cast<std::uint64_t>(cover.cover.order()))
        .add("exponent", cover.cover.exponent())
        .add("generators", gens);
    if (!c.export_path.empty()) {
      std::ofstream file(c.export_path);
      if (!file) throw Error(ErrorKind::IoError, "cannot write " + c.export_path);
      write_cover_export(file, cover, spec, c.elements);
      if (!file) throw Error(ErrorKind::IoError, "write to " + c.export_path + " failed");
      r.add("export", c.export_path);
    }
    emit(r);
    return kExitOk;
  }
  if (c.subcommand == "tower") {
    const std::size_t m = c.m ? c.m : c.n - 1;
    TowerMap tower = cover_tower_map(group, c.n, m, limits);
    emit(Record()
             .add("group", spec)
             .add("n", static_cast<std::uint64_t>(c.n))
             .add("m", static_cast<std::uint64_t>(m))
             .add("upper_order", static_cast<std::uint64_t>(tower.upper.cover.order()))
             .add("lower_order", static_cast<std::uint64_t>(tower.lower.cover.order()))
             .add("kernel_order", static_cast<std::uint64_t>(tower.map.kernel().order()))
             .add("surjective", tower.map.is_surjective()));
    return kExitOk;
  }
  // verify
  SuiteOptions options;
  options.n = c.n;
  options.m = c.m;
  options.k = c.k;
  options.samples = c.samples;
  options.seed = c.seed;
  options.threads = c.threads;
  auto reports = run_suite(c.suite, group, spec, options, limits);
  bool failed = false;
  for (const auto& report : reports) {
    emit(report_record(report));
    failed = failed || report.status == CheckStatus::Fail;
  }
  return failed ? kExitCheckFailed : kExitOk;
}

}  // namespace

Command parse_command(const std::vector<std::string>& args) {
  Command command;
  Parser parser;
  try {
    parse_into(parser, command, args);
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorKind::InvalidSpec, std::string("usage: ") + e.what());
  }
  return command;
}

std::vector<std::string> print_command(const Command& c) {
  std::vector<std::string> out{c.subcommand, "--group", c.group};
  auto put = [&](const char* flag, const std::string& value) {
    out.emplace_back(flag);
    out.push_back(value);
  };
  if (c.n) put("--n", std::to_string(c.n));
  if (c.m) put("--m", std::to_string(c.m));
  if (!c.export_path.empty()) put("--export", c.export_path);
  if (c.elements) out.emplace_back("--elements");
  if (c.format == OutputFormat::Json) put("--format", "json");
  if (c.suite != "all") put("--suite", c.suite);
  if (c.k != 2) put("--k", std::to_string(c.k));
  if (c.samples != 200) put("--samples", std::to_string(c.samples));
  if (c.seed != 1) put("--seed", std::to_string(c.seed));
  if (c.threads != 1) put("--threads", std::to_string(c.threads));
  if (c.max_order) put("--max-order", std::to_string(*c.max_order));
  if (c.max_closure) put("--max-closure", std::to_string(*c.max_closure));
  if (c.max_candidates) put("--max-candidates", std::to_string(*c.max_candidates));
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command command;
  Parser parser;
  try {
    parse_into(parser, command, args);
  } catch (const CLI::CallForHelp&) {
    out << parser.app->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << parser.app->help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }
  try {
    return execute(command, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return is_cap_error(e.kind()) || e.kind() == ErrorKind::ArithmeticOverflow ? kExitCap : kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace homcover
