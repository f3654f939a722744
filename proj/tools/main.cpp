#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cli.hpp"

namespace cliffalg::cli {

namespace {

json read_spec(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw Error(ErrorCode::Parse, "cannot open " + path);
    in = &file;
  }
  try {
    return json::parse(*in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Clifford algebras of antiautomorphisms over Q"};
  app.require_subcommand(1);

  bool pretty = false;
  auto add_format = [&](CLI::App* cmd) {
    auto* group = cmd->add_option_group("format");
    group->add_flag("--json", "compact JSON output (default)");
    group->add_flag("--pretty", pretty, "indented, human-oriented output");
    group->require_option(0, 1);
  };

  std::string spec_path;
  Overrides overrides;
  std::optional<std::uint64_t> spec_seed;
  auto* clifford = app.add_subcommand("clifford", "compute the report for a problem document");
  clifford->add_option("--spec", spec_path, "problem document ('-' for standard input)")->required();
  clifford->add_option("--degree-cap", overrides.degree_cap, "engine degree cap");
  clifford->add_option("--slack", overrides.slack, "engine slack cap");
  clifford->add_option("--seed", spec_seed, "seed recorded in the input echo");
  add_format(clifford);

  SelftestOptions self;
  auto* selftest = app.add_subcommand("selftest", "run the built-in verification suites");
  selftest->add_option("--seed", self.seed, "random seed");
  selftest->add_option("--count", self.count, "instances per suite");
  selftest->add_flag("--corrupt-table", self.corrupt_table, "inject a corrupted structure table (negative control)");
  add_format(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }

  const int indent = pretty ? 2 : -1;
  if (*selftest) {
    const auto suites = run_selftest(self);
    if (pretty) {
      std::cout << selftest_table(suites);
    } else {
      std::cout << selftest_json(suites).dump() << "\n";
    }
    return selftest_json(suites)["all_passed"].get<bool>() ? kOk : kMismatch;
  }

  std::vector<ProblemSpec> specs;
  bool batch = false;
  try {
    const json doc = read_spec(spec_path);
    batch = doc.is_array();
    specs = parse_document(doc);
  } catch (const Error& e) {
    std::cerr << "error [" << e.name() << "]: " << e.detail() << "\n";
    return kError;
  }
  if (spec_seed) {
    for (auto& s : specs) s.seed = *spec_seed;
  }
  const auto outcomes = run_all(specs, overrides);
  int status = kOk;
  json out = json::array();
  for (const auto& o : outcomes) {
    out.push_back(o.report);
    if (o.status == kError) status = kError;
    if (o.status == kMismatch && status == kOk) status = kMismatch;
    if (o.status == kError) {
      std::cerr << "error [" << o.report["error"]["code"].get<std::string>()
                << "]: " << o.report["error"]["message"].get<std::string>() << "\n";
    }
  }
  std::cout << (batch ? out : out[0]).dump(indent) << "\n";
  return status;
}

}  // namespace cliffalg::cli

int main(int argc, char** argv) { return cliffalg::cli::run(argc, argv); }
