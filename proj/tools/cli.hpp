#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliffalg/clifford.hpp"

namespace cliffalg::cli {

using nlohmann::json;

enum class ProblemKind { Bilinear, Quaternion, MatrixAdjoint };

struct ProblemSpec {
  ProblemKind kind = ProblemKind::Bilinear;
  QMatrix matrix;  // bilinear and matrix_adjoint
  Rational alpha;  // quaternion
  Rational beta;
  QVector u;
  std::optional<std::size_t> degree_cap;
  std::optional<std::size_t> slack;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Parse errors carry the JSON path of the offending field, e.g. "[1].matrix[0][1]".
ProblemSpec parse_problem(const json& doc, const std::string& where = "");
/// A single object or a list of objects.
std::vector<ProblemSpec> parse_document(const json& doc);
json echo(const ProblemSpec& spec);

struct Overrides {
  std::optional<std::size_t> degree_cap;
  std::optional<std::size_t> slack;
};

enum Status : int { kOk = 0, kError = 1, kMismatch = 2 };

struct Outcome {
  json report;
  Status status = kOk;
};

Outcome run_problem(const ProblemSpec& spec, const Overrides& overrides = {});
/// Runs every problem (in parallel when there are several); reports keep input order.
std::vector<Outcome> run_all(const std::vector<ProblemSpec>& specs, const Overrides& overrides = {});

json rational_json(const Rational& q);
json square_class_json(const SquareClass& c);
json quadratic_class_json(const QuadraticAlgebraClass& c);

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct SelftestOptions {
  std::uint64_t seed = 0;
  std::size_t count = 50;
  bool corrupt_table = false;
};

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts);
json selftest_json(const std::vector<SuiteResult>& suites);
std::string selftest_table(const std::vector<SuiteResult>& suites);

int run(int argc, char** argv);

}  // namespace cliffalg::cli
