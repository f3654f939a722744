#include <future>

#include "cli.hpp"

namespace cliffalg::cli {

namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, (where.empty() ? std::string("document") : where) + ": " + what);
}

Rational read_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) parse_error(where, "expected a rational written as \"p/q\" or an integer");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    parse_error(where, e.detail());
  }
}

QVector read_vector(const json& v, const std::string& where, std::size_t expected) {
  if (!v.is_array()) parse_error(where, "expected a list");
  if (v.size() != expected) parse_error(where, "expected " + std::to_string(expected) + " entries");
  QVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_rational(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

QMatrix read_matrix(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) parse_error(where, "expected a non-empty list of rows");
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    rows.push_back(read_vector(v[i], where + "[" + std::to_string(i) + "]", v.size()));
  }
  return QMatrix::from_rows(rows);
}

std::size_t read_size(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0)) {
    parse_error(where, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

json matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const QVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

json algebra_json(const QuotientAlgebra& q, const std::vector<std::string>& letter_names) {
  json table = json::array();
  for (const auto& row : q.table()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(vector_json(v));
    table.push_back(r);
  }
  json out = {{"dim", q.dim()}, {"basis", q.basis_labels(letter_names)}, {"structure_constants", table}};
  if (q.dim() == 2) {
    out["classification"] = quadratic_class_json(classify_quadratic(q));
    out["generator_minpoly"] = quadratic_generator_minpoly(q).to_string();
  }
  return out;
}

EngineConfig engine_config(const ProblemSpec& spec, const Overrides& overrides) {
  EngineConfig cfg;
  if (auto d = overrides.degree_cap ? overrides.degree_cap : spec.degree_cap) cfg.degree_cap = *d;
  if (auto s = overrides.slack ? overrides.slack : spec.slack) cfg.slack_cap = *s;
  return cfg;
}

std::vector<std::string> form_letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

Outcome run_bilinear(const ProblemSpec& spec, const EngineConfig& cfg) {
  const BilinearForm f(spec.matrix);
  const QuotientAlgebra c = clifford_form(f, cfg);
  const auto names = form_letters(f.dim());
  json report = {{"input", echo(spec)},
                 {"asymmetry", {{"matrix", matrix_json(asymmetry(f))}}},
                 {"disc", square_class_json(discriminant(f))},
                 {"clifford", algebra_json(c, names)}};
  if (c.parity_graded()) report["even_part"] = algebra_json(even_part(c), names);
  return {report, kOk};
}

Outcome run_antiaut(const ProblemSpec& spec, const EngineConfig& cfg) {
  const Antiaut sigma = spec.kind == ProblemKind::Quaternion
                            ? antiaut_from_u(StructAlgebra::quaternion(spec.alpha, spec.beta), spec.u)
                            : adjoint_antiaut(BilinearForm(spec.matrix));
  const CliffordReport r = verify_deg2(sigma, cfg);
  const QuotientAlgebra c = clifford_antiaut(sigma, cfg);
  json asym = {{"coordinates", vector_json(r.asymmetry)}, {"basis", sigma.host().labels()}};
  if (spec.kind == ProblemKind::MatrixAdjoint) asym["matrix"] = matrix_json(sigma.host().to_matrix(r.asymmetry));
  json report = {{"input", echo(spec)},
                 {"algebra", sigma.host().describe()},
                 {"involution", sigma.is_involution()},
                 {"asymmetry", asym},
                 {"disc", square_class_json(r.disc)},
                 {"clifford", algebra_json(c, sigma.host().labels())},
                 {"classification", r.computed ? quadratic_class_json(*r.computed) : json(nullptr)},
                 {"predicted_value", rational_json(r.predicted_value)},
                 {"predicted", quadratic_class_json(r.predicted)},
                 {"match", r.match}};
  if (r.unit_letter_minpoly) report["unit_letter_minpoly"] = r.unit_letter_minpoly->to_string();
  return {report, r.match ? kOk : kMismatch};
}

}  // namespace

json rational_json(const Rational& q) { return to_string(q); }

json square_class_json(const SquareClass& c) {
  if (c.is_zero()) return {{"zero", true}};
  return {{"sign", c.sign()}, {"radical", c.radical().get_str()}};
}

json quadratic_class_json(const QuadraticAlgebraClass& c) {
  json out = {{"kind", c.kind_name()}};
  if (c.kind != QuadraticAlgebraClass::Kind::DualNumbers) out["class"] = square_class_json(c.cls);
  return out;
}

ProblemSpec parse_problem(const json& doc, const std::string& where) {
  if (!doc.is_object()) parse_error(where, "expected an object");
  auto field = [&](const char* name) { return where.empty() ? std::string(name) : where + "." + name; };
  if (!doc.contains("kind") || !doc["kind"].is_string()) parse_error(field("kind"), "missing or not a string");
  ProblemSpec spec;
  const std::string kind = doc["kind"];
  if (kind == "bilinear" || kind == "matrix_adjoint") {
    spec.kind = kind == "bilinear" ? ProblemKind::Bilinear : ProblemKind::MatrixAdjoint;
    if (!doc.contains("matrix")) parse_error(field("matrix"), "missing");
    spec.matrix = read_matrix(doc["matrix"], field("matrix"));
    if (spec.kind == ProblemKind::MatrixAdjoint && spec.matrix.rows() != 2) {
      parse_error(field("matrix"), "matrix_adjoint needs a 2x2 matrix");
    }
  } else if (kind == "quaternion") {
    spec.kind = ProblemKind::Quaternion;
    for (const char* key : {"alpha", "beta", "u"})
      if (!doc.contains(key)) parse_error(field(key), "missing");
    spec.alpha = read_rational(doc["alpha"], field("alpha"));
    spec.beta = read_rational(doc["beta"], field("beta"));
    spec.u = read_vector(doc["u"], field("u"), 4);
  } else {
    parse_error(field("kind"), "unknown kind \"" + kind + "\" (bilinear, quaternion, matrix_adjoint)");
  }
  if (doc.contains("engine")) {
    const json& e = doc["engine"];
    if (!e.is_object()) parse_error(field("engine"), "expected an object");
    if (e.contains("degree_cap")) spec.degree_cap = read_size(e["degree_cap"], field("engine.degree_cap"));
    if (e.contains("slack")) spec.slack = read_size(e["slack"], field("engine.slack"));
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) parse_error(field("seed"), "expected an unsigned integer");
    spec.seed = doc["seed"].get<std::uint64_t>();
  }
  return spec;
}

std::vector<ProblemSpec> parse_document(const json& doc) {
  if (!doc.is_array()) return {parse_problem(doc)};
  std::vector<ProblemSpec> out;
  for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(parse_problem(doc[i], "[" + std::to_string(i) + "]"));
  return out;
}

json echo(const ProblemSpec& spec) {
  json out;
  switch (spec.kind) {
    case ProblemKind::Bilinear:
      out = {{"kind", "bilinear"}, {"matrix", matrix_json(spec.matrix)}};
      break;
    case ProblemKind::MatrixAdjoint:
      out = {{"kind", "matrix_adjoint"}, {"matrix", matrix_json(spec.matrix)}};
      break;
    case ProblemKind::Quaternion:
      out = {{"kind", "quaternion"},
             {"alpha", rational_json(spec.alpha)},
             {"beta", rational_json(spec.beta)},
             {"u", vector_json(spec.u)}};
      break;
  }
  if (spec.degree_cap || spec.slack) {
    json e = json::object();
    if (spec.degree_cap) e["degree_cap"] = *spec.degree_cap;
    if (spec.slack) e["slack"] = *spec.slack;
    out["engine"] = e;
  }
  if (spec.seed) out["seed"] = *spec.seed;
  return out;
}

Outcome run_problem(const ProblemSpec& spec, const Overrides& overrides) {
  try {
    const EngineConfig cfg = engine_config(spec, overrides);
    return spec.kind == ProblemKind::Bilinear ? run_bilinear(spec, cfg) : run_antiaut(spec, cfg);
  } catch (const Error& e) {
    return {{{"input", echo(spec)}, {"error", {{"code", e.name()}, {"message", e.detail()}}}}, kError};
  }
}

std::vector<Outcome> run_all(const std::vector<ProblemSpec>& specs, const Overrides& overrides) {
  std::vector<std::future<Outcome>> pending;
  for (const auto& spec : specs) {
    pending.push_back(std::async(specs.size() > 1 ? std::launch::async : std::launch::deferred,
                                 [&spec, &overrides] { return run_problem(spec, overrides); }));
  }
  std::vector<Outcome> out;
  for (auto& p : pending) out.push_back(p.get());
  return out;
}

}  // namespace cliffalg::cli
