#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "cli.hpp"

namespace cliffalg::cli {

namespace {

const std::vector<std::pair<long, long>> kQuaternionPairs = {{-1, -1}, {2, 3}, {-1, 3}, {5, -2}};

QMatrix random_form_matrix(std::mt19937_64& rng, std::size_t n, int height, bool symmetric) {
  std::uniform_int_distribution<int> entry(-height, height);
  while (true) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
        m(i, j) = entry(rng);
        if (symmetric) m(j, i) = m(i, j);
      }
    if (sgn(det(m)) != 0) return m;
  }
}

QVector random_invertible(std::mt19937_64& rng, const StructAlgebra& a, int height) {
  std::uniform_int_distribution<int> entry(-height, height);
  while (true) {
    QVector x(4);
    for (auto& c : x) c = entry(rng);
    if (a.is_invertible(x)) return x;
  }
}

/// Alternates adjoint antiautomorphisms of random forms with Int(u) o rho on the fixed quaternion algebras.
Antiaut random_antiaut(std::mt19937_64& rng, std::size_t index) {
  if (index % 2 == 0) return adjoint_antiaut(BilinearForm(random_form_matrix(rng, 2, 5, false)));
  const auto [alpha, beta] = kQuaternionPairs[(index / 2) % kQuaternionPairs.size()];
  const StructAlgebra a = StructAlgebra::quaternion(alpha, beta);
  return antiaut_from_u(a, random_invertible(rng, a, 3));
}

QVector random_element(std::mt19937_64& rng, int height) {
  std::uniform_int_distribution<int> entry(-height, height);
  QVector x(4);
  for (auto& c : x) c = entry(rng);
  return x;
}

bool asymmetry_identities(const Antiaut& s, std::mt19937_64& rng) {
  const StructAlgebra& a = s.host();
  const QVector& asym = s.asymmetry();
  bool ok = a.multiply(s.apply(asym), asym) == a.one() && s.sigma() * s.sigma() == a.int_w(asym) &&
            s.gamma() * s.gamma() == QMatrix::identity(4) && s.apply_gamma(a.one()) == asym;
  for (int t = 0; t < 20 && ok; ++t) {
    const QVector x = random_element(rng, 3);
    const QVector y = random_element(rng, 3);
    const QVector z = random_element(rng, 3);
    ok = s.apply_gamma(a.multiply(a.multiply(x, y), z)) ==
         a.multiply(a.multiply(s.apply(z), s.apply_gamma(y)), s.apply_inverse(x));
  }
  return ok;
}

bool conjugation(const Antiaut& s, std::mt19937_64& rng) {
  const StructAlgebra& a = s.host();
  const QVector w = random_invertible(rng, a, 3);
  const Antiaut r = conjugate_antiaut(s, w);
  return r.asymmetry() == a.multiply(a.multiply(w, s.asymmetry()), a.inverse(w)) &&
         r.gamma() * a.int_w(w) == a.int_w(w) * s.gamma() && invariance_check(s, w);
}

bool engine_integrity(const IdealGenerators& gens, const StructureTable* corrupt) {
  const QuotientAlgebra q = quotient(gens);
  bool ok = q == quotient(gens);
  for (const auto& g : gens.generators) ok = ok && is_zero(q.evaluate(g));
  ok = ok && is_associative(corrupt ? *corrupt : q.table());
  return ok;
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts) {
  std::vector<SuiteResult> suites;
  auto suite = [&](const std::string& name, const std::function<bool(std::mt19937_64&, std::size_t)>& body) {
    std::mt19937_64 rng(opts.seed);
    SuiteResult r{name, 0, 0};
    for (std::size_t i = 0; i < opts.count; ++i) {
      bool ok = false;
      try {
        ok = body(rng, i);
      } catch (const Error&) {
        ok = false;
      }
      ++(ok ? r.passed : r.failed);
    }
    suites.push_back(r);
  };

  suite("asymmetry_identities", [](auto& rng, std::size_t i) { return asymmetry_identities(random_antiaut(rng, i), rng); });
  suite("conjugation_invariance", [](auto& rng, std::size_t i) { return conjugation(random_antiaut(rng, i), rng); });
  suite("deg2_verification", [](auto& rng, std::size_t i) { return verify_deg2(random_antiaut(rng, i)).match; });
  suite("disc_consistency", [](auto& rng, std::size_t i) {
    const Antiaut s = random_antiaut(rng, i);
    const StructAlgebra& a = s.host();
    const QVector one_minus_a = sub(a.one(), s.asymmetry());
    const SquareClass d = disc_sigma(s);
    return d == disc_sigma(s, 3) && (!a.is_invertible(one_minus_a) || d == square_class(-a.nrd(one_minus_a)));
  });
  suite("split_check", [](auto& rng, std::size_t i) {
    return split_check(BilinearForm(random_form_matrix(rng, 2, 5, i % 3 == 0))).ok();
  });
  suite("classical_oracle", [](auto& rng, std::size_t i) {
    const BilinearForm f(random_form_matrix(rng, 2 + i % 2, 3, true));
    const auto oracle = classical_clifford(f);
    const auto c = clifford_form(f);
    return c.basis() == oracle.basis && c.table() == oracle.table;
  });
  suite("engine_integrity", [&](auto& rng, std::size_t i) {
    const BilinearForm f(random_form_matrix(rng, 2 + i % 2, 3, false));
    if (opts.corrupt_table && i == 0) {
      StructureTable bad = clifford_form(BilinearForm(QMatrix::identity(2))).table();
      bad[1][2][3] += 1;
      return engine_integrity(clifford_form_generators(f), &bad);
    }
    return engine_integrity(clifford_form_generators(f), nullptr) &&
           engine_integrity(clifford_generators(random_antiaut(rng, i)), nullptr);
  });
  return suites;
}

json selftest_json(const std::vector<SuiteResult>& suites) {
  json list = json::array();
  bool all = true;
  for (const auto& s : suites) {
    list.push_back({{"suite", s.name}, {"passed", s.passed}, {"failed", s.failed}});
    all = all && s.failed == 0;
  }
  return {{"suites", list}, {"all_passed", all}};
}

std::string selftest_table(const std::vector<SuiteResult>& suites) {
  std::ostringstream out;
  out << std::left << std::setw(26) << "suite" << std::right << std::setw(8) << "passed" << std::setw(8) << "failed"
      << "\n";
  for (const auto& s : suites) {
    out << std::left << std::setw(26) << s.name << std::right << std::setw(8) << s.passed << std::setw(8) << s.failed
        << "\n";
  }
  return out.str();
}

}  // namespace cliffalg::cli
