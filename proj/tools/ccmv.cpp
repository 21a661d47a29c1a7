// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

// ccmv: load a frame model, compute its connection and curvature, and check
// identities. Exit 0 on success, 1 when a check fails or a diff mismatches,
// 2 on usage, parse or validation errors.

#include "ccm/curvature.hpp"
#include "ccm/format.hpp"
#include "ccm/model.hpp"
#include "ccm/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ccm;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kError = 2;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Model load_valid(const std::string& path) {
  Model m = load_model_file(path);
  const ValidationReport report = validate_structure(m);
  for (const auto& c : report.checks)
    if (!c.passed)
      throw Failure("model '" + m.name + "' fails " + c.id +
                    (c.witness ? " (" + format_witness(*c.witness) + ")" : std::string()) +
                    "; run 'ccmv validate' for the full report");
  return m;
}

bool tsv(const std::string& format) { return format == "tsv"; }

int cmd_validate(const std::string& path) {
  const Model m = load_model_file(path);
  const ValidationReport report = validate_structure(m);
  int failed = 0;
  for (const auto& c : report.checks) {
    std::cout << status_label(c.passed) << "  " << c.id;
    if (c.witness) std::cout << "  " << format_witness(*c.witness);
    std::cout << "\n";
    failed += c.passed ? 0 : 1;
  }
  std::cout << report.checks.size() << " checks: " << report.checks.size() - failed << " PASS, "
            << failed << " FAIL\n";
  return failed == 0 ? kOk : kFailed;
}

int cmd_connection(const std::string& path, const std::string& format) {
  const Model m = load_valid(path);
  const auto conn = levi_civita(m);
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      const auto v = cov_deriv_vector(conn, basis_vector<Rational>(m.dim(), i),
                                      basis_vector<Rational>(m.dim(), j));
      if (tsv(format))
        std::cout << i << '\t' << j << '\t' << format_sparse(v) << "\n";
      else if (!is_zero(v))
        std::cout << "conn " << i << ' ' << j << " = " << format_sparse(v) << "\n";
    }
  return kOk;
}

int cmd_curvature(const std::string& path, const std::vector<int>& component,
                  const std::string& format) {
  const Model m = load_valid(path);
  const auto rt = riemann(m, levi_civita(m));
  const int d = m.dim();
  if (!component.empty()) {
    for (int i : component)
      if (i < 0 || i >= d) throw CLI::ValidationError("--component", "index out of range");
    const Rational value = rt.r(component[0], component[1], component[2], component[3]);
    if (tsv(format))
      std::cout << component[0] << '\t' << component[1] << '\t' << component[2] << '\t'
                << component[3] << '\t' << format_rational(value) << "\n";
    else
      std::cout << "R(" << component[0] << ',' << component[1] << ',' << component[2] << ','
                << component[3] << ") = " << format_rational(value) << "\n";
    return kOk;
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const auto v = curvature_vector(rt, basis_vector<Rational>(d, i),
                                        basis_vector<Rational>(d, j), basis_vector<Rational>(d, k));
        if (tsv(format))
          std::cout << i << '\t' << j << '\t' << k << '\t' << format_sparse(v) << "\n";
        else if (!is_zero(v))
          std::cout << "R " << i << ' ' << j << ' ' << k << " = " << format_sparse(v) << "\n";
      }
  return kOk;
}

int cmd_ricci(const std::string& path, const std::string& format) {
  const Model m = load_valid(path);
  const auto rho = ricci(riemann(m, levi_civita(m)));
  const auto Q = ricci_operator(rho);
  const int d = m.dim();
  if (tsv(format)) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        std::cout << "ric\t" << i << '\t' << j << '\t' << format_rational(rho(i, j)) << "\n";
    for (int i = 0; i < d; ++i)
      std::cout << "Q\t" << i << "\t\t" << format_sparse(Q.col(i)) << "\n";
    std::cout << "scal\t\t\t" << format_rational(scalar_curvature(rho)) << "\n";
    return kOk;
  }
  std::cout << "ricci tensor\n";
  for (int i = 0; i < d; ++i) {
    std::cout << " ";
    for (int j = 0; j < d; ++j) std::cout << ' ' << format_rational(rho(i, j));
    std::cout << "\n";
  }
  std::cout << "ricci operator\n";
  for (int i = 0; i < d; ++i) std::cout << "  Q e" << i << " = " << format_sparse(Q.col(i)) << "\n";
  std::cout << "scal = " << format_rational(scalar_curvature(rho)) << "\n";
  return kOk;
}

int cmd_sectional(const std::string& path, const std::vector<int>& plane) {
  const Model m = load_valid(path);
  const int d = m.dim();
  for (int i : plane)
    if (i < 0 || i >= d) throw CLI::ValidationError("--plane", "index out of range");
  const auto rt = riemann(m, levi_civita(m));
  const Rational k =
      sectional(rt, basis_vector<Rational>(d, plane[0]), basis_vector<Rational>(d, plane[1]));
  std::cout << "sec " << plane[0] << ' ' << plane[1] << " = " << format_rational(k) << "\n";
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& suite, int samples,
               std::uint64_t seed, const std::string& format) {
  const RunOptions opts{parse_suite(suite), samples, seed, true};
  const Model m = load_valid(path);
  const SuiteReport report = run_suite(m, opts);
  std::cout << (tsv(format) ? format_suite_tsv(report) : format_suite_text(report));
  return report.failed() == 0 ? kOk : kFailed;
}

int cmd_diff(const std::string& path, const std::string& expected, const std::string& format) {
  const Model m = load_valid(path);
  const ExpectedValues exp = load_expected_file(expected, m.dim());
  const DiffReport report = diff_expected(m, exp);
  std::cout << (tsv(format) ? format_diff_tsv(report) : format_diff_text(report));
  return report.mismatches() == 0 ? kOk : kFailed;
}

int cmd_example(const std::string& name, const std::string& emit) {
  if (name != "heisenberg") throw CLI::ValidationError("example", "unknown example '" + name + "'");
  const std::string text = format_model(build_heisenberg<Rational>());
  if (emit.empty() || emit == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(emit);
  if (!out) throw std::runtime_error("cannot write '" + emit + "'");
  out << text;
  return out ? kOk : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of complex contact metric frame models"};
  app.require_subcommand(1, 1);

  std::string model_path, format = "text", suite = "all", expected, example_name, emit;
  std::vector<int> component, plane;
  int samples = 32;
  std::uint64_t seed = 0;
  const auto formats = CLI::IsMember({"text", "tsv"});

  auto* validate = app.add_subcommand("validate", "check Lie-algebra and structure axioms");
  validate->add_option("file", model_path, "model file")->required();

  auto* connection = app.add_subcommand("connection", "print the Levi-Civita connection");
  connection->add_option("file", model_path, "model file")->required();
  connection->add_option("--format", format)->check(formats);

  auto* curvature = app.add_subcommand("curvature", "print R(e_i,e_j)e_k or one component");
  curvature->add_option("file", model_path, "model file")->required();
  curvature->add_option("--component", component, "i j k l for R(e_i,e_j,e_k,e_l)")
      ->expected(4);
  curvature->add_option("--format", format)->check(formats);

  auto* ricci_cmd = app.add_subcommand("ricci", "print the Ricci tensor, operator and scalar");
  ricci_cmd->add_option("file", model_path, "model file")->required();
  ricci_cmd->add_option("--format", format)->check(formats);

  auto* sectional_cmd = app.add_subcommand("sectional", "sectional curvature of a frame plane");
  sectional_cmd->add_option("file", model_path, "model file")->required();
  sectional_cmd->add_option("--plane", plane, "frame indices i j")->expected(2)->required();

  auto* verify = app.add_subcommand("verify", "evaluate the identity registry");
  verify->add_option("file", model_path, "model file")->required();
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "axioms", "contact", "normality", "curvature", "ricci"}));
  verify->add_option("--samples", samples, "random samples per identity")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed);
  verify->add_option("--format", format)->check(formats);

  auto* diff = app.add_subcommand("diff", "compare against an expected-values file");
  diff->add_option("file", model_path, "model file")->required();
  diff->add_option("--expected", expected, "expected-values file")->required();
  diff->add_option("--format", format)->check(formats);

  auto* example = app.add_subcommand("example", "emit a built-in model");
  example->add_option("name", example_name, "heisenberg")->required();
  example->add_option("--emit", emit, "output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (validate->parsed()) return cmd_validate(model_path);
    if (connection->parsed()) return cmd_connection(model_path, format);
    if (curvature->parsed()) return cmd_curvature(model_path, component, format);
    if (ricci_cmd->parsed()) return cmd_ricci(model_path, format);
    if (sectional_cmd->parsed()) return cmd_sectional(model_path, plane);
    if (verify->parsed()) return cmd_verify(model_path, suite, samples, seed, format);
    if (diff->parsed()) return cmd_diff(model_path, expected, format);
    if (example->parsed()) return cmd_example(example_name, emit);
  } catch (const CLI::Error& e) {
    std::cerr << "ccmv: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "ccmv: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
