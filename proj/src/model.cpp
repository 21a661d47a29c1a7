// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccm/model.hpp"

#include "ccm/format.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace ccm {

namespace {

int parse_index(const std::string& tok, int line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a frame index, got '" + tok + "'");
  if (tok.size() > 6) throw ParseError(line, "index out of range: " + tok);
  return std::stoi(tok);
}

Rational parse_coeff(const std::string& tok, int line) {
  auto q = parse_rational(tok);
  if (!q) throw ParseError(line, "expected a rational, got '" + tok + "'");
  return *q;
}

struct PendingEntry {
  int line;
  std::string kind;
  int i, j, k;
  Rational value;
};

}  // namespace

Model load_model(std::string_view source) {
  std::istringstream in{std::string(source)};
  std::string raw;
  int line_no = 0;
  bool have_version = false;
  std::optional<int> n;
  std::optional<int> dim;
  std::string name = "unnamed";
  std::vector<PendingEntry> entries;

  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto tok = split_whitespace(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];

    if (!have_version && kw != "version")
      throw ParseError(line_no, "first directive must be 'version 1'");
    if (kw == "version") {
      if (have_version) throw ParseError(line_no, "duplicate version line");
      if (tok.size() != 2 || tok[1] != "1") throw ParseError(line_no, "unsupported version");
      have_version = true;
    } else if (kw == "name") {
      if (tok.size() != 2) throw ParseError(line_no, "name takes one token");
      name = tok[1];
    } else if (kw == "n") {
      if (tok.size() != 2) throw ParseError(line_no, "n takes one integer");
      if (n) throw ParseError(line_no, "duplicate n line");
      const int value = parse_index(tok[1], line_no);
      if (value < 1) throw ParseError(line_no, "n must be positive");
      n = value;
    } else if (kw == "dim") {
      if (tok.size() != 2) throw ParseError(line_no, "dim takes one integer");
      dim = parse_index(tok[1], line_no);
    } else if (kw == "bracket") {
      if (tok.size() != 5) throw ParseError(line_no, "usage: bracket <i> <j> <k> <rational>");
      PendingEntry e{line_no, kw, parse_index(tok[1], line_no), parse_index(tok[2], line_no),
                     parse_index(tok[3], line_no), parse_coeff(tok[4], line_no)};
      if (e.i >= e.j) throw ParseError(line_no, "bracket: i must be < j");
      entries.push_back(std::move(e));
    } else if (kw == "G" || kw == "H" || kw == "J") {
      if (tok.size() != 4) throw ParseError(line_no, "usage: " + kw + " <i> <k> <rational>");
      entries.push_back({line_no, kw, parse_index(tok[1], line_no), -1,
                         parse_index(tok[2], line_no), parse_coeff(tok[3], line_no)});
    } else {
      throw ParseError(line_no, "unknown directive '" + kw + "'");
    }
  }

  if (!have_version) throw ParseError(line_no, "missing 'version 1'");
  if (!n) throw ParseError(line_no, "missing 'n' line");
  if (dim && *dim != 4 * *n + 2)
    throw ParseError(line_no, "dim " + std::to_string(*dim) + " != 4n+2 = " +
                                  std::to_string(4 * *n + 2));

  Model m = Model::zero(*n, name);
  std::set<std::tuple<std::string, int, int, int>> seen;
  for (const auto& e : entries) {
    for (int idx : {e.i, e.j, e.k})
      if (idx >= m.dim())
        throw ParseError(e.line, "index " + std::to_string(idx) + " out of range for dim " +
                                     std::to_string(m.dim()));
    if (!seen.emplace(e.kind, e.i, e.j, e.k).second)
      throw ParseError(e.line, "duplicate assignment for " + e.kind);
    if (e.kind == "bracket") {
      set_bracket(m, e.i, e.j, e.k, e.value);
    } else {
      Endomorphism<Rational>& a = e.kind == "G" ? m.G : e.kind == "H" ? m.H : m.J;
      a(e.k, e.i) = e.value;
    }
  }
  return m;
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

std::string format_model(const Model& m) {
  std::ostringstream out;
  out << "# complex contact metric model; frame: horizontal 0.." << m.horizontal_dim() - 1
      << ", U=" << m.u_index() << ", V=" << m.v_index() << "\n";
  out << "version 1\n";
  out << "name " << m.name << "\n";
  out << "n " << m.n << "\n";
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i + 1; j < m.dim(); ++j)
      for (int k = 0; k < m.dim(); ++k)
        if (m.constants(i, j, k) != 0)
          out << "bracket " << i << ' ' << j << ' ' << k << ' '
              << format_rational(m.constants(i, j, k)) << "\n";
  for (auto [label, a] : {std::pair{"G", &m.G}, std::pair{"H", &m.H}, std::pair{"J", &m.J}})
    for (int i = 0; i < m.dim(); ++i)
      for (int k = 0; k < m.dim(); ++k)
        if ((*a)(k, i) != 0)
          out << label << ' ' << i << ' ' << k << ' ' << format_rational((*a)(k, i)) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

using Vec = FrameVector<Rational>;
using Endo = Endomorphism<Rational>;

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string id) { result_.id = std::move(id); }

  void fail(Witness w) {
    if (!result_.passed) return;
    result_.passed = false;
    result_.witness = std::move(w);
  }

  /// Column-by-column endomorphism equality; witness is the first column e_i.
  void endo_equal(const std::string& part, const Endo& lhs, const Endo& rhs) {
    const int d = static_cast<int>(lhs.cols());
    for (int i = 0; i < d && result_.passed; ++i)
      if (!(lhs.col(i) == rhs.col(i)))
        fail({frame_args(d, {i}), part, Vec(lhs.col(i)), Vec(rhs.col(i))});
  }

  void vector_equal(const std::string& part, std::vector<Vec> args, const Vec& lhs,
                    const Vec& rhs) {
    if (!(lhs == rhs)) fail({std::move(args), part, lhs, rhs});
  }

  void scalar_equal(const std::string& part, std::vector<Vec> args, const Rational& lhs,
                    const Rational& rhs) {
    if (lhs != rhs) fail({std::move(args), part, lhs, rhs});
  }

  bool passed() const { return result_.passed; }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

CheckResult check_antisymmetry(const Model& m) {
  CheckBuilder b("LIE-ANTISYM");
  const int d = m.dim();
  for (int i = 0; i < d && b.passed(); ++i)
    for (int j = 0; j < d && b.passed(); ++j)
      for (int k = 0; k < d && b.passed(); ++k)
        b.scalar_equal("", frame_args(d, {i, j, k}), m.constants(i, j, k),
                       -m.constants(j, i, k));
  return b.take();
}

CheckResult check_jacobi(const Model& m) {
  CheckBuilder b("LIE-JACOBI");
  const int d = m.dim();
  const Vec zero = Vec::Zero(d);
  for (int i = 0; i < d && b.passed(); ++i)
    for (int j = 0; j < d && b.passed(); ++j)
      for (int l = 0; l < d && b.passed(); ++l) {
        Vec sum = zero;
        for (int k = 0; k < d; ++k) {
          Rational acc(0);
          for (int p = 0; p < d; ++p)
            acc += m.constants(i, j, p) * m.constants(p, l, k) +
                   m.constants(j, l, p) * m.constants(p, i, k) +
                   m.constants(l, i, p) * m.constants(p, j, k);
          sum(k) = acc;
        }
        b.vector_equal("", frame_args(d, {i, j, l}), sum, zero);
      }
  return b.take();
}

}  // namespace

bool is_lie_algebra(const Model& m) {
  return check_antisymmetry(m).passed && check_jacobi(m).passed;
}

ValidationReport validate_structure(const Model& m) {
  const int d = m.dim();
  const Endo I = Endo::Identity(d, d);
  const Vec U = m.U(), V = m.V();
  const OneForm<Rational> u = m.u(), v = m.v();
  const Endo vertical = -I + tensor_product(u, U) + tensor_product(v, V);
  const Endo uV_minus_vU = tensor_product(u, V) - tensor_product(v, U);
  const Vec zero = Vec::Zero(d);

  ValidationReport report;
  report.checks.push_back(check_antisymmetry(m));
  report.checks.push_back(check_jacobi(m));

  {
    CheckBuilder b("AX-G2");
    b.endo_equal("", m.G * m.G, vertical);
    report.checks.push_back(b.take());
  }
  {
    CheckBuilder b("AX-H2");
    b.endo_equal("", m.H * m.H, vertical);
    report.checks.push_back(b.take());
  }
  {
    CheckBuilder b("AX-J2");
    b.endo_equal("", m.J * m.J, -I);
    report.checks.push_back(b.take());
  }
  {
    CheckBuilder b("AX-ANTICOMM");
    b.endo_equal("", m.G * m.J, -(m.J * m.G));
    report.checks.push_back(b.take());
  }
  {
    CheckBuilder b("AX-KERNEL");
    b.vector_equal("GU", {U}, m.G * U, zero);
    b.vector_equal("GV", {V}, m.G * V, zero);
    b.vector_equal("HU", {U}, m.H * U, zero);
    b.vector_equal("HV", {V}, m.H * V, zero);
    b.vector_equal("uG", {}, (u * m.G).transpose(), zero);
    b.vector_equal("vG", {}, (v * m.G).transpose(), zero);
    b.vector_equal("uH", {}, (u * m.H).transpose(), zero);
    b.vector_equal("vH", {}, (v * m.H).transpose(), zero);
    report.checks.push_back(b.take());
  }
  {
    CheckBuilder b("AX-SKEW");
    for (auto [label, a] : {std::pair{"G", &m.G}, std::pair{"H", &m.H}, std::pair{"J", &m.J}})
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          b.scalar_equal(label, frame_args(d, {i, j}), (*a)(i, j), -(*a)(j, i));
    report.checks.push_back(b.take());
  }
  {
    CheckBuilder b("AX-HGJ");
    b.endo_equal("HG", m.H * m.G, m.J + uV_minus_vU);
    b.endo_equal("-GH", -(m.G * m.H), m.J + uV_minus_vU);
    report.checks.push_back(b.take());
  }
  {
    CheckBuilder b("AX-JH");
    b.endo_equal("JH", m.J * m.H, m.G);
    b.endo_equal("-HJ", -(m.H * m.J), m.G);
    b.endo_equal("GJ", m.G * m.J, m.H);
    report.checks.push_back(b.take());
  }
  {
    CheckBuilder b("AX-JV");
    b.vector_equal("JV", {V}, m.J * V, U);
    b.vector_equal("-JU", {U}, -(m.J * U), V);
    b.scalar_equal("g(U,V)", {U, V}, inner_product(U, V), Rational(0));
    report.checks.push_back(b.take());
  }
  {
    CheckBuilder b("AX-HERM");
    const Endo gram = m.J.transpose() * m.J;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        b.scalar_equal("", frame_args(d, {i, j}), gram(i, j), I(i, j));
    report.checks.push_back(b.take());
  }
  return report;
}

}  // namespace ccm
