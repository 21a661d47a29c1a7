// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccm/verify.hpp"

#include "ccm/format.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

namespace ccm {

namespace {

using Vec = FrameVector<Rational>;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

Vec random_vector(std::mt19937_64& rng, const Model& m, Slot slot) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  Vec x(m.dim());
  for (int i = 0; i < m.dim(); ++i) x(i) = Rational(num(rng), den(rng));
  if (slot == Slot::Horizontal) x = horizontal_projection(m, x);
  return x;
}

/// Returns true and fills `result` on the first mismatch.
bool record_first_failure(const Identity& id, const Geometry& geo, const Args& args,
                          CheckResult& result) {
  for (auto& cmp : id.eval(geo, args)) {
    if (values_equal(cmp.lhs, cmp.rhs)) continue;
    result.passed = false;
    result.witness = Witness{args, std::move(cmp.part), std::move(cmp.lhs), std::move(cmp.rhs)};
    return true;
  }
  return false;
}

CheckResult with_prefix(const CheckResult& route, const std::string& prefix) {
  CheckResult out = route;
  if (out.witness) out.witness->part = prefix + (out.witness->part.empty() ? "" : ":") + out.witness->part;
  return out;
}

std::vector<CheckResult> normality_rows(const Geometry& geo) {
  const NormalityReport n = check_normality(geo.model, geo.conn);
  CheckResult combined;
  combined.id = "NORMALITY";
  combined.passed = n.agreement && n.definition.passed;
  for (const auto* route : {&n.definition, &n.trilinear, &n.explicit_form})
    if (!route->passed) {
      combined.witness = with_prefix(*route, route->id).witness;
      break;
    }
  return {combined, n.definition, n.trilinear, n.explicit_form};
}

bool in_suite(Suite selected, Suite group) { return selected == Suite::All || selected == group; }

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "axioms") return Suite::Axioms;
  if (name == "contact") return Suite::Contact;
  if (name == "normality") return Suite::Normality;
  if (name == "curvature") return Suite::Curvature;
  if (name == "ricci") return Suite::Ricci;
  throw UsageError("unknown suite '" + std::string(name) +
                   "' (expected all|axioms|contact|normality|curvature|ricci)");
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::All: return "all";
    case Suite::Axioms: return "axioms";
    case Suite::Contact: return "contact";
    case Suite::Normality: return "normality";
    case Suite::Curvature: return "curvature";
    case Suite::Ricci: return "ricci";
  }
  return "all";
}

Geometry Geometry::compute(const Model& m) {
  Geometry geo;
  geo.model = m;
  geo.conn = levi_civita(m);
  geo.terms = ContactTerms<Rational>::compute(m, geo.conn);
  geo.curv = riemann(m, geo.conn);
  geo.dcurv = riemann_derivative(geo.conn, geo.curv);
  geo.rho = ricci(geo.curv);
  geo.Q = ricci_operator(geo.rho);
  geo.du = exterior_d_oneform(m, m.u());
  geo.dv = exterior_d_oneform(m, m.v());
  for (auto which : {Structure::G, Structure::H, Structure::J}) {
    geo.nabla_U[static_cast<int>(which)] = cov_deriv_endo(geo.conn, m.U(), m.structure(which));
    geo.nabla_V[static_cast<int>(which)] = cov_deriv_endo(geo.conn, m.V(), m.structure(which));
  }
  return geo;
}

bool identity_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      const auto na = std::stoull(std::string(a.substr(i, ie - i)));
      const auto nb = std::stoull(std::string(b.substr(j, je - j)));
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

CheckResult evaluate_identity(const Identity& id, const Geometry& geo, int samples,
                              std::uint64_t seed) {
  const Model& m = geo.model;
  CheckResult result;
  result.id = id.id;

  std::vector<Vec> frame;
  for (int i = 0; i < m.dim(); ++i) frame.push_back(basis_vector<Rational>(m.dim(), i));

  const std::size_t k = id.slots.size();
  std::vector<int> bound(k);
  for (std::size_t s = 0; s < k; ++s)
    bound[s] = id.slots[s] == Slot::Horizontal ? m.horizontal_dim() : m.dim();

  std::vector<int> idx(k, 0);
  Args args(k);
  for (bool done = false; !done;) {
    for (std::size_t s = 0; s < k; ++s) args[s] = frame[idx[s]];
    if (record_first_failure(id, geo, args, result)) return result;
    done = true;
    for (std::size_t s = k; s-- > 0;) {
      if (++idx[s] < bound[s]) {
        done = false;
        break;
      }
      idx[s] = 0;
    }
  }

  if (k == 0) return result;
  std::mt19937_64 rng(seed ^ fnv1a(id.id));
  for (int n = 0; n < samples; ++n) {
    for (std::size_t s = 0; s < k; ++s) args[s] = random_vector(rng, m, id.slots[s]);
    if (record_first_failure(id, geo, args, result)) return result;
  }
  return result;
}

int SuiteReport::passed() const {
  return static_cast<int>(std::count_if(results.begin(), results.end(),
                                        [](const CheckResult& r) { return r.passed; }));
}

int SuiteReport::failed() const { return static_cast<int>(results.size()) - passed(); }

const CheckResult* SuiteReport::find(std::string_view id) const {
  for (const auto& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

SuiteReport run_suite(const Model& m, const RunOptions& opts) {
  SuiteReport report;
  report.model = m.name;
  report.suite = opts.suite;

  if (in_suite(opts.suite, Suite::Axioms))
    for (auto& c : validate_structure(m).checks) report.results.push_back(std::move(c));

  const Geometry geo = Geometry::compute(m);
  if (in_suite(opts.suite, Suite::Normality))
    for (auto& c : normality_rows(geo)) report.results.push_back(std::move(c));

  std::vector<const Identity*> selected;
  for (const auto& id : registry())
    if (in_suite(opts.suite, id.group)) selected.push_back(&id);

  std::vector<CheckResult> out(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++)
      out[i] = evaluate_identity(*selected[i], geo, opts.samples, opts.seed);
  };
  const unsigned threads =
      opts.parallel ? std::max(1u, std::min(8u, std::thread::hardware_concurrency())) : 1u;
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& r : out) report.results.push_back(std::move(r));

  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const CheckResult& a, const CheckResult& b) { return identity_less(a.id, b.id); });
  return report;
}

std::string format_suite_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "model " << r.model << ", suite " << suite_name(r.suite) << "\n";
  for (const auto& c : r.results) {
    out << status_label(c.passed) << "  " << c.id;
    if (c.witness) out << "  " << format_witness(*c.witness);
    out << "\n";
  }
  out << r.results.size() << " identities: " << r.passed() << " PASS, " << r.failed()
      << " FAIL\n";
  return out.str();
}

std::string format_suite_tsv(const SuiteReport& r) {
  std::ostringstream out;
  for (const auto& c : r.results) {
    out << c.id << '\t' << status_label(c.passed) << '\t';
    if (c.witness) out << format_witness(*c.witness);
    out << "\n";
  }
  out << "# model=" << r.model << " suite=" << suite_name(r.suite) << " total=" << r.results.size()
      << " pass=" << r.passed() << " fail=" << r.failed() << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

std::string ExpectedEntry::key() const {
  std::string k = kind;
  for (int i : indices) k += " " + std::to_string(i);
  return k;
}

ExpectedValues parse_expected(std::string_view source, int dim) {
  struct Shape {
    std::size_t arity;
    bool vector;
  };
  const std::vector<std::pair<std::string, Shape>> kinds = {
      {"R", {3, true}},     {"conn", {2, true}}, {"ric", {2, false}},
      {"scal", {0, false}}, {"sec", {2, false}}, {"hol", {1, false}}};

  ExpectedValues exp;
  std::istringstream in{std::string(source)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (split_whitespace(raw).empty()) continue;

    const auto eq = raw.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected '<kind> <indices> = <value>'");
    const auto lhs = split_whitespace(std::string_view(raw).substr(0, eq));
    const auto rhs = split_whitespace(std::string_view(raw).substr(eq + 1));
    if (lhs.empty()) throw ParseError(line_no, "missing kind before '='");
    if (rhs.size() != 1) throw ParseError(line_no, "expected exactly one value after '='");

    const auto it = std::find_if(kinds.begin(), kinds.end(),
                                 [&](const auto& k) { return k.first == lhs[0]; });
    if (it == kinds.end()) throw ParseError(line_no, "unknown kind '" + lhs[0] + "'");
    const Shape shape = it->second;
    if (lhs.size() != shape.arity + 1)
      throw ParseError(line_no, lhs[0] + " takes " + std::to_string(shape.arity) + " indices");

    ExpectedEntry e;
    e.line = line_no;
    e.kind = lhs[0];
    for (std::size_t t = 1; t < lhs.size(); ++t) {
      const auto& tok = lhs[t];
      if (tok.empty() || tok.size() > 6 || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line_no, "expected a frame index, got '" + tok + "'");
      const int i = std::stoi(tok);
      if (i >= dim)
        throw ParseError(line_no, "index " + tok + " out of range for dim " + std::to_string(dim));
      e.indices.push_back(i);
    }
    if (e.kind == "sec" && e.indices[0] == e.indices[1])
      throw ParseError(line_no, "sec needs two distinct frame indices");

    if (shape.vector) {
      try {
        e.expected = parse_sparse(rhs[0], dim);
      } catch (const ParseError& err) {
        throw ParseError(line_no, err.what());
      }
    } else {
      const auto q = parse_rational(rhs[0]);
      if (!q) throw ParseError(line_no, "expected a rational, got '" + rhs[0] + "'");
      e.expected = *q;
    }
    exp.entries.push_back(std::move(e));
  }
  return exp;
}

ExpectedValues load_expected_file(const std::string& path, int dim) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read expected-values file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_expected(buf.str(), dim);
}

Value compute_expected(const Geometry& geo, const ExpectedEntry& e) {
  const int d = geo.model.dim();
  auto b = [d](int i) { return basis_vector<Rational>(d, i); };
  const auto& ix = e.indices;
  if (e.kind == "R") return curvature_vector(geo.curv, b(ix[0]), b(ix[1]), b(ix[2]));
  if (e.kind == "conn") return cov_deriv_vector(geo.conn, b(ix[0]), b(ix[1]));
  if (e.kind == "ric") return Rational(geo.rho(ix[0], ix[1]));
  if (e.kind == "scal") return scalar_curvature(geo.rho);
  if (e.kind == "sec") return sectional(geo.curv, b(ix[0]), b(ix[1]));
  if (e.kind == "hol") return holomorphic_sectional(geo.model, geo.curv, b(ix[0]));
  throw std::invalid_argument("unknown expected-value kind '" + e.kind + "'");
}

int DiffReport::matches() const {
  return static_cast<int>(
      std::count_if(entries.begin(), entries.end(), [](const DiffEntry& d) { return d.match; }));
}

int DiffReport::mismatches() const { return static_cast<int>(entries.size()) - matches(); }

DiffReport diff_expected(const Model& m, const ExpectedValues& exp) {
  const Geometry geo = Geometry::compute(m);
  DiffReport report;
  for (const auto& e : exp.entries) {
    DiffEntry d{e, false, compute_expected(geo, e)};
    d.match = values_equal(d.computed, e.expected);
    report.entries.push_back(std::move(d));
  }
  return report;
}

std::string format_diff_text(const DiffReport& r) {
  std::ostringstream out;
  for (const auto& d : r.entries) {
    out << (d.match ? "MATCH     " : "MISMATCH  ") << d.entry.key() << " = "
        << format_value(d.entry.expected);
    if (!d.match) out << "  computed " << format_value(d.computed);
    out << "\n";
  }
  out << r.entries.size() << " entries: " << r.matches() << " MATCH, " << r.mismatches()
      << " MISMATCH\n";
  return out.str();
}

std::string format_diff_tsv(const DiffReport& r) {
  std::ostringstream out;
  for (const auto& d : r.entries)
    out << d.entry.key() << '\t' << (d.match ? "MATCH" : "MISMATCH") << '\t'
        << format_value(d.entry.expected) << '\t' << format_value(d.computed) << "\n";
  out << "# total=" << r.entries.size() << " match=" << r.matches()
      << " mismatch=" << r.mismatches() << "\n";
  return out.str();
}

}  // namespace ccm
