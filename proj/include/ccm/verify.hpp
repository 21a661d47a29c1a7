// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

// Identity registry, suite runner and expected-values diff.

#pragma once

#include "ccm/connection.hpp"
#include "ccm/curvature.hpp"
#include "ccm/model.hpp"
#include "ccm/report.hpp"
#include "ccm/structures.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ccm {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Suite { All, Axioms, Contact, Normality, Curvature, Ricci };

Suite parse_suite(std::string_view name);
const char* suite_name(Suite s);

/// Everything an identity may look at, computed once per model.
struct Geometry {
  Model model;
  ConnectionCoeffs<Rational> conn;
  ContactTerms<Rational> terms;
  CurvTensor<Rational> curv;
  Tensor<Rational, 5> dcurv;
  BilinearForm<Rational> rho;
  Endomorphism<Rational> Q;
  TwoForm<Rational> du, dv;
  /// (∇_U A) and (∇_V A) for A = G, H, J, indexed by Structure.
  std::array<Endomorphism<Rational>, 3> nabla_U, nabla_V;

  static Geometry compute(const Model& m);
};

enum class Slot { All, Horizontal };

using Args = std::vector<FrameVector<Rational>>;

struct Identity {
  std::string id;
  Suite group;
  std::vector<Slot> slots;
  std::function<std::vector<Comparison>(const Geometry&, const Args&)> eval;
};

/// Every registered identity, in natural id order.
const std::vector<Identity>& registry();
const Identity* find_identity(std::string_view id);

/// Natural ordering: digit runs compare numerically ("EQ-2.9" < "EQ-2.10").
bool identity_less(std::string_view a, std::string_view b);

/// All frame tuples first, then `samples` random rational tuples drawn from
/// a generator seeded with `seed`. The first failing comparison is the witness.
CheckResult evaluate_identity(const Identity& id, const Geometry& geo, int samples,
                              std::uint64_t seed);

struct RunOptions {
  Suite suite = Suite::All;
  int samples = 32;
  std::uint64_t seed = 0;
  bool parallel = true;
};

struct SuiteReport {
  std::string model;
  Suite suite = Suite::All;
  std::vector<CheckResult> results;

  int passed() const;
  int failed() const;
  const CheckResult* find(std::string_view id) const;
};

/// Validation checks (axioms suite), the normality routes (normality suite)
/// and the registry entries of the selected suite, sorted by id.
SuiteReport run_suite(const Model& m, const RunOptions& opts = {});

std::string format_suite_text(const SuiteReport& r);
std::string format_suite_tsv(const SuiteReport& r);

// ---------------------------------------------------------------------------

struct ExpectedEntry {
  int line = 0;
  std::string kind;  // R, conn, ric, scal, sec, hol
  std::vector<int> indices;
  Value expected;

  /// Left-hand side as written, e.g. "R 0 2 0".
  std::string key() const;
};

struct ExpectedValues {
  std::vector<ExpectedEntry> entries;
};

/// Throws ParseError with the offending line. Indices are checked against dim.
ExpectedValues parse_expected(std::string_view source, int dim);
ExpectedValues load_expected_file(const std::string& path, int dim);

struct DiffEntry {
  ExpectedEntry entry;
  bool match = false;
  Value computed;
};

struct DiffReport {
  std::vector<DiffEntry> entries;

  int matches() const;
  int mismatches() const;
};

/// Recomputes one expected entry.
Value compute_expected(const Geometry& geo, const ExpectedEntry& e);

DiffReport diff_expected(const Model& m, const ExpectedValues& exp);

std::string format_diff_text(const DiffReport& r);
std::string format_diff_tsv(const DiffReport& r);

}  // namespace ccm
