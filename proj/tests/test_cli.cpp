// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "run.hpp"

#include <doctest.h>

#include <cstdlib>
#include <fstream>

namespace {

const std::string kModel = CCM_DATA_DIR "/heisenberg.ccm";

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string temp_path(const char* name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/ccmv_test_" + name;
}

}  // namespace

TEST_CASE("validate") {
  const RunResult r = run_ccmv("validate " + kModel);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS  AX-G2"));
  CHECK(contains(r.out, "12 checks: 12 PASS, 0 FAIL"));
}

TEST_CASE("validate reports a broken model") {
  const std::string path = temp_path("broken.ccm");
  std::ofstream(path) << "version 1\nn 1\nG 0 2 1\n";
  const RunResult r = run_ccmv("validate " + path);
  CHECK(r.code == 1);
  CHECK(contains(r.out, "FAIL  AX-G2"));
  // downstream commands refuse an invalid model
  CHECK(run_ccmv("connection " + path).code == 2);
}

TEST_CASE("connection") {
  const RunResult r = run_ccmv("connection " + kModel);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "conn 2 4 = -1:0\n"));
  CHECK(contains(r.out, "conn 0 2 = -1:4\n"));
  CHECK_FALSE(contains(r.out, "conn 0 0"));
  const RunResult t = run_ccmv("connection " + kModel + " --format tsv");
  CHECK(contains(t.out, "0\t0\t0\n"));
  CHECK(contains(t.out, "2\t4\t-1:0\n"));
}

TEST_CASE("curvature") {
  const RunResult r = run_ccmv("curvature " + kModel);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "R 0 2 0 = 3:2\n"));
  CHECK(contains(r.out, "R 4 5 0 = 2:1\n"));
  const RunResult c = run_ccmv("curvature " + kModel + " --component 0 2 0 2");
  CHECK(c.code == 0);
  CHECK(c.out == "R(0,2,0,2) = 3\n");
  CHECK(run_ccmv("curvature " + kModel + " --component 0 2 0 9").code == 2);
}

TEST_CASE("ricci") {
  const RunResult r = run_ccmv("ricci " + kModel);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "scal = -8\n"));
  CHECK(contains(r.out, "Q e4 = 4:4\n"));
  const RunResult t = run_ccmv("ricci " + kModel + " --format tsv");
  CHECK(contains(t.out, "ric\t0\t0\t-4\n"));
  CHECK(contains(t.out, "scal\t\t\t-8\n"));
}

TEST_CASE("sectional") {
  CHECK(run_ccmv("sectional " + kModel + " --plane 0 2").out == "sec 0 2 = -3\n");
  CHECK(run_ccmv("sectional " + kModel + " --plane 0 4").out == "sec 0 4 = 1\n");
  CHECK(run_ccmv("sectional " + kModel + " --plane 1 1").code == 2);
}

TEST_CASE("verify") {
  const RunResult r = run_ccmv("verify " + kModel);
  CHECK(r.code == 1);
  CHECK(contains(r.out, "FAIL  EQ-2.19  args=(e0) lhs=2:1 rhs=-1:1\n"));
  CHECK(contains(r.out, "PASS  NORMALITY\n"));
  CHECK(contains(r.out, "75 identities: 65 PASS, 10 FAIL\n"));

  const RunResult ok = run_ccmv("verify " + kModel + " --suite axioms");
  CHECK(ok.code == 0);
  const RunResult t = run_ccmv("verify " + kModel + " --format tsv --samples 4 --seed 7");
  CHECK(contains(t.out, "EQ-2.19\tFAIL\t"));
  CHECK(contains(t.out, "# model=heisenberg suite=all total=75 pass=65 fail=10\n"));
}

TEST_CASE("diff") {
  const RunResult r = run_ccmv("diff " + kModel + " --expected " CCM_DATA_DIR "/iwasawa_expected.ccmx");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "MATCH     R 0 2 0 = 3:2\n"));
  CHECK(contains(r.out, "MISMATCH  scal = 24  computed -8\n"));
  CHECK(contains(r.out, "MISMATCH  R 0 1 4 = 0  computed 2:5\n"));

  const std::string path = temp_path("good.ccmx");
  std::ofstream(path) << "sec 0 4 = 1\nhol 0 = 0\n";
  CHECK(run_ccmv("diff " + kModel + " --expected " + path).code == 0);
  std::ofstream(path) << "sec 0 = 1\n";
  CHECK(run_ccmv("diff " + kModel + " --expected " + path).code == 2);
}

TEST_CASE("example") {
  const RunResult r = run_ccmv("example heisenberg");
  CHECK(r.code == 0);
  std::ifstream in(kModel);
  const std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(r.out == file);
  const std::string path = temp_path("emit.ccm");
  CHECK(run_ccmv("example heisenberg --emit " + path).code == 0);
  CHECK(run_ccmv("validate " + path).code == 0);
  CHECK(run_ccmv("example sphere").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_ccmv("").code == 2);
  CHECK(run_ccmv("frobnicate").code == 2);
  CHECK(run_ccmv("verify " + kModel + " --suite nonsense").code == 2);
  CHECK(run_ccmv("verify /nonexistent.ccm").code == 2);
  CHECK(run_ccmv("--help").code == 0);
}
