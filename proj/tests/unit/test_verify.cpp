#include <doctest.h>

#include <string>

#include "tact/hs_solver.hpp"
#include "tact/verify.hpp"

using namespace tact;

TEST_CASE("clean run through J = 8") {
  VerifyOptions opt;
  opt.j_min = 0;
  opt.j_max = 8;
  const auto report = run_verification(opt);
  REQUIRE(report.rows.size() == 9);
  CHECK(report.status() == VerifyStatus::Pass);
  for (const auto& row : report.rows) {
    CHECK(row.completeness);
    CHECK(row.oracle_relative_deviation <= 1e-10);
    CHECK(row.max_bethe_residual <= 1e-8);
    REQUIRE(row.max_state_residual.has_value());
    CHECK(*row.max_state_residual <= 1e-8);
    CHECK(row.violations.empty());
  }
  const auto j = to_json(report);
  CHECK(j.at("status") == "pass");
  CHECK(j.at("rows").size() == 9);
}

TEST_CASE("state cap skips eigenstate checks above it") {
  VerifyOptions opt;
  opt.j_min = 3;
  opt.j_max = 5;
  opt.state_cap = 4;
  const auto report = run_verification(opt);
  CHECK(report.rows[1].max_state_residual.has_value());
  CHECK_FALSE(report.rows[2].max_state_residual.has_value());
}

TEST_CASE("flipped off-diagonal sign is a violation with sector attribution") {
  VerifyOptions opt;
  opt.j_min = 4;
  opt.j_max = 4;
  opt.system_builder = [](const SectorLabel& s) {
    auto sys = build_tridiagonal(s);
    if (sys.dim() > 1) sys.sup[0] = -sys.sup[0];
    return sys;
  };
  const auto report = run_verification(opt);
  CHECK(report.status() == VerifyStatus::Violation);
  REQUIRE_FALSE(report.rows[0].violations.empty());
  CHECK(report.rows[0].violations[0].find("{2;0,0,0}") != std::string::npos);
}

TEST_CASE("a wrong diagonal is caught by the oracle comparison") {
  VerifyOptions opt;
  opt.j_min = 5;
  opt.j_max = 5;
  opt.system_builder = [](const SectorLabel& s) {
    auto sys = build_tridiagonal(s);
    if (s == make_sector(2, 1, 0, 0)) sys.diag[2] += 0.25;
    return sys;
  };
  const auto report = run_verification(opt);
  CHECK(report.status() == VerifyStatus::Violation);
  bool attributed = false;
  for (const auto& v : report.rows[0].violations) attributed = attributed || v.find("{2;1,0,0}") != std::string::npos;
  CHECK(attributed);
}

TEST_CASE("bad range is rejected") {
  VerifyOptions opt;
  opt.j_min = 3;
  opt.j_max = 2;
  CHECK_THROWS(run_verification(opt));
}
