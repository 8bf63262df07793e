#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tact/hs_solver.hpp"

namespace tact {

struct VerifyOptions {
  int j_min = 0;
  int j_max = 5;
  double tolerance = 1e-8;       // Bethe residual, oracle (x diameter), state residual (x (1+|E|))
  double gram_tolerance = 1e-7;
  int state_cap = 30;            // eigenstates are checked for J <= state_cap
  SolverOptions solver;
  std::function<TridiagonalSystem(const SectorLabel&)> system_builder;
};

enum class VerifyStatus { Pass = 0, Violation = 1, NumericalFailure = 3 };

struct VerifyRow {
  int J = 0;
  bool completeness = false;
  double max_bethe_residual = 0.0;
  double oracle_relative_deviation = 0.0;  // max |E_bethe - E_dense| / diameter
  std::optional<double> max_state_residual; // max ||H psi - E psi|| / (1 + |E|)
  std::optional<double> gram_deviation;
  std::vector<std::string> violations;
  std::vector<std::string> failures;        // numerical breakdowns
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  VerifyStatus status() const;
};

VerifyReport run_verification(const VerifyOptions& options);

nlohmann::json to_json(const VerifyReport& report);

}  // namespace tact
