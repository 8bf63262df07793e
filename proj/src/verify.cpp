#include "tact/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tact/analysis.hpp"
#include "tact/errors.hpp"
#include "tact/oracle.hpp"
#include "tact/polynomials.hpp"
#include "tact/states.hpp"

namespace tact {

namespace {

std::string describe(int J, const Level& level) {
  std::ostringstream os;
  os << "J=" << J << " sector " << to_string(level.sector) << " zeta=" << level.zeta;
  return os.str();
}

void check_states(const SpectrumReport& report, const VerifyOptions& options, VerifyRow& row) {
  std::vector<SpinState> states;
  std::vector<double> energies;
  states.reserve(report.levels.size());
  double worst = 0.0;
  for (const Level& level : report.levels) {
    HsSolution sol{level.sector, level.zeta, level.g0, level.b, level.energy_over_chi, 0, {}};
    SpinState state = build_state(sol, symmetric_functions(sol));
    const double r = residual_norm(state, level.energy_over_chi, 1.0) / (1.0 + std::abs(level.energy_over_chi));
    if (r > options.tolerance) {
      std::ostringstream os;
      os << describe(report.J, level) << ": eigen-residual " << r << " > " << options.tolerance;
      row.violations.push_back(os.str());
    }
    worst = std::max(worst, r);
    states.push_back(std::move(state));
    energies.push_back(level.energy_over_chi);
  }
  row.max_state_residual = worst;

  const GramReport gram = gram_check(states, energies, 1e-9 * report.spectral_diameter);
  row.gram_deviation = gram.max_deviation;
  if (gram.max_deviation > options.gram_tolerance) {
    std::ostringstream os;
    os << "J=" << report.J << ": Gram matrix deviates from identity by " << gram.max_deviation;
    row.violations.push_back(os.str());
  }
}

VerifyRow verify_one(int J, const VerifyOptions& options) {
  VerifyRow row;
  row.J = J;

  AnalysisOptions analysis;
  analysis.solver = options.solver;
  analysis.system_builder = options.system_builder;

  SpectrumReport report;
  try {
    report = full_spectrum(J, 1.0, analysis);
  } catch (const InvariantViolation& e) {
    row.violations.push_back("J=" + std::to_string(J) + ": " + e.what());
    return row;
  } catch (const NumericalError& e) {
    row.failures.push_back("J=" + std::to_string(J) + ": " + e.what());
    return row;
  }

  row.completeness = solution_count_total(J) == 2L * J + 1 && report.completeness;
  if (!row.completeness) {
    row.violations.push_back("J=" + std::to_string(J) + ": " + std::to_string(report.levels.size()) +
                             " levels instead of " + std::to_string(2 * J + 1));
    return row;
  }

  row.max_bethe_residual = report.max_bethe_residual;
  for (const Level& level : report.levels) {
    if (level.bethe_residual > options.tolerance) {
      std::ostringstream os;
      os << describe(J, level) << ": Bethe residual " << level.bethe_residual;
      row.violations.push_back(os.str());
    }
  }

  const OracleComparison cmp = compare_to_oracle(report);
  const double diameter = cmp.spectral_diameter;
  row.oracle_relative_deviation = diameter > 0 ? cmp.max_abs_deviation / diameter : cmp.max_abs_deviation;
  for (std::size_t i = 0; i < cmp.per_level.size(); ++i) {
    if (std::abs(cmp.per_level[i]) > options.tolerance * diameter) {
      std::ostringstream os;
      os << describe(J, report.levels[i]) << ": E/chi=" << report.levels[i].energy_over_chi
         << " deviates from dense eigenvalue by " << cmp.per_level[i];
      row.violations.push_back(os.str());
    }
  }

  if (J <= options.state_cap) {
    try {
      check_states(report, options, row);
    } catch (const NumericalError& e) {
      row.failures.push_back("J=" + std::to_string(J) + ": " + e.what());
    }
  }
  return row;
}

}  // namespace

VerifyStatus VerifyReport::status() const {
  bool failure = false;
  for (const VerifyRow& row : rows) {
    if (!row.violations.empty()) return VerifyStatus::Violation;
    failure = failure || !row.failures.empty();
  }
  return failure ? VerifyStatus::NumericalFailure : VerifyStatus::Pass;
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.j_min < 0 || options.j_max < options.j_min) throw DomainError("invalid J range");
  VerifyReport report;
  for (int J = options.j_min; J <= options.j_max; ++J) report.rows.push_back(verify_one(J, options));
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  using nlohmann::json;
  json rows = json::array();
  for (const VerifyRow& row : report.rows) {
    rows.push_back({{"J", row.J},
                    {"completeness", row.completeness},
                    {"max_bethe_residual", row.max_bethe_residual},
                    {"oracle_relative_deviation", row.oracle_relative_deviation},
                    {"max_state_residual", row.max_state_residual ? json(*row.max_state_residual) : json(nullptr)},
                    {"gram_deviation", row.gram_deviation ? json(*row.gram_deviation) : json(nullptr)},
                    {"violations", row.violations},
                    {"failures", row.failures}});
  }
  const char* status = "pass";
  if (report.status() == VerifyStatus::Violation) status = "violation";
  if (report.status() == VerifyStatus::NumericalFailure) status = "numerical_failure";
  return json{{"status", status}, {"rows", std::move(rows)}};
}

}  // namespace tact
