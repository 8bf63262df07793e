#include "tact/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tact/errors.hpp"
#include "tact/oracle.hpp"
#include "tact/polynomials.hpp"

namespace tact {

namespace {

template <class Error>
[[noreturn]] void rethrow_with_sector(const Error& e, const SectorLabel& s) {
  const std::string what = e.what();
  if (what.find(to_string(s)) != std::string::npos) throw e;
  throw Error(what + " [sector " + to_string(s) + "]");
}

void annotate(SpectrumReport& report, const AnalysisOptions& options) {
  const auto& levels = report.levels;
  const std::size_t n = levels.size();
  report.completeness = static_cast<long>(n) == 2L * report.J + 1;
  if (n == 0) return;

  report.spectral_diameter = levels.back().energy_over_chi - levels.front().energy_over_chi;
  const double zero_tol = options.zero_level_tolerance * report.spectral_diameter;

  report.zero_level_count = 0;
  report.symmetry_defect = 0.0;
  report.max_bethe_residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = levels[i].energy_over_chi;
    if (std::abs(e) <= zero_tol) ++report.zero_level_count;
    report.symmetry_defect =
        std::max(report.symmetry_defect, std::abs(e + levels[n - 1 - i].energy_over_chi));
    report.max_bethe_residual = std::max(report.max_bethe_residual, levels[i].bethe_residual);
  }

  report.gap_pairs.clear();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double gap = levels[i + 1].energy_over_chi - levels[i].energy_over_chi;
    if (gap < options.gap_threshold) {
      report.gap_pairs.push_back({static_cast<int>(i), static_cast<int>(i + 1), gap});
    }
  }
}

}  // namespace

SpectrumReport full_spectrum(int J, double chi, const AnalysisOptions& options) {
  SpectrumReport report;
  report.J = J;
  report.chi = chi;

  for (const auto& entry : enumerate_sectors(J).sectors) {
    const SectorLabel& sector = entry.label;
    try {
      const TridiagonalSystem system =
          options.system_builder ? options.system_builder(sector) : build_tridiagonal(sector);
      for (auto& sol : solve_system(system, options.solver)) {
        const ZeroSet zeros = find_zeros(sol);
        Level level;
        level.energy_over_chi = sol.energy_over_chi;
        level.sector = sector;
        level.zeta = sol.zeta;
        level.g0 = sol.g0;
        level.b = std::move(sol.b);
        level.zeros_u = zeros.zeros_u;
        level.bethe_residual = bethe_residual(zeros).max_relative();
        report.levels.push_back(std::move(level));
      }
    } catch (const InvariantViolation& e) {
      rethrow_with_sector(e, sector);
    } catch (const NumericalError& e) {
      rethrow_with_sector(e, sector);
    }
  }

  std::stable_sort(report.levels.begin(), report.levels.end(),
                   [](const Level& a, const Level& b) { return a.energy_over_chi < b.energy_over_chi; });
  annotate(report, options);

  if (options.with_oracle) report.oracle_max_dev = compare_to_oracle(report).max_abs_deviation;
  return report;
}

std::vector<TrendRow> degeneracy_trend(const std::vector<int>& Js, double chi, double threshold,
                                       const SolverOptions& solver) {
  std::vector<TrendRow> rows;
  rows.reserve(Js.size());
  for (int J : Js) {
    AnalysisOptions opts;
    opts.solver = solver;
    opts.gap_threshold = threshold;
    const SpectrumReport report = full_spectrum(J, chi, opts);
    TrendRow row;
    row.J = J;
    row.min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < report.levels.size(); ++i) {
      const double gap = report.levels[i + 1].energy_over_chi - report.levels[i].energy_over_chi;
      row.min_gap = std::min(row.min_gap, gap);
      if (gap < threshold) {
        ++row.pairs_below_threshold;
        row.max_gap = std::max(row.max_gap, gap);
      }
    }
    if (report.levels.size() < 2) row.min_gap = 0.0;
    else row.lowest_pair_gap = (report.levels[1].energy_over_chi - report.levels[0].energy_over_chi);
    rows.push_back(row);
  }
  return rows;
}

bool is_non_decreasing(const std::vector<TrendRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].pairs_below_threshold < rows[i - 1].pairs_below_threshold) return false;
  }
  return true;
}

OracleComparison compare_to_oracle(const SpectrumReport& report) {
  const std::vector<double> dense = dense_spectrum(build_hamiltonian(report.J));
  if (dense.size() != report.levels.size()) {
    throw InvariantViolation("Bethe spectrum has " + std::to_string(report.levels.size()) +
                             " levels, dense has " + std::to_string(dense.size()));
  }
  OracleComparison out;
  out.per_level.reserve(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    const double dev = report.levels[i].energy_over_chi - dense[i];
    out.per_level.push_back(dev);
    out.max_abs_deviation = std::max(out.max_abs_deviation, std::abs(dev));
  }
  out.spectral_diameter = dense.back() - dense.front();
  return out;
}

OracleComparison compare_to_oracle(int J, const SolverOptions& solver) {
  AnalysisOptions opts;
  opts.solver = solver;
  return compare_to_oracle(full_spectrum(J, 1.0, opts));
}

std::vector<SectorLabel> zero_level_sectors(const SpectrumReport& report) {
  std::vector<SectorLabel> out;
  const double tol = 1e-9 * report.spectral_diameter;
  for (const Level& level : report.levels) {
    if (std::abs(level.energy_over_chi) <= tol) out.push_back(level.sector);
  }
  return out;
}

}  // namespace tact
