#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tact/hs_solver.hpp"
#include "tact/sectors.hpp"

namespace tact {

/// One eigenvalue of the full J problem with its Bethe provenance.
struct Level {
  double energy_over_chi = 0.0;
  SectorLabel sector;
  int zeta = 1;
  double g0 = 0.0;
  std::vector<double> b;
  std::vector<double> zeros_u;
  double bethe_residual = 0.0;  // max relative residual over the zeros

  friend bool operator==(const Level&, const Level&) = default;
};

/// Consecutive levels closer than the gap threshold.
struct GapPair {
  int low_index = 0;
  int high_index = 0;
  double gap = 0.0;  // units of chi

  friend bool operator==(const GapPair&, const GapPair&) = default;
};

struct SpectrumReport {
  int J = 0;
  double chi = 1.0;
  std::vector<Level> levels;  // ascending energy
  std::vector<GapPair> gap_pairs;
  int zero_level_count = 0;
  double symmetry_defect = 0.0;     // max_i |E_i + E_{n-1-i}|, units of chi
  double spectral_diameter = 0.0;   // units of chi
  double max_bethe_residual = 0.0;
  bool completeness = false;        // levels.size() == 2J + 1
  std::optional<double> oracle_max_dev;  // units of chi, when the oracle was run

  double energy(std::size_t i) const { return chi * levels.at(i).energy_over_chi; }

  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

struct AnalysisOptions {
  SolverOptions solver;
  double gap_threshold = 1e-3;        // units of chi
  double zero_level_tolerance = 1e-9; // relative to the spectral diameter
  bool with_oracle = false;
  /// Replaces build_tridiagonal when set; lets the verifier be fault-tested.
  std::function<TridiagonalSystem(const SectorLabel&)> system_builder;
};

/// Solves every sector of J, finds the zeros of every polynomial, and merges
/// everything into one sorted spectrum. Errors carry the sector that failed.
SpectrumReport full_spectrum(int J, double chi, const AnalysisOptions& options = {});

struct TrendRow {
  int J = 0;
  int pairs_below_threshold = 0;
  double min_gap = 0.0;          // smallest consecutive gap in the spectrum
  double max_gap = 0.0;          // largest gap among the counted pairs, 0 if none
  double lowest_pair_gap = 0.0;  // E_1 - E_0

  friend bool operator==(const TrendRow&, const TrendRow&) = default;
};

/// Gaps are reported in units of chi; the threshold applies to gap / chi.
std::vector<TrendRow> degeneracy_trend(const std::vector<int>& Js, double chi,
                                       double threshold = 1e-3,
                                       const SolverOptions& solver = {});

/// True when pairs_below_threshold never decreases along the rows.
bool is_non_decreasing(const std::vector<TrendRow>& rows);

struct OracleComparison {
  double max_abs_deviation = 0.0;
  std::vector<double> per_level;  // bethe - dense, sorted order
  double spectral_diameter = 0.0;
};

/// Entrywise comparison of the sorted Bethe and dense spectra (units of chi).
OracleComparison compare_to_oracle(int J, const SolverOptions& solver = {});
OracleComparison compare_to_oracle(const SpectrumReport& report);

/// Sectors containing a level with |E| <= tolerance * diameter.
std::vector<SectorLabel> zero_level_sectors(const SpectrumReport& report);

}  // namespace tact
