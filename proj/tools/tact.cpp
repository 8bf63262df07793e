#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tact/analysis.hpp"
#include "tact/errors.hpp"
#include "tact/polynomials.hpp"
#include "tact/report_io.hpp"
#include "tact/states.hpp"
#include "tact/verify.hpp"

namespace {

enum class Format { text, csv, json };

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct RunConfig {
  std::optional<int> j;
  std::optional<int> j_min;
  std::optional<int> j_max;
  double chi = 1.0;
  Format format = Format::text;
  std::optional<double> tolerance;
  int precision_bits = 0;
  std::string out;
  bool oracle = false;
  std::string sector;
  int zeta = 0;
  int state_cap = 30;
  bool inject_fault = false;
  double gap_threshold = 1e-3;
};

std::vector<int> j_values(const RunConfig& cfg) {
  if (cfg.j) {
    if (cfg.j_min || cfg.j_max) throw tact::DomainError("--j cannot be combined with --j-min/--j-max");
    if (*cfg.j < 0) throw tact::DomainError("J must be non-negative");
    return {*cfg.j};
  }
  if (!cfg.j_max) throw tact::DomainError("give --j or --j-max");
  const int lo = cfg.j_min.value_or(0);
  const int hi = *cfg.j_max;
  if (lo < 0 || hi < lo) throw tact::DomainError("J range must satisfy 0 <= j-min <= j-max");
  std::vector<int> out;
  for (int J = lo; J <= hi; ++J) out.push_back(J);
  return out;
}

int single_j(const RunConfig& cfg) {
  const auto js = j_values(cfg);
  if (js.size() != 1) throw tact::DomainError("this command takes a single --j");
  return js.front();
}

tact::SolverOptions solver_options(const RunConfig& cfg) {
  tact::SolverOptions s;
  s.precision_bits = cfg.precision_bits;
  return s;
}

tact::SectorLabel parse_sector(const std::string& text, int J) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw tact::DomainError("bad --sector '" + text + "', expected k,n1,n2,nu");
    }
  }
  if (v.size() != 4) throw tact::DomainError("bad --sector '" + text + "', expected k,n1,n2,nu");
  const tact::SectorLabel s = tact::make_sector(v[0], v[1], v[2], v[3]);
  if (s.J != J) throw tact::DomainError("sector " + tact::to_string(s) + " does not belong to J=" + std::to_string(J));
  return s;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& os) {
  tact::AnalysisOptions opt;
  opt.solver = solver_options(cfg);
  opt.gap_threshold = cfg.gap_threshold;
  opt.with_oracle = cfg.oracle;
  const auto js = j_values(cfg);
  nlohmann::json all = nlohmann::json::array();
  bool first = true;
  for (int J : js) {
    const tact::SpectrumReport report = tact::full_spectrum(J, cfg.chi, opt);
    switch (cfg.format) {
      case Format::text:
        tact::write_spectrum_text(os, report);
        break;
      case Format::csv:
        tact::write_spectrum_csv(os, report, first);
        break;
      case Format::json:
        all.push_back(tact::to_json(report));
        break;
    }
    first = false;
  }
  if (cfg.format == Format::json) os << (js.size() == 1 ? all.front() : all).dump(2) << "\n";
  return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& os) {
  tact::AnalysisOptions opt;
  opt.solver = solver_options(cfg);
  const tact::SpectrumReport report = tact::full_spectrum(single_j(cfg), cfg.chi, opt);
  switch (cfg.format) {
    case Format::text: tact::write_table_text(os, report); break;
    case Format::csv: tact::write_table_csv(os, report); break;
    case Format::json: os << tact::table_to_json(report).dump(2) << "\n"; break;
  }
  return kExitOk;
}

int cmd_states(const RunConfig& cfg, std::ostream& os) {
  const int J = single_j(cfg);
  std::vector<tact::SectorLabel> sectors;
  if (cfg.sector.empty() || cfg.sector == "all") {
    for (const auto& e : tact::enumerate_sectors(J).sectors) sectors.push_back(e.label);
  } else {
    sectors.push_back(parse_sector(cfg.sector, J));
  }

  std::vector<tact::StateListing> listings;
  for (const auto& s : sectors) {
    for (const tact::HsSolution& sol : tact::solve_sector(s, solver_options(cfg))) {
      if (cfg.zeta > 0 && sol.zeta != cfg.zeta) continue;
      tact::SpinState state;
      try {
        state = tact::build_state(sol, tact::symmetric_functions(sol));
      } catch (const tact::NumericalError& e) {
        throw tact::NumericalError(std::string(e.what()) + "; try a larger --precision-bits");
      }
      const double r = tact::residual_norm(state, sol.energy_over_chi * cfg.chi, cfg.chi);
      listings.push_back({std::move(state), sol.energy_over_chi, r});
    }
  }
  if (listings.empty()) throw tact::DomainError("no state matches the selection");

  switch (cfg.format) {
    case Format::text: tact::write_states_text(os, listings); break;
    case Format::csv: tact::write_states_csv(os, listings); break;
    case Format::json: {
      std::vector<tact::SpinState> states;
      std::vector<double> energies;
      for (const auto& l : listings) {
        states.push_back(l.state);
        energies.push_back(l.energy_over_chi);
      }
      double diameter = 0.0;
      if (energies.size() > 1) {
        const auto [lo, hi] = std::minmax_element(energies.begin(), energies.end());
        diameter = *hi - *lo;
      }
      const tact::GramReport gram = tact::gram_check(states, energies, 1e-9 * diameter);
      os << tact::states_to_json(J, cfg.chi, listings, gram.max_deviation).dump(2) << "\n";
      break;
    }
  }
  return kExitOk;
}

std::string metric(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

tact::TridiagonalSystem corrupted_system(const tact::SectorLabel& s) {
  tact::TridiagonalSystem sys = tact::build_tridiagonal(s);
  if (sys.dim() > 1) sys.sup[0] = -sys.sup[0];
  return sys;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  const auto js = j_values(cfg);
  tact::VerifyOptions opt;
  opt.j_min = js.front();
  opt.j_max = js.back();
  if (cfg.tolerance) opt.tolerance = *cfg.tolerance;
  opt.state_cap = cfg.state_cap;
  opt.solver = solver_options(cfg);
  if (cfg.inject_fault) opt.system_builder = corrupted_system;

  const tact::VerifyReport report = tact::run_verification(opt);
  switch (cfg.format) {
    case Format::json:
      os << tact::to_json(report).dump(2) << "\n";
      break;
    case Format::csv:
      os << "J,completeness,max_bethe_residual,oracle_relative_deviation,max_state_residual,gram_deviation,"
            "violations,failures\n";
      for (const auto& row : report.rows) {
        os << row.J << "," << (row.completeness ? 1 : 0) << "," << tact::format_full(row.max_bethe_residual)
           << "," << tact::format_full(row.oracle_relative_deviation) << ","
           << (row.max_state_residual ? tact::format_full(*row.max_state_residual) : "") << ","
           << (row.gram_deviation ? tact::format_full(*row.gram_deviation) : "") << ","
           << row.violations.size() << "," << row.failures.size() << "\n";
      }
      break;
    case Format::text:
      for (const auto& row : report.rows) {
        os << "J=" << row.J << "  complete=" << (row.completeness ? "yes" : "no")
           << "  bethe=" << metric(row.max_bethe_residual)
           << "  oracle=" << metric(row.oracle_relative_deviation);
        if (row.max_state_residual) os << "  state=" << metric(*row.max_state_residual);
        if (row.gram_deviation) os << "  gram=" << metric(*row.gram_deviation);
        os << "\n";
        for (const auto& v : row.violations) os << "  VIOLATION " << v << "\n";
        for (const auto& f : row.failures) os << "  FAILURE " << f << "\n";
      }
      break;
  }
  switch (report.status()) {
    case tact::VerifyStatus::Pass: return kExitOk;
    case tact::VerifyStatus::Violation: return kExitViolation;
    case tact::VerifyStatus::NumericalFailure: return kExitNumerical;
  }
  return kExitNumerical;
}

int cmd_gaps(const RunConfig& cfg, std::ostream& os) {
  const auto rows = tact::degeneracy_trend(j_values(cfg), cfg.chi, cfg.gap_threshold, solver_options(cfg));
  const bool trend = tact::is_non_decreasing(rows);
  switch (cfg.format) {
    case Format::json: {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& r : rows) {
        out.push_back({{"J", r.J},
                       {"pairs_below_threshold", r.pairs_below_threshold},
                       {"min_gap", r.min_gap},
                       {"max_gap", r.max_gap},
                       {"lowest_pair_gap", r.lowest_pair_gap}});
      }
      os << nlohmann::json{{"threshold", cfg.gap_threshold}, {"non_decreasing", trend}, {"rows", out}}.dump(2)
         << "\n";
      break;
    }
    case Format::csv:
      os << "J,pairs_below_threshold,min_gap,max_gap,lowest_pair_gap\n";
      for (const auto& r : rows) {
        os << r.J << "," << r.pairs_below_threshold << "," << tact::format_full(r.min_gap) << ","
           << tact::format_full(r.max_gap) << "," << tact::format_full(r.lowest_pair_gap) << "\n";
      }
      break;
    case Format::text:
      os << "J  pairs<" << tact::format_significant(cfg.gap_threshold) << "  min_gap  lowest_pair_gap\n";
      for (const auto& r : rows) {
        os << r.J << "  " << r.pairs_below_threshold << "  " << tact::format_significant(r.min_gap) << "  "
           << tact::format_significant(r.lowest_pair_gap) << "\n";
      }
      os << "non-decreasing: " << (trend ? "yes" : "no") << "\n";
      break;
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--j", cfg.j, "angular momentum J");
  cmd->add_option("--j-min", cfg.j_min, "first J of a range");
  cmd->add_option("--j-max", cfg.j_max, "last J of a range (inclusive)");
  cmd->add_option("--chi", cfg.chi, "interaction strength");
  cmd->add_option("--format", cfg.format, "text, csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}}));
  cmd->add_option("--precision-bits", cfg.precision_bits, "working precision; 0 picks it from the degree")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", cfg.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of the two-axis countertwisting Hamiltonian"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* spectrum = app.add_subcommand("spectrum", "all 2J+1 levels with their Bethe data");
  add_common(spectrum, cfg);
  spectrum->add_flag("--oracle", cfg.oracle, "also diagonalize the dense matrix");
  spectrum->add_option("--gap-threshold", cfg.gap_threshold, "near-degeneracy threshold in units of chi");

  auto* table = app.add_subcommand("table", "polynomial table grouped by sector");
  add_common(table, cfg);

  auto* states = app.add_subcommand("states", "eigenstate amplitudes in the |J,M> basis");
  add_common(states, cfg);
  states->add_option("--sector", cfg.sector, "k,n1,n2,nu or 'all'");
  states->add_option("--zeta", cfg.zeta, "only this solution index within the sector");

  auto* verify = app.add_subcommand("verify", "cross-check the Bethe route against the dense oracle");
  add_common(verify, cfg);
  verify->add_option("--tol", cfg.tolerance, "tolerance for residuals and oracle deviation");
  verify->add_option("--state-cap", cfg.state_cap, "check eigenstates for J up to this value");
  verify->add_flag("--inject-fault", cfg.inject_fault, "flip an off-diagonal sign in every sector");

  auto* gaps = app.add_subcommand("gaps", "near-degenerate pairs per J");
  add_common(gaps, cfg);
  gaps->add_option("--threshold", cfg.gap_threshold, "gap threshold in units of chi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      std::cerr << "error: cannot open " << cfg.out << "\n";
      return kExitUsage;
    }
  }
  std::ostream& os = cfg.out.empty() ? std::cout : file;

  try {
    if (*spectrum) return cmd_spectrum(cfg, os);
    if (*table) return cmd_table(cfg, os);
    if (*states) return cmd_states(cfg, os);
    if (*verify) return cmd_verify(cfg, os);
    if (*gaps) return cmd_gaps(cfg, os);
  } catch (const tact::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tact::InvariantViolation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
