#include "tact/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "tact/errors.hpp"
#include "tact/sectors.hpp"

namespace tact {

using nlohmann::json;

std::string format_significant(double x, int digits) {
  if (std::abs(x) < 1e-10) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string format_full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_polynomial(std::span<const double> b) {
  if (b.empty()) return "0";
  double largest = 0.0;
  for (double c : b) largest = std::max(largest, std::abs(c));
  const double cutoff = 1e-10 * largest;

  std::string out;
  for (std::size_t j = 0; j < b.size(); ++j) {
    const double c = b[j];
    if (std::abs(c) <= cutoff) continue;
    const bool negative = c < 0;
    const double mag = std::abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = j > 0 && std::abs(mag - 1.0) < 1e-12;
    if (!unit) out += format_significant(mag);
    if (j > 0) {
      if (!unit) out += ' ';
      out += 'u';
      if (j > 1) out += '^' + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

json sector_json(const SectorLabel& s) {
  return json{{"k", s.k}, {"n1", s.n1}, {"n2", s.n2}, {"nu", s.nu}};
}

SectorLabel sector_from_json(const json& j) {
  return make_sector(j.at("k").get<int>(), j.at("n1").get<int>(), j.at("n2").get<int>(),
                     j.at("nu").get<int>());
}

// Residuals and deviations keep their magnitude even when tiny.
std::string format_metric(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string label_with_zeta(const SectorLabel& s, int zeta) {
  std::ostringstream os;
  os << '{' << s.k << ',' << zeta << ';' << s.n1 << ',' << s.n2 << ',' << s.nu << '}';
  return os.str();
}

// Table rows: catalog order of sectors, zeta ascending inside each.
std::vector<const Level*> table_order(const SpectrumReport& report) {
  std::vector<const Level*> rows;
  for (const auto& entry : enumerate_sectors(report.J).sectors) {
    std::vector<const Level*> block;
    for (const Level& level : report.levels) {
      if (level.sector == entry.label) block.push_back(&level);
    }
    std::sort(block.begin(), block.end(), [](const Level* a, const Level* b) { return a->zeta < b->zeta; });
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return rows;
}

}  // namespace

json to_json(const SpectrumReport& report) {
  json levels = json::array();
  for (const Level& level : report.levels) {
    levels.push_back({{"sector", sector_json(level.sector)},
                      {"zeta", level.zeta},
                      {"g0", level.g0},
                      {"energy_over_chi", level.energy_over_chi},
                      {"zeros_u", level.zeros_u},
                      {"b", level.b},
                      {"bethe_residual", level.bethe_residual}});
  }
  json gaps = json::array();
  for (const GapPair& g : report.gap_pairs) {
    gaps.push_back({{"low_index", g.low_index}, {"high_index", g.high_index}, {"gap", g.gap}});
  }
  json checks{{"completeness", report.completeness},
              {"symmetry_defect", report.symmetry_defect},
              {"max_bethe_residual", report.max_bethe_residual},
              {"oracle_max_dev", report.oracle_max_dev ? json(*report.oracle_max_dev) : json(nullptr)}};
  return json{{"J", report.J},
              {"chi", report.chi},
              {"levels", std::move(levels)},
              {"checks", std::move(checks)},
              {"gap_pairs", std::move(gaps)},
              {"zero_level_count", report.zero_level_count},
              {"spectral_diameter", report.spectral_diameter}};
}

SpectrumReport spectrum_from_json(const json& j) {
  SpectrumReport report;
  report.J = j.at("J").get<int>();
  report.chi = j.at("chi").get<double>();
  for (const json& item : j.at("levels")) {
    Level level;
    level.sector = sector_from_json(item.at("sector"));
    if (level.sector.J != report.J) throw DomainError("level sector does not belong to J");
    level.zeta = item.at("zeta").get<int>();
    level.g0 = item.at("g0").get<double>();
    level.energy_over_chi = item.at("energy_over_chi").get<double>();
    level.zeros_u = item.at("zeros_u").get<std::vector<double>>();
    level.b = item.value("b", std::vector<double>{});
    level.bethe_residual = item.value("bethe_residual", 0.0);
    report.levels.push_back(std::move(level));
  }
  const json& checks = j.at("checks");
  report.completeness = checks.at("completeness").get<bool>();
  report.symmetry_defect = checks.at("symmetry_defect").get<double>();
  report.max_bethe_residual = checks.at("max_bethe_residual").get<double>();
  if (!checks.at("oracle_max_dev").is_null()) report.oracle_max_dev = checks.at("oracle_max_dev").get<double>();
  for (const json& g : j.value("gap_pairs", json::array())) {
    report.gap_pairs.push_back({g.at("low_index").get<int>(), g.at("high_index").get<int>(),
                                g.at("gap").get<double>()});
  }
  report.zero_level_count = j.value("zero_level_count", 0);
  report.spectral_diameter = j.value("spectral_diameter", 0.0);
  return report;
}

void write_spectrum_csv(std::ostream& os, const SpectrumReport& report, bool header) {
  if (header) os << "J,k,zeta,n1,n2,nu,g0,energy_over_chi\n";
  for (const Level& l : report.levels) {
    os << report.J << ',' << l.sector.k << ',' << l.zeta << ',' << l.sector.n1 << ',' << l.sector.n2
       << ',' << l.sector.nu << ',' << format_full(l.g0) << ',' << format_full(l.energy_over_chi) << '\n';
  }
}

void write_spectrum_text(std::ostream& os, const SpectrumReport& report) {
  os << "J = " << report.J << "  chi = " << format_significant(report.chi) << "  levels = "
     << report.levels.size() << "\n";
  os << std::left << std::setw(6) << "#" << std::setw(16) << "{k,zeta;n1,n2,nu}" << std::setw(14) << "g0"
     << std::setw(14) << "E/chi" << "E\n";
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    const Level& l = report.levels[i];
    os << std::left << std::setw(6) << i << std::setw(16) << label_with_zeta(l.sector, l.zeta)
       << std::setw(14) << format_significant(l.g0) << std::setw(14)
       << format_significant(l.energy_over_chi) << format_significant(report.energy(i)) << '\n';
  }
  os << "zero levels: " << report.zero_level_count
     << "  symmetry defect: " << format_metric(report.symmetry_defect)
     << "  near-degenerate pairs: " << report.gap_pairs.size()
     << "  max Bethe residual: " << format_metric(report.max_bethe_residual);
  if (report.oracle_max_dev) os << "  oracle max dev: " << format_metric(*report.oracle_max_dev);
  os << '\n';
}

void write_table_text(std::ostream& os, const SpectrumReport& report) {
  for (const Level* l : table_order(report)) {
    os << std::left << std::setw(4) << report.J << std::setw(16) << label_with_zeta(l->sector, l->zeta)
       << std::setw(72) << format_polynomial(l->b) << std::setw(14) << format_significant(l->g0)
       << format_significant(l->energy_over_chi) << '\n';
  }
}

void write_table_csv(std::ostream& os, const SpectrumReport& report, bool header) {
  if (header) os << "J,k,zeta,n1,n2,nu,polynomial,g0,energy_over_chi\n";
  for (const Level* l : table_order(report)) {
    os << report.J << ',' << l->sector.k << ',' << l->zeta << ',' << l->sector.n1 << ','
       << l->sector.n2 << ',' << l->sector.nu << ",\"";
    for (std::size_t j = 0; j < l->b.size(); ++j) os << (j ? " " : "") << format_full(l->b[j]);
    os << "\"," << format_full(l->g0) << ',' << format_full(l->energy_over_chi) << '\n';
  }
}

json table_to_json(const SpectrumReport& report) {
  json rows = json::array();
  for (const Level* l : table_order(report)) {
    rows.push_back({{"sector", sector_json(l->sector)},
                    {"zeta", l->zeta},
                    {"b", l->b},
                    {"g0", l->g0},
                    {"energy_over_chi", l->energy_over_chi}});
  }
  return json{{"J", report.J}, {"rows", std::move(rows)}};
}

void write_states_text(std::ostream& os, std::span<const StateListing> states) {
  for (const StateListing& item : states) {
    const SpinState& s = item.state;
    os << "state " << label_with_zeta(s.sector, s.zeta) << "  J = " << s.J
       << "  E/chi = " << format_significant(item.energy_over_chi)
       << "  residual = " << format_metric(item.residual) << '\n';
    for (int M = s.J; M >= -s.J; --M) {
      const auto a = s.amplitude(M);
      if (a == std::complex<double>(0.0)) continue;
      os << "  M = " << std::setw(5) << std::right << M << "  " << std::setw(14) << format_significant(a.real())
         << std::setw(14) << format_significant(a.imag()) << std::left << '\n';
    }
  }
}

void write_states_csv(std::ostream& os, std::span<const StateListing> states) {
  os << "J,k,zeta,n1,n2,nu,M,re,im\n";
  for (const StateListing& item : states) {
    const SpinState& s = item.state;
    for (int M = s.J; M >= -s.J; --M) {
      const auto a = s.amplitude(M);
      if (a == std::complex<double>(0.0)) continue;
      os << s.J << ',' << s.sector.k << ',' << s.zeta << ',' << s.sector.n1 << ',' << s.sector.n2 << ','
         << s.sector.nu << ',' << M << ',' << format_full(a.real()) << ',' << format_full(a.imag()) << '\n';
    }
  }
}

json states_to_json(int J, double chi, std::span<const StateListing> states, double gram_max_offdiag) {
  json list = json::array();
  for (const StateListing& item : states) {
    const SpinState& s = item.state;
    json amps = json::array();
    for (int M = s.J; M >= -s.J; --M) {
      const auto a = s.amplitude(M);
      if (a == std::complex<double>(0.0)) continue;
      amps.push_back({{"M", M}, {"re", a.real()}, {"im", a.imag()}});
    }
    list.push_back({{"sector", sector_json(s.sector)},
                    {"zeta", s.zeta},
                    {"energy_over_chi", item.energy_over_chi},
                    {"residual", item.residual},
                    {"amplitudes", std::move(amps)}});
  }
  return json{{"J", J}, {"chi", chi}, {"states", std::move(list)}, {"gram_max_offdiag", gram_max_offdiag}};
}

}  // namespace tact
