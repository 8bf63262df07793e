#pragma once

#include <json.hpp>

#include <ostream>
#include <span>
#include <string>

#include "tact/analysis.hpp"
#include "tact/states.hpp"

namespace tact {

/// printf("%.{digits}g"), with |x| < 1e-10 printed as 0.
std::string format_significant(double x, int digits = 6);

/// Round-trip representation (17 significant digits).
std::string format_full(double x);

/// Ascending powers with explicit signs: "0.142857 + 1.03016 u + u^2".
/// Coefficients below 1e-10 of the largest one are dropped.
std::string format_polynomial(std::span<const double> b);

nlohmann::json to_json(const SpectrumReport& report);
SpectrumReport spectrum_from_json(const nlohmann::json& j);

/// Header `J,k,zeta,n1,n2,nu,g0,energy_over_chi`, one row per level.
void write_spectrum_csv(std::ostream& os, const SpectrumReport& report, bool header = true);

/// Human-readable level listing.
void write_spectrum_text(std::ostream& os, const SpectrumReport& report);

/// Rows {k,zeta;n1,n2,nu}  y(u)  g0  E/chi grouped by sector in catalog order.
void write_table_text(std::ostream& os, const SpectrumReport& report);
void write_table_csv(std::ostream& os, const SpectrumReport& report, bool header = true);
nlohmann::json table_to_json(const SpectrumReport& report);

struct StateListing {
  SpinState state;
  double energy_over_chi = 0.0;
  double residual = 0.0;
};

void write_states_text(std::ostream& os, std::span<const StateListing> states);
void write_states_csv(std::ostream& os, std::span<const StateListing> states);
nlohmann::json states_to_json(int J, double chi, std::span<const StateListing> states,
                              double gram_max_offdiag);

}  // namespace tact
