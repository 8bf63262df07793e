#include "tact/hs_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include "tact/errors.hpp"
#include "tact/precision.hpp"
#include "tact/tridiagonal_eigen.hpp"

namespace tact {

namespace {

constexpr int kAutoDoubleMaxK = 6;
constexpr int kAutoBitsPerDegree = 4;

// c = (1 + 2 delta_{nu,1}) / 2, the weight of the singular point u = 0.
double origin_weight(const SectorLabel& s) { return 0.5 * s.seniority_factor(); }

struct RawSolution {
  double g0;
  std::vector<double> b;
  double energy_over_chi;
  std::vector<WideReal> b_wide;
};

template <class Real>
std::vector<RawSolution> solve_in(const TridiagonalSystem& sys) {
  using std::exp;
  using std::log;
  using std::sqrt;
  using Traits = RealTraits<Real>;

  const SectorLabel& s = sys.sector;
  const int n = sys.dim();
  const int k = n - 1;

  std::vector<Real> diag(n), off(k), log_scale(n, Real(0));
  for (int j = 0; j < n; ++j) diag[j] = Real(sys.diag[j]);
  for (int j = 1; j <= k; ++j) {
    const Real lower(sys.sub[j]);
    const Real upper(sys.sup[j - 1]);
    // F = D T D^{-1} with D = diag(exp(log_scale)).
    log_scale[j] = log_scale[j - 1] + log(lower / upper) / Real(2);
    const Real magnitude = sqrt(lower * upper);
    off[j - 1] = lower < Real(0) ? Real(-magnitude) : magnitude;
  }

  const auto eig = symmetric_tridiagonal_eigen<Real>(std::move(diag), off);

  const Real factor(s.seniority_factor());
  const Real imbalance(s.pair_imbalance());

  std::vector<RawSolution> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto& v = eig.vectors[i];
    if (v[k] == Real(0)) {
      throw NumericalError("eigenvector with vanishing leading coefficient in sector " +
                           to_string(s));
    }
    std::vector<Real> b(n);
    for (int j = 0; j < n; ++j) b[j] = v[j] / v[k] * exp(log_scale[j] - log_scale[k]);
    b[k] = Real(1);

    Real energy;
    if (k == 0) {
      energy = factor * imbalance;
    } else {
      if (b[0] == Real(0)) {
        throw NumericalError("b0 vanished in sector " + to_string(s));
      }
      energy = Real(2) * factor * (-b[1] / b[0] + imbalance / Real(2));
    }

    RawSolution raw{Traits::to_double(eig.values[i]), {}, Traits::to_double(energy), {}};
    raw.b.reserve(n);
    for (const Real& x : b) raw.b.push_back(Traits::to_double(x));
    if constexpr (!std::is_same_v<Real, double>) raw.b_wide = std::move(b);
    out.push_back(std::move(raw));
  }
  return out;
}

std::vector<RawSolution> solve_at(const TridiagonalSystem& sys, int bits) {
  if (bits <= kDoubleBits) return solve_in<double>(sys);
  WidePrecisionScope scope(bits);
  return solve_in<WideReal>(sys);
}

}  // namespace

int auto_precision_bits(int k) {
  if (k <= kAutoDoubleMaxK) return kDoubleBits;
  return 64 + kAutoBitsPerDegree * k;
}

TridiagonalSystem build_tridiagonal(const SectorLabel& sector) {
  if (sector.k < 0 || sector.J != 2 * sector.k + sector.n1 + sector.n2 + sector.nu) {
    throw DomainError("inconsistent sector " + to_string(sector));
  }
  const int k = sector.k;
  const double c = origin_weight(sector);
  const double n12 = sector.n1 + sector.n2;

  TridiagonalSystem sys{sector, std::vector<double>(k + 1, 0.0), std::vector<double>(k + 1, 0.0),
                        std::vector<double>(k + 1, 0.0)};
  for (int j = 0; j <= k; ++j) {
    sys.diag[j] = static_cast<double>(j * sector.pair_imbalance());
    if (j >= 1) sys.sub[j] = -(k - j + 1) * (k + j + n12 + c - 1.0);
    if (j < k) sys.sup[j] = -(j + 1) * (c + j);
  }
  return sys;
}

void check_symmetrizable(const TridiagonalSystem& system) {
  const int n = system.dim();
  if (n == 0 || static_cast<int>(system.sub.size()) != n || static_cast<int>(system.sup.size()) != n) {
    throw InvariantViolation("malformed tridiagonal system for sector " + to_string(system.sector));
  }
  for (int j = 1; j < n; ++j) {
    if (!(system.sub[j] * system.sup[j - 1] > 0.0)) {
      throw InvariantViolation("off-diagonal product sub[" + std::to_string(j) + "]*sup[" +
                               std::to_string(j - 1) + "] is not positive in sector " +
                               to_string(system.sector));
    }
  }
}

std::vector<HsSolution> solve_system(const TridiagonalSystem& system, const SolverOptions& options) {
  check_symmetrizable(system);

  int bits = options.precision_bits > 0 ? std::max(options.precision_bits, kDoubleBits)
                                        : auto_precision_bits(system.dim() - 1);
  std::vector<RawSolution> raw = solve_at(system, bits);

  if (options.extend_on_underflow && system.dim() > 1) {
    const bool underflow = std::any_of(raw.begin(), raw.end(), [](const RawSolution& r) {
      return std::abs(r.b[0]) < 1e-300 || !std::isfinite(r.energy_over_chi);
    });
    if (underflow) {
      bits = std::max(2 * bits, 128);
      raw = solve_at(system, bits);
    }
  }

  // raw arrives ordered by g0; a stable sort keeps that order on energy ties.
  std::vector<int> order(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return raw[a].energy_over_chi < raw[b].energy_over_chi;
  });

  std::vector<HsSolution> out;
  out.reserve(raw.size());
  int zeta = 1;
  for (int idx : order) {
    out.push_back(HsSolution{system.sector, zeta++, raw[idx].g0, std::move(raw[idx].b),
                             raw[idx].energy_over_chi, bits, std::move(raw[idx].b_wide)});
  }
  return out;
}

std::vector<HsSolution> solve_sector(const SectorLabel& sector, const SolverOptions& options) {
  return solve_system(build_tridiagonal(sector), options);
}

VanVleck van_vleck(const SectorLabel& sector, double g0) {
  const double k = sector.k;
  return {k * (origin_weight(sector) + sector.n1 + sector.n2 + k), g0};
}

double energy_from_coefficients(const SectorLabel& sector, const std::vector<double>& b) {
  const double factor = sector.seniority_factor();
  if (sector.k == 0) return factor * sector.pair_imbalance();
  if (b.size() < 2 || b[0] == 0.0) throw DomainError("energy needs b0 != 0 and k >= 1");
  return 2.0 * factor * (-b[1] / b[0] + 0.5 * sector.pair_imbalance());
}

}  // namespace tact
