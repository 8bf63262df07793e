#include "tact/states.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "tact/errors.hpp"
#include "tact/oracle.hpp"

namespace tact {

namespace {

using Complex = std::complex<double>;

struct VacuumComponent {
  int shift;      // extra b-boson count on top of 2q + 4 rho
  Complex phase;
};

struct Vacuum {
  std::array<VacuumComponent, 2> parts;
  int size;
};

Vacuum vacuum_of(const SectorLabel& s) {
  const Complex one{1, 0}, i{0, 1};
  const int key = 4 * s.n1 + 2 * s.n2 + s.nu;
  switch (key) {
    case 0b000: return {{{{0, one}, {0, one}}}, 1};
    case 0b001: return {{{{1, one}, {0, one}}}, 1};
    case 0b110: return {{{{0, one}, {4, one}}}, 2};
    case 0b111: return {{{{1, one}, {5, one}}}, 2};
    case 0b101: return {{{{1, one}, {3, i}}}, 2};
    case 0b011: return {{{{1, one}, {3, -i}}}, 2};
    case 0b100: return {{{{0, one}, {2, i}}}, 2};
    case 0b010: return {{{{0, one}, {2, -i}}}, 2};
    default: throw DomainError("invalid sector " + to_string(s));
  }
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double log_binomial(int n, int r) {
  return log_factorial(n) - log_factorial(r) - log_factorial(n - r);
}

Complex i_power(int q) {
  switch (q % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

struct Term {
  int index;  // M + J
  double log_magnitude;
  Complex phase;
};

}  // namespace

SpinState build_state(const HsSolution& solution, const SymmetricFunctions& S,
                      const StateOptions& options) {
  const SectorLabel& s = solution.sector;
  const int J = s.J;
  const int k = s.k;
  if (static_cast<int>(S.S.size()) != k + 1) {
    throw DomainError("symmetric functions do not match sector " + to_string(s));
  }
  const Vacuum vacuum = vacuum_of(s);
  const double log2 = std::log(2.0);

  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>((k + 1) * (k + 2)) * vacuum.size / 2);
  for (int q = 0; q <= k; ++q) {
    if (S.S[q] == 0.0) continue;
    const double log_sq = std::log(std::abs(S.S[q])) + q * log2;
    const Complex sq_phase = i_power(q) * (S.S[q] < 0 ? -1.0 : 1.0);
    for (int rho = 0; rho <= k - q; ++rho) {
      const double log_weight = log_binomial(k - q, rho) + log_sq;
      const Complex weight_phase = (rho % 2 == 0 ? 1.0 : -1.0) * sq_phase;
      for (int c = 0; c < vacuum.size; ++c) {
        const int r = 2 * q + 4 * rho + vacuum.parts[c].shift;
        const int p = 2 * J - r;
        // a^p b^r |0> = sqrt(p! r!) |J, M = J - r>
        terms.push_back({2 * J - r, log_weight + 0.5 * (log_factorial(p) + log_factorial(r)),
                         weight_phase * vacuum.parts[c].phase});
      }
    }
  }

  double top = -std::numeric_limits<double>::infinity();
  for (const Term& t : terms) top = std::max(top, t.log_magnitude);

  SpinState state{J, s, solution.zeta, std::vector<Complex>(2 * J + 1)};
  for (const Term& t : terms) {
    state.amplitudes[t.index] += std::exp(t.log_magnitude - top) * t.phase;
  }

  double norm2 = 0.0;
  for (const Complex& a : state.amplitudes) norm2 += std::norm(a);
  const double norm = std::sqrt(norm2);
  if (!(norm > 0.0) || -std::log(norm) > options.cancellation_budget) {
    throw NumericalError("state sum for sector " + to_string(s) + " zeta=" +
                         std::to_string(solution.zeta) +
                         " cancelled beyond double precision; raise --precision-bits");
  }

  // Phase reference: largest |M| populated, positive M first.
  int reference = -1;
  for (int m = J; m >= 0 && reference < 0; --m) {
    if (state.amplitudes[m + J] != Complex(0)) reference = m + J;
    else if (state.amplitudes[-m + J] != Complex(0)) reference = -m + J;
  }
  const Complex ref = state.amplitudes[reference];
  const Complex rotation = std::conj(ref) / (std::abs(ref) * norm);
  for (Complex& a : state.amplitudes) a *= rotation;
  state.amplitudes[reference] = {std::abs(state.amplitudes[reference]), 0.0};
  return state;
}

double residual_norm(const SpinState& state, double energy, double chi) {
  const auto h_psi = apply_hamiltonian(AngularMomentum::integer(state.J), state.amplitudes);
  const double e = chi == 0.0 ? 0.0 : energy / chi;
  double sum = 0.0;
  for (std::size_t i = 0; i < h_psi.size(); ++i) {
    sum += std::norm(chi * h_psi[i] - chi * e * state.amplitudes[i]);
  }
  return std::sqrt(sum);
}

std::complex<double> overlap(const SpinState& a, const SpinState& b) {
  if (a.J != b.J || a.amplitudes.size() != b.amplitudes.size()) {
    throw DomainError("overlap between states of different J");
  }
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) sum += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return sum;
}

GramReport gram_check(std::span<const SpinState> states, std::span<const double> energies_over_chi,
                      double near_degenerate_window) {
  if (states.size() != energies_over_chi.size()) throw DomainError("gram_check: size mismatch");
  GramReport report;
  if (states.empty()) return report;

  const int J = states.front().J;
  std::vector<EigenPair> dense;  // built lazily, only when a near-degenerate pair shows up

  auto as_vector = [](const SpinState& s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.amplitudes.size()));
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i) v[static_cast<Eigen::Index>(i)] = s.amplitudes[i];
    return v;
  };

  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = a; b < states.size(); ++b) {
      Complex value = overlap(states[a], states[b]);
      if (a != b && std::abs(energies_over_chi[a] - energies_over_chi[b]) < near_degenerate_window) {
        ++report.near_degenerate_pairs;
        if (dense.empty()) dense = dense_eigenpairs(build_hamiltonian(J));
        // Two dense eigenvectors closest to the pair's mean energy.
        const double centre = 0.5 * (energies_over_chi[a] + energies_over_chi[b]);
        std::vector<std::size_t> idx(dense.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::partial_sort(idx.begin(), idx.begin() + 2, idx.end(), [&](std::size_t x, std::size_t y) {
          return std::abs(dense[x].value - centre) < std::abs(dense[y].value - centre);
        });
        Eigen::MatrixXcd basis(dense[idx[0]].vector.size(), 2);
        basis.col(0) = dense[idx[0]].vector;
        basis.col(1) = dense[idx[1]].vector;
        Eigen::VectorXcd pa = basis * (basis.adjoint() * as_vector(states[a]));
        Eigen::VectorXcd pb = basis * (basis.adjoint() * as_vector(states[b]));
        const double na = pa.norm();
        const double nb = pb.norm();
        value = (na > 0 && nb > 0) ? pa.dot(pb) / (na * nb) : Complex(1.0);
      }
      const Complex expected = (a == b) ? Complex(1.0) : Complex(0.0);
      report.max_deviation = std::max(report.max_deviation, std::abs(value - expected));
    }
  }
  return report;
}

}  // namespace tact
