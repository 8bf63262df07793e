#pragma once

#include <complex>
#include <span>
#include <vector>

#include "tact/hs_solver.hpp"
#include "tact/polynomials.hpp"
#include "tact/sectors.hpp"

namespace tact {

/// Normalized eigenstate in the |J,M> basis; amplitudes[i] belongs to M = -J + i.
struct SpinState {
  int J = 0;
  SectorLabel sector;
  int zeta = 1;
  std::vector<std::complex<double>> amplitudes;

  std::complex<double> amplitude(int M) const { return amplitudes.at(M + J); }
};

struct StateOptions {
  /// Largest tolerated spread, in natural-log units, between the biggest term
  /// and the final norm before the sum is considered to have lost all digits.
  double cancellation_budget = 18.42;  // ln(1e8)
};

/// Eigenstate of the sector built from the symmetric functions of its
/// rapidities. Each sector is a pairing vacuum times a polynomial in the
/// quartet creators; expanded in Jordan-Schwinger monomials a^p b^r it reads
///
///   sum_{q=0}^{k} sum_{rho=0}^{k-q} C(k-q, rho) (-1)^rho (2i)^q S_q
///       sum_{(s, phase) in vacuum} phase * sqrt(p! r!) |J, J - r>,
///   r = 2q + 4 rho + s,  p = 2J - r,
///
/// with k the sector's own quartet count. Vacuum components (s, phase):
///   {0,0,0}: (0,1)          {0,0,1}: (1,1)
///   {1,1,0}: (0,1),(4,1)    {1,1,1}: (1,1),(5,1)
///   {1,0,1}: (1,1),(3,i)    {1,0,0}: (0,1),(2,i)
///   {0,1,1}: (1,1),(3,-i)   {0,1,0}: (0,1),(2,-i)
///
/// The binomial uses the sector's k throughout: with the printed
/// (k_J - q)! / ((k_J - q - rho)! rho!) in the k-deficient branches the result is
/// not an eigenvector (residual O(1) from J = 4 on), with C(k - q, rho) it is
/// exact to rounding.
///
/// Factorials are accumulated in log space; the result is L2-normalized and
/// its phase fixed so the populated amplitude with largest |M| (positive M on a
/// tie) is real and positive. Throws NumericalError if cancellation in the sum
/// exceeds the budget.
SpinState build_state(const HsSolution& solution, const SymmetricFunctions& S,
                      const StateOptions& options = {});

/// ||H psi - E psi||_2 with H applied in units of chi and E = energy / chi.
double residual_norm(const SpinState& state, double energy, double chi);

/// <a|b>. Throws DomainError when the two states belong to different J.
std::complex<double> overlap(const SpinState& a, const SpinState& b);

struct GramReport {
  /// max |<a|b> - delta_ab| over all pairs after the near-degenerate treatment.
  double max_deviation = 0.0;
  /// Pairs whose energies fell within the near-degeneracy window.
  int near_degenerate_pairs = 0;
};

/// Gram-matrix check for a complete set of states of one J. Pairs closer in
/// energy than `near_degenerate_window` (absolute, units of chi) are compared
/// after projecting both states onto the oracle eigenspace spanned by the two
/// dense eigenvectors nearest their energies and re-normalizing there.
GramReport gram_check(std::span<const SpinState> states, std::span<const double> energies_over_chi,
                      double near_degenerate_window);

}  // namespace tact
