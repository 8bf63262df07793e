#pragma once

#include <span>
#include <vector>

#include "tact/hs_solver.hpp"
#include "tact/sectors.hpp"

namespace tact {

/// Zeros of one Heine-Stieltjes polynomial, ascending, with w = 1/u.
struct ZeroSet {
  SectorLabel sector;
  int zeta = 1;
  std::vector<double> zeros_u;
  std::vector<double> zeros_w;
};

/// S[q] = e_q(w_1..w_k), S[0] = 1.
struct SymmetricFunctions {
  std::vector<double> S;
};

/// Left-hand side of the Bethe equations in u = 1/w, one entry per zero.
/// `relative` divides each entry by its largest individual summand.
struct BetheResidual {
  std::vector<double> raw;
  std::vector<double> relative;

  double max_raw() const;
  double max_relative() const;
};

/// Horner evaluation of sum_j b_j u^j.
double evaluate_polynomial(std::span<const double> b, double u);

/// Roots of y(u) = sum_j b_j u^j: companion-matrix eigenvalues, then
/// simultaneous Newton (Aberth) polishing at the working precision of the
/// solve (long double when it ran in double).
/// Throws InvariantViolation when a root is complex (|Im| > 1e-8), repeated,
/// or not strictly inside (-1,0) U (0,1) with a 1e-12 margin.
ZeroSet find_zeros(const HsSolution& solution);

BetheResidual bethe_residual(const ZeroSet& zeros);

/// S[q] = (-1)^q b_q / b_0. Throws DomainError when b_0 == 0.
SymmetricFunctions symmetric_functions(const HsSolution& solution);

/// Elementary symmetric polynomials e_0..e_n of the given values.
std::vector<double> elementary_symmetric(std::span<const double> values);

/// E = 2 chi (1 + 2 delta_{nu,1}) (sum_l w_l + (n1 - n2)/2).
double energy_from_zeros(const ZeroSet& zeros, double chi);

}  // namespace tact
