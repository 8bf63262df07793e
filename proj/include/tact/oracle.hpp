#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

#include "tact/sectors.hpp"

namespace tact {

/// Dense matrix of H/chi = (J+^2 - J-^2)/(2i) in the |J,M> basis.
/// Row/column i corresponds to M = -J + i.
struct DenseHamiltonian {
  AngularMomentum j;
  Eigen::MatrixXcd matrix;

  int dimension() const { return static_cast<int>(matrix.rows()); }
};

struct EigenPair {
  double value = 0.0;
  Eigen::VectorXcd vector;
};

/// sqrt(J(J+1) - M(M+1)) with both arguments passed doubled.
double raising_coefficient(int twice_j, int twice_m);

DenseHamiltonian build_hamiltonian(AngularMomentum j);
DenseHamiltonian build_hamiltonian(int J);

/// Ascending eigenvalues (units of chi).
std::vector<double> dense_spectrum(const DenseHamiltonian& h);

/// Full decomposition, ascending eigenvalues, orthonormal vectors.
std::vector<EigenPair> dense_eigenpairs(const DenseHamiltonian& h);

/// Real symmetric matrix unitarily equivalent to H: the diagonal phases
/// i^{-(M+J)/2} on each |Delta M| = 2 chain turn the couplings real.
Eigen::MatrixXd real_symmetric_form(AngularMomentum j);

/// H/chi applied to a vector indexed by M = -J..J without forming the matrix.
std::vector<std::complex<double>> apply_hamiltonian(AngularMomentum j,
                                                    std::span<const std::complex<double>> psi);

}  // namespace tact
