#include "tact/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

#include "tact/errors.hpp"

namespace tact {

double raising_coefficient(int twice_j, int twice_m) {
  // J(J+1) - M(M+1) = (J - M)(J + M + 1)
  const double a = 0.5 * (twice_j - twice_m);
  const double b = 0.5 * (twice_j + twice_m + 2);
  const double product = a * b;
  return product > 0.0 ? std::sqrt(product) : 0.0;
}

namespace {

// <M+2|H/chi|M> = c+(M) c+(M+1) / (2i)
std::complex<double> two_step_element(int twice_j, int twice_m) {
  const double magnitude =
      raising_coefficient(twice_j, twice_m) * raising_coefficient(twice_j, twice_m + 2);
  return {0.0, -0.5 * magnitude};
}

}  // namespace

DenseHamiltonian build_hamiltonian(AngularMomentum j) {
  if (j.twice_j < 0) throw DomainError("J must be non-negative");
  const int dim = j.dimension();
  DenseHamiltonian h{j, Eigen::MatrixXcd::Zero(dim, dim)};
  for (int i = 0; i + 2 < dim; ++i) {
    const int twice_m = -j.twice_j + 2 * i;
    const auto element = two_step_element(j.twice_j, twice_m);
    h.matrix(i + 2, i) = element;
    h.matrix(i, i + 2) = std::conj(element);
  }
  return h;
}

DenseHamiltonian build_hamiltonian(int J) { return build_hamiltonian(AngularMomentum::integer(J)); }

std::vector<double> dense_spectrum(const DenseHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("dense Hermitian eigen-solve failed");
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

std::vector<EigenPair> dense_eigenpairs(const DenseHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw NumericalError("dense Hermitian eigen-solve failed");
  std::vector<EigenPair> out;
  out.reserve(h.dimension());
  for (int i = 0; i < h.dimension(); ++i) {
    out.push_back({solver.eigenvalues()[i], solver.eigenvectors().col(i)});
  }
  return out;
}

Eigen::MatrixXd real_symmetric_form(AngularMomentum j) {
  const int dim = j.dimension();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i + 2 < dim; ++i) {
    const int twice_m = -j.twice_j + 2 * i;
    const double value = 0.5 * raising_coefficient(j.twice_j, twice_m) *
                         raising_coefficient(j.twice_j, twice_m + 2);
    a(i + 2, i) = value;
    a(i, i + 2) = value;
  }
  return a;
}

std::vector<std::complex<double>> apply_hamiltonian(AngularMomentum j,
                                                    std::span<const std::complex<double>> psi) {
  const int dim = j.dimension();
  if (static_cast<int>(psi.size()) != dim) throw DomainError("state dimension does not match 2J+1");
  std::vector<std::complex<double>> out(dim);
  for (int i = 0; i + 2 < dim; ++i) {
    const auto element = two_step_element(j.twice_j, -j.twice_j + 2 * i);
    out[i + 2] += element * psi[i];
    out[i] += std::conj(element) * psi[i + 2];
  }
  return out;
}

}  // namespace tact
