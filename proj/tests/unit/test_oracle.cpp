#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <vector>

#include "tact/oracle.hpp"

using namespace tact;
using cd = std::complex<double>;

namespace {

void check_values(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

}  // namespace

TEST_CASE("J=0 and J=1") {
  const auto h0 = build_hamiltonian(0);
  REQUIRE(h0.dimension() == 1);
  CHECK(h0.matrix(0, 0) == cd(0, 0));
  const auto p0 = dense_eigenpairs(h0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].value == 0.0);
  CHECK(std::abs(p0[0].vector[0]) == doctest::Approx(1.0));

  const auto h1 = build_hamiltonian(1);
  // index 2 is M = +1, index 0 is M = -1
  CHECK(std::abs(h1.matrix(2, 0) - cd(0, -1)) < 1e-15);
  CHECK(std::abs(h1.matrix(0, 2) - cd(0, 1)) < 1e-15);
  check_values(dense_spectrum(h1), {-1, 0, 1}, 1e-14);

  for (const auto& p : dense_eigenpairs(h1)) {
    if (std::abs(p.value) < 1e-12) CHECK(std::abs(p.vector[1]) == doctest::Approx(1.0));
  }
}

TEST_CASE("J=2 and J=3 spectra") {
  const double r = 2 * std::sqrt(3.0);
  check_values(dense_spectrum(build_hamiltonian(2)), {-r, -3, 0, 3, r}, 1e-13);
  check_values(dense_spectrum(build_hamiltonian(3)),
               {-7.89898, -7.74597, -1.89898, 0, 1.89898, 7.74597, 7.89898}, 5e-6);
}

TEST_CASE("J=12 spectrum contains the doubled extreme levels") {
  const auto v = dense_spectrum(build_hamiltonian(12));
  REQUIRE(v.size() == 25);
  CHECK(v[0] == doctest::Approx(-139.076).epsilon(1e-5));
  CHECK(v[1] == doctest::Approx(-139.076).epsilon(1e-5));
  CHECK(v[2] == doctest::Approx(-106.758).epsilon(1e-5));
  CHECK(v[3] == doctest::Approx(-106.758).epsilon(1e-5));
  CHECK(std::abs(v[12]) < 1e-10);
}

TEST_CASE("Hermitian, traceless, |dM| = 2 only, purely imaginary") {
  for (int twice = 0; twice <= 400; twice += 7) {
    const auto h = build_hamiltonian(AngularMomentum{twice});
    const auto& m = h.matrix;
    CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(m.trace()) == 0.0);
    for (int i = 0; i < h.dimension(); ++i) {
      for (int j = 0; j < h.dimension(); ++j) {
        if (std::abs(i - j) != 2) REQUIRE(m(i, j) == cd(0, 0));
        else REQUIRE(m(i, j).real() == 0.0);
      }
    }
  }
}

TEST_CASE("spectrum is symmetric about zero") {
  for (int J = 0; J <= 40; ++J) {
    const auto v = dense_spectrum(build_hamiltonian(J));
    const double d = v.back() - v.front();
    for (std::size_t i = 0; i < v.size(); ++i) REQUIRE(std::abs(v[i] + v[v.size() - 1 - i]) <= 1e-10 * std::max(d, 1.0));
  }
}

TEST_CASE("half-integer J is doubly degenerate") {
  for (int twice = 1; twice <= 21; twice += 2) {
    const auto v = dense_spectrum(build_hamiltonian(AngularMomentum{twice}));
    const double d = v.back() - v.front();
    REQUIRE(v.size() % 2 == 0);
    for (std::size_t i = 0; i < v.size(); i += 2) CHECK(std::abs(v[i + 1] - v[i]) <= 1e-9 * d);
  }
}

TEST_CASE("real symmetric form has the same spectrum") {
  for (int twice : {4, 9, 20, 31}) {
    const AngularMomentum j{twice};
    const Eigen::MatrixXd a = real_symmetric_form(j);
    CHECK((a - a.transpose()).cwiseAbs().maxCoeff() == 0.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    const auto ref = dense_spectrum(build_hamiltonian(j));
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(es.eigenvalues()[i] == doctest::Approx(ref[i]).scale(1.0));
  }
}

TEST_CASE("matrix-free product equals the dense product") {
  const AngularMomentum j{14};
  const auto h = build_hamiltonian(j);
  std::vector<cd> psi(j.dimension());
  for (int i = 0; i < j.dimension(); ++i) psi[i] = cd(std::sin(i + 1.0), std::cos(2.0 * i));
  const auto out = apply_hamiltonian(j, psi);
  Eigen::VectorXcd v(j.dimension());
  for (int i = 0; i < j.dimension(); ++i) v[i] = psi[i];
  const Eigen::VectorXcd ref = h.matrix * v;
  for (int i = 0; i < j.dimension(); ++i) CHECK(std::abs(out[i] - ref[i]) < 1e-12);
}

TEST_CASE("raising coefficient") {
  CHECK(raising_coefficient(2, 0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(raising_coefficient(2, 2) == 0.0);
  CHECK(raising_coefficient(1, -1) == doctest::Approx(1.0));
}
