#include "tact/polynomials.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "tact/errors.hpp"
#include "tact/precision.hpp"

namespace tact {

namespace {

using Complex = std::complex<long double>;

constexpr double kMaxImaginary = 1e-8;
constexpr double kBoundaryMargin = 1e-12;
constexpr int kMaxPolishSweeps = 200;
// Relative step at which a wide-precision root is final; well below what a
// double can hold.
constexpr double kWideStepTolerance = 1e-24;

std::vector<Complex> companion_roots(const std::vector<double>& b) {
  const int k = static_cast<int>(b.size()) - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k, k);
  for (int j = 0; j < k; ++j) companion(0, j) = -b[k - 1 - j] / b[k];
  for (int i = 1; i < k; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericalError("companion eigen-solve failed");
  std::vector<Complex> roots;
  roots.reserve(k);
  for (int i = 0; i < k; ++i) {
    const auto z = solver.eigenvalues()[i];
    roots.emplace_back(z.real(), z.imag());
  }
  return roots;
}

template <class Real>
struct Cx {
  Real re, im;
};

template <class Real>
Cx<Real> operator+(const Cx<Real>& a, const Cx<Real>& b) { return {a.re + b.re, a.im + b.im}; }
template <class Real>
Cx<Real> operator-(const Cx<Real>& a, const Cx<Real>& b) { return {a.re - b.re, a.im - b.im}; }
template <class Real>
Cx<Real> operator*(const Cx<Real>& a, const Cx<Real>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class Real>
Cx<Real> operator/(const Cx<Real>& a, const Cx<Real>& b) {
  const Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
template <class Real>
Real modulus(const Cx<Real>& a) {
  using std::sqrt;
  return sqrt(a.re * a.re + a.im * a.im);
}

// Aberth iteration: Newton with implicit deflation against the other roots.
template <class Real>
std::vector<Cx<Real>> polish(const std::vector<Real>& b, const std::vector<Complex>& start,
                             const Real& tolerance) {
  using std::isfinite;
  const int k = static_cast<int>(b.size()) - 1;
  std::vector<Cx<Real>> roots;
  roots.reserve(k);
  for (const Complex& z : start) roots.push_back({Real(z.real()), Real(z.imag())});
  const Real one(1), zero(0);
  std::vector<char> done(k, 0);
  int remaining = k;
  for (int sweep = 0; sweep < kMaxPolishSweeps && remaining > 0; ++sweep) {
    for (int l = 0; l < k; ++l) {
      if (done[l]) continue;
      const Cx<Real> z = roots[l];
      Cx<Real> p{b[k], zero};
      Cx<Real> dp{zero, zero};
      for (int j = k - 1; j >= 0; --j) {
        dp = dp * z + p;
        p = p * z + Cx<Real>{b[j], zero};
      }
      if (p.re == zero && p.im == zero) {
        done[l] = 1;
        --remaining;
        continue;
      }
      Cx<Real> repulsion{zero, zero};
      for (int j = 0; j < k; ++j) {
        if (j != l) repulsion = repulsion + Cx<Real>{one, zero} / (z - roots[j]);
      }
      const Cx<Real> ratio = p / dp;
      const Cx<Real> step = ratio / (Cx<Real>{one, zero} - ratio * repulsion);
      const Real size = modulus(step);
      if (!isfinite(size)) continue;
      roots[l] = roots[l] - step;
      const Real scale = modulus(roots[l]);
      if (size <= tolerance * (scale > Real(1e-6) ? scale : Real(1e-6))) {
        done[l] = 1;
        --remaining;
      }
    }
  }
  return roots;
}

std::vector<Complex> polished_roots(const HsSolution& solution) {
  const std::vector<Complex> start = companion_roots(solution.b);
  std::vector<Complex> out;
  out.reserve(start.size());
  if (solution.b_wide.empty()) {
    std::vector<long double> b(solution.b.begin(), solution.b.end());
    for (const auto& z : polish(b, start, 64 * std::numeric_limits<long double>::epsilon())) {
      out.emplace_back(z.re, z.im);
    }
    return out;
  }
  WidePrecisionScope scope(solution.precision_bits);
  const std::vector<WideReal> b(solution.b_wide.begin(), solution.b_wide.end());
  for (const auto& z : polish(b, start, WideReal(kWideStepTolerance))) {
    out.emplace_back(z.re.convert_to<long double>(), z.im.convert_to<long double>());
  }
  return out;
}

double origin_weight(const SectorLabel& s) { return 0.5 * s.seniority_factor(); }

}  // namespace

double BetheResidual::max_raw() const {
  double m = 0.0;
  for (double r : raw) m = std::max(m, std::abs(r));
  return m;
}

double BetheResidual::max_relative() const {
  double m = 0.0;
  for (double r : relative) m = std::max(m, std::abs(r));
  return m;
}

double evaluate_polynomial(std::span<const double> b, double u) {
  long double acc = 0;
  for (std::size_t j = b.size(); j-- > 0;) acc = acc * u + b[j];
  return static_cast<double>(acc);
}

ZeroSet find_zeros(const HsSolution& solution) {
  const auto& b = solution.b;
  const int k = static_cast<int>(b.size()) - 1;
  if (k < 0 || b[k] != 1.0) throw DomainError("find_zeros expects b normalized with b_k = 1");

  ZeroSet zs{solution.sector, solution.zeta, {}, {}};
  if (k == 0) return zs;

  const std::vector<Complex> roots = polished_roots(solution);

  auto where = [&]() {
    std::ostringstream os;
    os << " in sector " << to_string(solution.sector) << " zeta=" << solution.zeta;
    return os.str();
  };

  zs.zeros_u.reserve(k);
  for (const Complex& z : roots) {
    if (std::abs(z.imag()) > kMaxImaginary) {
      std::ostringstream os;
      os << "complex Heine-Stieltjes zero " << static_cast<double>(z.real()) << (z.imag() < 0 ? "" : "+")
         << static_cast<double>(z.imag()) << "i" << where();
      throw InvariantViolation(os.str());
    }
    zs.zeros_u.push_back(static_cast<double>(z.real()));
  }
  std::sort(zs.zeros_u.begin(), zs.zeros_u.end());

  for (int l = 0; l < k; ++l) {
    const double u = zs.zeros_u[l];
    const double a = std::abs(u);
    if (!(a > kBoundaryMargin && a < 1.0 - kBoundaryMargin)) {
      std::ostringstream os;
      os << "zero u=" << u << " outside (-1,0)U(0,1)" << where();
      throw InvariantViolation(os.str());
    }
    if (l > 0 && !(u > zs.zeros_u[l - 1])) {
      std::ostringstream os;
      os << "repeated zero u=" << u << where();
      throw InvariantViolation(os.str());
    }
  }

  zs.zeros_w.reserve(k);
  for (double u : zs.zeros_u) zs.zeros_w.push_back(1.0 / u);
  return zs;
}

BetheResidual bethe_residual(const ZeroSet& zeros) {
  const auto& s = zeros.sector;
  const auto& u = zeros.zeros_u;
  const std::size_t k = u.size();
  const long double left = s.n2 + 0.5L;   // charge at u = -1
  const long double right = s.n1 + 0.5L;  // charge at u = +1
  const long double centre = origin_weight(s);

  BetheResidual out;
  out.raw.reserve(k);
  out.relative.reserve(k);
  for (std::size_t l = 0; l < k; ++l) {
    const long double x = u[l];
    long double sum = 0;
    long double largest = 0;
    auto add = [&](long double term) {
      sum += term;
      largest = std::max(largest, std::abs(term));
    };
    add(right / (x - 1));
    add(left / (x + 1));
    add(centre / x);
    for (std::size_t j = 0; j < k; ++j) {
      if (j != l) add(2 / (x - static_cast<long double>(u[j])));
    }
    out.raw.push_back(static_cast<double>(sum));
    out.relative.push_back(static_cast<double>(largest > 0 ? sum / largest : sum));
  }
  return out;
}

SymmetricFunctions symmetric_functions(const HsSolution& solution) {
  const auto& b = solution.b;
  if (b.empty()) throw DomainError("empty coefficient vector");
  if (b[0] == 0.0) {
    throw DomainError("b0 == 0 in sector " + to_string(solution.sector) +
                      "; symmetric functions of 1/u are undefined");
  }
  SymmetricFunctions out;
  out.S.reserve(b.size());
  for (std::size_t q = 0; q < b.size(); ++q) {
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    out.S.push_back(q == 0 ? 1.0 : sign * b[q] / b[0]);
  }
  return out;
}

std::vector<double> elementary_symmetric(std::span<const double> values) {
  std::vector<long double> e(values.size() + 1, 0.0L);
  e[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t q = i + 1; q >= 1; --q) e[q] += e[q - 1] * values[i];
  }
  return {e.begin(), e.end()};
}

double energy_from_zeros(const ZeroSet& zeros, double chi) {
  long double sum = 0;
  for (double w : zeros.zeros_w) sum += w;
  const auto& s = zeros.sector;
  return static_cast<double>(2.0L * chi * s.seniority_factor() *
                             (sum + 0.5L * s.pair_imbalance()));
}

}  // namespace tact
