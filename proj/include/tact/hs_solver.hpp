#pragma once

#include <vector>

#include "tact/precision.hpp"
#include "tact/sectors.hpp"

namespace tact {

/// Three-term recurrence of one sector written as a (k+1)x(k+1) matrix F:
///   (F b)_j = diag[j] b_j + sub[j] b_{j-1} + sup[j] b_{j+1}.
/// sub[0] and sup[k] are zero.
struct TridiagonalSystem {
  SectorLabel sector;
  std::vector<double> diag;
  std::vector<double> sub;
  std::vector<double> sup;

  int dim() const { return static_cast<int>(diag.size()); }
};

/// One Heine-Stieltjes solution of a sector. b holds the polynomial
/// coefficients in ascending powers with b[k] == 1.
struct HsSolution {
  SectorLabel sector;
  int zeta = 1;
  double g0 = 0.0;
  std::vector<double> b;
  double energy_over_chi = 0.0;
  int precision_bits = 53;  // working precision actually used
  /// b at the working precision; empty when the solve ran in double.
  std::vector<WideReal> b_wide;
};

struct SolverOptions {
  /// Working precision of the eigen-solve in bits. 53 runs in double, anything
  /// larger runs in MPFR. 0 picks auto_precision_bits(k) per sector.
  int precision_bits = 0;
  /// Re-solve at higher precision when b[0] would underflow double.
  bool extend_on_underflow = true;
};

struct VanVleck {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Bits needed so that the zeros of the degree-k polynomial stay resolvable
/// from its monomial coefficients; the conditioning degrades geometrically in k.
int auto_precision_bits(int k);

TridiagonalSystem build_tridiagonal(const SectorLabel& sector);

/// Throws InvariantViolation if sub[j] * sup[j-1] <= 0 anywhere (the
/// diagonal similarity to a symmetric matrix needs both factors of one sign).
void check_symmetrizable(const TridiagonalSystem& system);

/// All k+1 solutions of the sector, sorted by energy ascending, zeta = 1..k+1.
std::vector<HsSolution> solve_sector(const SectorLabel& sector, const SolverOptions& options = {});

/// Same, for an explicitly supplied system (used for fault injection).
std::vector<HsSolution> solve_system(const TridiagonalSystem& system,
                                     const SolverOptions& options = {});

/// V(u) = k (c + n1 + n2 + k) u + g0 with c = (1 + 2 delta_{nu,1}) / 2.
VanVleck van_vleck(const SectorLabel& sector, double g0);

/// E/chi = 2 (1 + 2 delta_{nu,1}) (-b1/b0 + (n1 - n2)/2); the k = 0 limit is
/// (1 + 2 delta_{nu,1}) (n1 - n2).
double energy_from_coefficients(const SectorLabel& sector, const std::vector<double>& b);

}  // namespace tact
