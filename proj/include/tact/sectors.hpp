#pragma once

#include <compare>
#include <string>
#include <vector>

namespace tact {

/// Total angular momentum stored as 2J so half-integers are exact.
struct AngularMomentum {
  int twice_j = 0;

  static AngularMomentum integer(int j);
  /// Accepts j = n/2 for integer n >= 0; anything else is a DomainError.
  static AngularMomentum from_real(double j);

  bool is_integer() const { return twice_j % 2 == 0; }
  int as_integer() const;  // throws DomainError for half-integers
  double value() const { return 0.5 * twice_j; }
  int dimension() const { return twice_j + 1; }
};

/// Quantum numbers of one Bethe sector, J = 2k + n1 + n2 + nu.
struct SectorLabel {
  int J = 0;
  int k = 0;
  int n1 = 0;
  int n2 = 0;
  int nu = 0;

  /// 1 + 2 delta_{nu,1}
  int seniority_factor() const { return nu == 1 ? 3 : 1; }
  /// n1 - n2
  int pair_imbalance() const { return n1 - n2; }

  friend bool operator==(const SectorLabel&, const SectorLabel&) = default;
  friend auto operator<=>(const SectorLabel&, const SectorLabel&) = default;
};

/// Validates the quantum numbers and fills in J. Throws DomainError.
SectorLabel make_sector(int k, int n1, int n2, int nu);

/// "{k;n1,n2,nu}"
std::string to_string(const SectorLabel& s);

struct SectorEntry {
  SectorLabel label;
  int expected_count = 0;
};

struct SectorCatalog {
  int J = 0;
  std::vector<SectorEntry> sectors;
};

/// The four (n1, n2, nu) families of an integer J with their solution counts,
/// in canonical order: descending k, then lexicographic (n1, n2, nu).
/// Families that would need k < 0 are dropped.
SectorCatalog enumerate_sectors(int J);
SectorCatalog enumerate_sectors(AngularMomentum J);

/// Sum of expected_count over the catalog.
long solution_count_total(int J);

}  // namespace tact
