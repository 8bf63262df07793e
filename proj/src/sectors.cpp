#include "tact/sectors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "tact/errors.hpp"

namespace tact {

AngularMomentum AngularMomentum::integer(int j) {
  if (j < 0) throw DomainError("angular momentum must be non-negative, got " + std::to_string(j));
  return AngularMomentum{2 * j};
}

AngularMomentum AngularMomentum::from_real(double j) {
  const double twice = 2.0 * j;
  if (!std::isfinite(j) || j < 0.0 || twice != std::round(twice) || twice > 1e9) {
    std::ostringstream os;
    os << "angular momentum must be a non-negative integer or half-integer, got " << j;
    throw DomainError(os.str());
  }
  return AngularMomentum{static_cast<int>(twice)};
}

int AngularMomentum::as_integer() const {
  if (!is_integer()) {
    throw DomainError("half-integer J = " + std::to_string(twice_j) +
                      "/2 is not supported by the Bethe route");
  }
  return twice_j / 2;
}

SectorLabel make_sector(int k, int n1, int n2, int nu) {
  auto bit = [](int x) { return x == 0 || x == 1; };
  if (k < 0 || !bit(n1) || !bit(n2) || !bit(nu)) {
    std::ostringstream os;
    os << "invalid sector k=" << k << " n1=" << n1 << " n2=" << n2 << " nu=" << nu;
    throw DomainError(os.str());
  }
  return SectorLabel{2 * k + n1 + n2 + nu, k, n1, n2, nu};
}

std::string to_string(const SectorLabel& s) {
  std::ostringstream os;
  os << '{' << s.k << ';' << s.n1 << ',' << s.n2 << ',' << s.nu << '}';
  return os.str();
}

namespace {

struct Family {
  int n1, n2, nu;
  int extra;  // count = Int[J/2] + extra
};

// Even J = 2k: k+1 solutions for {0,0,0}, k for the three others.
constexpr std::array<Family, 4> kEvenFamilies{{
    {0, 0, 0, 1}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}}};
// Odd J = 2k+1: k+1 solutions for the single-excitation families, k for {1,1,1}.
constexpr std::array<Family, 4> kOddFamilies{{
    {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 0}}};

}  // namespace

SectorCatalog enumerate_sectors(int J) {
  if (J < 0) throw DomainError("J must be non-negative, got " + std::to_string(J));

  const int half = J / 2;
  const auto& families = (J % 2 == 0) ? kEvenFamilies : kOddFamilies;

  SectorCatalog catalog{J, {}};
  for (const Family& f : families) {
    const int rest = J - f.n1 - f.n2 - f.nu;
    if (rest < 0) continue;
    const SectorLabel label{J, rest / 2, f.n1, f.n2, f.nu};
    const int count = half + f.extra;
    // The tridiagonal problem of this sector has dimension k+1.
    if (count != label.k + 1) {
      throw InvariantViolation("sector count mismatch for " + to_string(label));
    }
    catalog.sectors.push_back({label, count});
  }

  std::stable_sort(catalog.sectors.begin(), catalog.sectors.end(),
                   [](const SectorEntry& a, const SectorEntry& b) {
                     if (a.label.k != b.label.k) return a.label.k > b.label.k;
                     return std::tie(a.label.n1, a.label.n2, a.label.nu) <
                            std::tie(b.label.n1, b.label.n2, b.label.nu);
                   });
  return catalog;
}

SectorCatalog enumerate_sectors(AngularMomentum J) { return enumerate_sectors(J.as_integer()); }

long solution_count_total(int J) {
  long total = 0;
  for (const auto& entry : enumerate_sectors(J).sectors) total += entry.expected_count;
  return total;
}

}  // namespace tact
