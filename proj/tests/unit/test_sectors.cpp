#include <doctest.h>

#include <set>
#include <tuple>

#include "tact/errors.hpp"
#include "tact/sectors.hpp"

using namespace tact;

namespace {

int count_of(const SectorCatalog& c, int k, int n1, int n2, int nu) {
  for (const auto& e : c.sectors) {
    if (e.label == make_sector(k, n1, n2, nu)) return e.expected_count;
  }
  return -1;
}

}  // namespace

TEST_CASE("J=0 has a single trivial sector") {
  const auto c = enumerate_sectors(0);
  REQUIRE(c.sectors.size() == 1);
  CHECK(c.sectors[0].label == make_sector(0, 0, 0, 0));
  CHECK(c.sectors[0].expected_count == 1);
  CHECK(solution_count_total(0) == 1);
}

TEST_CASE("J=2 catalog") {
  const auto c = enumerate_sectors(2);
  CHECK(c.sectors.size() == 4);
  CHECK(count_of(c, 0, 1, 0, 1) == 1);
  CHECK(count_of(c, 0, 1, 1, 0) == 1);
  CHECK(count_of(c, 0, 0, 1, 1) == 1);
  CHECK(count_of(c, 1, 0, 0, 0) == 2);
  CHECK(solution_count_total(2) == 5);
}

TEST_CASE("J=5 catalog") {
  const auto c = enumerate_sectors(5);
  CHECK(c.sectors.size() == 4);
  CHECK(count_of(c, 2, 0, 0, 1) == 3);
  CHECK(count_of(c, 2, 0, 1, 0) == 3);
  CHECK(count_of(c, 2, 1, 0, 0) == 3);
  CHECK(count_of(c, 1, 1, 1, 1) == 2);
  CHECK(solution_count_total(5) == 11);
}

TEST_CASE("J=1 drops the family that would need negative k") {
  const auto c = enumerate_sectors(1);
  CHECK(c.sectors.size() == 3);
  CHECK(count_of(c, 0, 1, 0, 0) == 1);
  CHECK(count_of(c, 0, 0, 1, 0) == 1);
  CHECK(count_of(c, 0, 0, 0, 1) == 1);
}

TEST_CASE("totals are 2J+1 for every J up to 1000") {
  CHECK(solution_count_total(4) == 9);
  CHECK(solution_count_total(12) == 25);
  CHECK(solution_count_total(1000) == 2001);
  for (int J = 0; J <= 1000; ++J) {
    REQUIRE(solution_count_total(J) == 2L * J + 1);
    for (const auto& e : enumerate_sectors(J).sectors) {
      const auto& s = e.label;
      REQUIRE(s.k >= 0);
      REQUIRE(s.J == J);
      REQUIRE(J == 2 * s.k + s.n1 + s.n2 + s.nu);
      REQUIRE(e.expected_count == s.k + 1);
    }
  }
}

TEST_CASE("family sets for even and odd J") {
  using Triple = std::tuple<int, int, int>;
  const std::set<Triple> even{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  const std::set<Triple> odd{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  for (int J = 3; J <= 40; ++J) {
    std::set<Triple> got;
    for (const auto& e : enumerate_sectors(J).sectors) got.insert({e.label.n1, e.label.n2, e.label.nu});
    CHECK(got == (J % 2 == 0 ? even : odd));
  }
}

TEST_CASE("canonical order is descending k then lexicographic") {
  const auto c = enumerate_sectors(12);
  REQUIRE(c.sectors.size() == 4);
  CHECK(c.sectors[0].label == make_sector(6, 0, 0, 0));
  CHECK(c.sectors[1].label == make_sector(5, 0, 1, 1));
  CHECK(c.sectors[2].label == make_sector(5, 1, 0, 1));
  CHECK(c.sectors[3].label == make_sector(5, 1, 1, 0));
}

TEST_CASE("labels and angular momentum") {
  CHECK(to_string(make_sector(2, 0, 1, 0)) == "{2;0,1,0}");
  CHECK(make_sector(2, 0, 1, 0).J == 5);
  CHECK_THROWS_AS(make_sector(-1, 0, 0, 0), DomainError);
  CHECK_THROWS_AS(make_sector(1, 2, 0, 0), DomainError);
  CHECK_THROWS_AS(enumerate_sectors(-1), DomainError);

  const auto half = AngularMomentum::from_real(2.5);
  CHECK(half.twice_j == 5);
  CHECK_FALSE(half.is_integer());
  CHECK(half.dimension() == 6);
  CHECK_THROWS_AS(half.as_integer(), DomainError);
  CHECK_THROWS_AS(AngularMomentum::from_real(0.3), DomainError);
  CHECK(AngularMomentum::integer(3).as_integer() == 3);
}
