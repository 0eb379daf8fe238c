#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "permgrid/bijections.hpp"

using namespace permgrid;

TEST_CASE("lambda maps the worked 14-point avoider and keeps its articulation point") {
  const Permutation p = parse_permutation("1,5,2,4,3,6,14,8,7,9,11,10,13,12");
  const Permutation q = parse_permutation("1,4,2,5,3,6,8,12,7,9,13,10,11,14");
  CHECK(lambda(p) == q);
  CHECK(lambda_inverse(q) == p);
}

TEST_CASE("lambda on the articulation-free inputs") {
  // The decreasing permutation is the only 231-avoider without an
  // articulation point; its image must be the only such 321-avoider.
  for (int n = 1; n <= 7; ++n) {
    CHECK(lambda(Permutation::decreasing(n)) == Permutation::identity(n));
    CHECK(lambda_inverse(Permutation::identity(n)) == Permutation::decreasing(n));
  }
}

TEST_CASE("lambda path surgery on tiny words") {
  CHECK(lambda_path(DyckPath("UURR")) == DyckPath("URUR"));
  CHECK(lambda_path(DyckPath("URUR")) == DyckPath("UURR"));
  CHECK(lambda_path_inverse(DyckPath("UURR")) == DyckPath("URUR"));
}

TEST_CASE("lambda is a bijection onto the 321-avoiders for n up to 9") {
  const auto cat = testutil::catalan_upto(9);
  for (int n = 0; n <= 9; ++n) {
    const auto report = verify_bijection("lambda", n);
    CHECK(report.ok());
    CHECK(report.failures.empty());
    CHECK(report.image_size == cat[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("theta on members without right points is lambda alone") {
  for (const auto& p : enumerate_class(ClassSpec::parse("231"), 5)) {
    const GriddedPermutation g{p, 5};
    const GriddedPermutation out = theta(g);
    CHECK(out.split == 5);
    CHECK(out.perm == lambda(p));
  }
}

TEST_CASE("psi on members without right points is lambda alone") {
  for (const auto& p : enumerate_class(ClassSpec::parse("231"), 5)) {
    const GriddedPermutation g{p, 5};
    const GriddedPermutation out = psi(g);
    CHECK(out.split == 5);
    CHECK(out.perm == lambda(p));
  }
}

TEST_CASE("phi on members without right points is the identity") {
  for (const auto& p : enumerate_class(ClassSpec::parse("312"), 5)) {
    const GriddedPermutation g{p, 5};
    CHECK(phi(g) == g);
    CHECK(phi_inverse(g) == g);
  }
}

TEST_CASE("theta, psi and phi pass their exhaustive sweeps up to n=7") {
  for (const std::string name : {"theta", "psi", "phi"}) {
    for (int n = 0; n <= 7; ++n) {
      const auto report = verify_bijection(name, n);
      INFO(report_to_text(report));
      CHECK(report.ok());
    }
  }
}

TEST_CASE("row partners are equinumerous through the maps") {
  const std::vector<long> b = {1, 1, 2, 6, 23, 98, 434, 1949};
  for (int n = 0; n <= 7; ++n) {
    CHECK(count_by_bruteforce(JuxtSpec::parse("231|12"), n) ==
          count_by_bruteforce(JuxtSpec::parse("321|12"), n));
    const auto bn = count_by_bruteforce(JuxtSpec::parse("231|21"), n);
    CHECK(bn == count_by_bruteforce(JuxtSpec::parse("321|21"), n));
    CHECK(bn == static_cast<std::uint64_t>(b[static_cast<std::size_t>(n)]));
    CHECK(count_by_bruteforce(JuxtSpec::parse("312|21"), n) ==
          count_by_bruteforce(JuxtSpec::parse("312|12"), n));
  }
}

TEST_CASE("a single-excursion decorated member maps to a verified image") {
  // Left side 231 is a single block; its one right point keeps phi's rotation
  // trivial while the in-block reversal still acts.
  const GriddedPermutation in = canonical_gridding(JuxtSpec::classC(), parse_permutation("2413"));
  REQUIRE(in.split == 3);
  const GriddedPermutation out = phi(in);
  CHECK(is_member(JuxtSpec::parse("312|12"), out.perm));
  CHECK(phi_inverse(out) == in);
}

TEST_CASE("maps reject non-members and non-canonical griddings") {
  CHECK_THROWS(theta(GriddedPermutation{parse_permutation("2314"), 4}));
  // 12 has canonical split 2 in Av(231|12); split 1 is valid but not canonical.
  CHECK_THROWS_AS(theta(GriddedPermutation{parse_permutation("12"), 1}), std::invalid_argument);
}

TEST_CASE("reports serialize") {
  const auto report = verify_bijection("theta", 4);
  const std::string json = report_to_json(report);
  CHECK(json.find("\"name\": \"theta\"") != std::string::npos);
  CHECK(json.find("\"ok\": true") != std::string::npos);
  CHECK(report_to_text(report).find("bijective") != std::string::npos);
  CHECK_THROWS_AS(verify_bijection("sigma", 3), std::invalid_argument);
}
