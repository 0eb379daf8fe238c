#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "permgrid/juxt.hpp"

using namespace permgrid;

namespace {

// Split-by-split membership oracle straight from the definition.
bool member_oracle(const JuxtSpec& spec, const Permutation& p) {
  for (int s = 0; s <= p.size(); ++s) {
    std::vector<int> left(p.values().begin(), p.values().begin() + s);
    std::vector<int> right(p.values().begin() + s, p.values().end());
    bool ok = true;
    for (const auto& b : spec.left.basis.patterns()) {
      if (testutil::contains_oracle(b, Permutation::pattern_of(left))) ok = false;
    }
    for (const auto& b : spec.right.basis.patterns()) {
      if (testutil::contains_oracle(b, Permutation::pattern_of(right))) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("griddings of stated examples") {
  const JuxtSpec spec = JuxtSpec::parse("21|12");
  const auto g = griddings(spec, parse_permutation("1243"));
  REQUIRE(g.size() == 2);
  CHECK(g[0].split == 2);
  CHECK(g[1].split == 3);

  const auto e = griddings(JuxtSpec::classA(), Permutation());
  REQUIRE(e.size() == 1);
  CHECK(e[0].split == 0);

  // 321 = empty left part next to the decreasing word, so splits 0 and 1 work.
  const auto s321 = griddings(spec, parse_permutation("321"));
  REQUIRE(s321.size() == 2);
  CHECK(s321[0].split == 0);
  CHECK(s321[1].split == 1);
}

TEST_CASE("membership agrees with the definition oracle up to n=6") {
  const std::vector<JuxtSpec> specs = {JuxtSpec::classA(), JuxtSpec::classB(), JuxtSpec::classC(),
                                       JuxtSpec::parse("21|12")};
  for (const auto& spec : specs) {
    for (int n = 0; n <= 6; ++n) {
      std::set<Permutation> members_by_enum;
      for (const auto& p : enumerate_members(spec, n)) members_by_enum.insert(p);
      for (const auto& p : testutil::all_permutations(n)) {
        CHECK(is_member(spec, p) == member_oracle(spec, p));
        CHECK(is_member(spec, p) == (members_by_enum.count(p) > 0));
      }
    }
  }
}

TEST_CASE("canonical gridding") {
  CHECK(canonical_gridding(JuxtSpec::parse("21|12"), parse_permutation("1243")).split == 3);
  // A left-class member grids with everything on the left.
  for (const auto& p : enumerate_class(ClassSpec::parse("231"), 5)) {
    CHECK(canonical_gridding(JuxtSpec::classA(), p).split == 5);
  }
  CHECK_THROWS_AS(canonical_gridding(JuxtSpec::parse("21|21"), parse_permutation("321")),
                  NonMemberError);
}

TEST_CASE("brute-force counts match the stated sequence prefixes") {
  const std::vector<std::uint64_t> a = {1, 1, 2, 6, 21, 79};
  const std::vector<std::uint64_t> b = {1, 1, 2, 6, 23, 98, 434};
  const std::vector<std::uint64_t> c = {1, 1, 2, 6, 22, 88};
  for (std::size_t n = 0; n < a.size(); ++n) CHECK(count_by_bruteforce(JuxtSpec::classA(), static_cast<int>(n)) == a[n]);
  for (std::size_t n = 0; n < b.size(); ++n) CHECK(count_by_bruteforce(JuxtSpec::classB(), static_cast<int>(n)) == b[n]);
  for (std::size_t n = 0; n < c.size(); ++n) CHECK(count_by_bruteforce(JuxtSpec::classC(), static_cast<int>(n)) == c[n]);
}

TEST_CASE("finite basis identities hold up to n=6 and a wrong basis fails") {
  CHECK(verify_basis_identity(JuxtSpec::classA(), Basis::parse("2314,2413,3412"), 6));
  CHECK(verify_basis_identity(JuxtSpec::classB(),
                              Basis::parse("4321,32154,42153,52143,43152,53142"), 6));
  CHECK(verify_basis_identity(JuxtSpec::classC(), Basis::parse("4132,4231,31254,41253"), 6));
  CHECK_FALSE(verify_basis_identity(JuxtSpec::classA(), Basis::parse("2314,2413"), 6));
}

TEST_CASE("membership is downward closed up to n=6") {
  for (const auto& spec : {JuxtSpec::classA(), JuxtSpec::classB(), JuxtSpec::classC()}) {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& p : enumerate_members(spec, n)) {
        for (int drop = 1; drop <= n; ++drop) {
          std::vector<int> rest;
          for (int i = 1; i <= n; ++i) {
            if (i != drop) rest.push_back(p.at(i));
          }
          CHECK(is_member(spec, Permutation::pattern_of(rest)));
        }
      }
    }
  }
}

TEST_CASE("maximal split is unique and one step further breaks the left side") {
  for (const auto& spec : {JuxtSpec::classA(), JuxtSpec::classB(), JuxtSpec::classC()}) {
    for (int n = 0; n <= 8; ++n) {
      for (const auto& p : enumerate_members(spec, n)) {
        const auto g = canonical_gridding(spec, p);
        if (g.split < n) {
          std::vector<int> next(p.values().begin(), p.values().begin() + g.split + 1);
          CHECK_FALSE(avoids_all_values(spec.left.basis, next));
        }
      }
    }
  }
}

TEST_CASE("complement pairs one class onto its partner, length-preservingly") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"231|12", "213|21"}, {"321|12", "123|21"}, {"321|21", "123|12"},
      {"231|21", "213|12"}, {"312|21", "132|12"}, {"312|12", "132|21"}};
  for (const auto& [from, to] : pairs) {
    const JuxtSpec src = JuxtSpec::parse(from);
    const JuxtSpec dst = JuxtSpec::parse(to);
    for (int n = 0; n <= 7; ++n) {
      const auto members = enumerate_members(src, n);
      std::set<Permutation> image;
      for (const auto& p : members) {
        const Permutation q = apply(Symmetry::Complement, p);
        CHECK(is_member(dst, q));
        image.insert(q);
      }
      CHECK(image.size() == members.size());
      CHECK(image.size() == enumerate_members(dst, n).size());
    }
  }
}

TEST_CASE("gridded permutation text round-trips") {
  const GriddedPermutation g{parse_permutation("1243"), 3};
  CHECK(to_string(g) == "1243|3");
  CHECK(parse_gridded("1243|3") == g);
  CHECK_THROWS_AS(parse_gridded("1243"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gridded("1243|9"), std::invalid_argument);
}

TEST_CASE("count cap is enforced") {
  CHECK_THROWS_AS(count_by_bruteforce(JuxtSpec::classA(), 11), ExhaustionBoundError);
}
