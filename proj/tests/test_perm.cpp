#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "permgrid/perm.hpp"

using namespace permgrid;

TEST_CASE("containment basics") {
  CHECK_FALSE(contains(parse_permutation("21"), parse_permutation("123")));
  CHECK(contains(parse_permutation("231"), parse_permutation("1342")));  // witness 3,4,2
  for (const auto& p : testutil::all_permutations(4)) {
    CHECK(contains(p, p));
  }
  CHECK(contains(Permutation(), parse_permutation("312")));
}

TEST_CASE("containment agrees with the subset-scan oracle up to n=6") {
  std::vector<Permutation> patterns;
  for (int k = 1; k <= 4; ++k) {
    for (const auto& p : testutil::all_permutations(k)) patterns.push_back(p);
  }
  for (int n = 0; n <= 6; ++n) {
    for (const auto& perm : testutil::all_permutations(n)) {
      for (const auto& pat : patterns) {
        CHECK(contains(pat, perm) == testutil::contains_oracle(pat, perm));
      }
    }
  }
}

TEST_CASE("containment is reflexive and transitive on sampled triples") {
  // All chains sigma <= tau <= rho with |sigma|<=2, |tau|<=3, |rho|<=5.
  for (int a = 1; a <= 2; ++a) {
    for (const auto& s : testutil::all_permutations(a)) {
      for (int b = a; b <= 3; ++b) {
        for (const auto& t : testutil::all_permutations(b)) {
          if (!contains(s, t)) continue;
          for (int c = b; c <= 5; ++c) {
            for (const auto& r : testutil::all_permutations(c)) {
              if (contains(t, r)) CHECK(contains(s, r));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("avoids_all on stated avoiders") {
  CHECK(avoids_all(Basis::parse("231"), parse_permutation("821736459")));
  CHECK(avoids_all(Basis::parse("321"), parse_permutation("261738459")));
  CHECK(avoids_all(Basis(), parse_permutation("4321")));
}

TEST_CASE("basis construction rejects non-antichains") {
  CHECK_THROWS_AS(Basis::parse("21,321"), std::invalid_argument);
  CHECK_THROWS_AS(Basis::parse("12,12"), std::invalid_argument);
  CHECK_NOTHROW(Basis::parse("2314,2413,3412"));
}

TEST_CASE("enumerate_class matches the filter oracle and is lex sorted") {
  const ClassSpec av231 = ClassSpec::parse("231");
  for (int n = 0; n <= 6; ++n) {
    auto got = enumerate_class(av231, n);
    std::vector<Permutation> expect;
    for (const auto& p : testutil::all_permutations(n)) {
      if (!testutil::contains_oracle(parse_permutation("231"), p)) expect.push_back(p);
    }
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
  }
}

TEST_CASE("enumerate_class counts") {
  auto cat = testutil::catalan_upto(9);
  CHECK(enumerate_class(ClassSpec::parse("231"), 4).size() == cat[4]);
  CHECK(enumerate_class(ClassSpec::parse("4312,3142"), 5).size() == 88);
  const auto only = enumerate_class(ClassSpec::parse("21"), 3);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == Permutation::identity(3));
}

TEST_CASE("every length-3 pattern class is Catalan-counted up to n=9") {
  auto cat = testutil::catalan_upto(9);
  for (const auto& pat : testutil::all_permutations(3)) {
    const ClassSpec spec{Basis({pat})};
    for (int n = 0; n <= 9; ++n) {
      CHECK(enumerate_class(spec, n).size() == cat[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("adding a basis element never enlarges the class") {
  const ClassSpec larger = ClassSpec::parse("231");
  const ClassSpec smaller = ClassSpec::parse("231,4213");
  for (int n = 0; n <= 7; ++n) {
    const auto big = enumerate_class(larger, n);
    const auto small = enumerate_class(smaller, n);
    CHECK(small.size() <= big.size());
    CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
  }
}

TEST_CASE("exhaustion cap fails loudly") {
  CHECK_THROWS_AS(enumerate_class(ClassSpec::parse("21"), 11), ExhaustionBoundError);
  CHECK_NOTHROW(enumerate_class(ClassSpec::parse("21"), 11, 12));
}

TEST_CASE("symmetry basics") {
  CHECK(apply(Symmetry::Complement, parse_permutation("231")) == parse_permutation("213"));
  CHECK(apply(Symmetry::Reverse, parse_permutation("1243")) == parse_permutation("3421"));
  CHECK(apply(Symmetry::Inverse, parse_permutation("231")) == parse_permutation("312"));
}

TEST_CASE("reverse, complement, inverse are involutions") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& p : testutil::all_permutations(n)) {
      for (auto op : {Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse}) {
        CHECK(apply(op, apply(op, p)) == p);
      }
    }
  }
}

TEST_CASE("symmetries are bijections on each length up to 7") {
  for (int n = 0; n <= 7; ++n) {
    const auto all = testutil::all_permutations(n);
    for (auto op : {Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse,
                    Symmetry::ReverseComplement, Symmetry::ReverseInverse,
                    Symmetry::ComplementInverse, Symmetry::ReverseComplementInverse}) {
      std::set<Permutation> image;
      for (const auto& p : all) image.insert(apply(op, p));
      CHECK(image.size() == all.size());
    }
  }
}

TEST_CASE("permutation text round-trips") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& p : testutil::all_permutations(n)) {
      CHECK(parse_permutation(to_string(p)) == p);
    }
  }
  // Comma format kicks in at n >= 10.
  std::vector<int> big{10, 2, 1, 3, 4, 5, 6, 7, 8, 9};
  const Permutation p(big);
  CHECK(to_string(p) == "10,2,1,3,4,5,6,7,8,9");
  CHECK(parse_permutation(to_string(p)) == p);
  CHECK_THROWS_AS(parse_permutation("120"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("11"), std::invalid_argument);
}
