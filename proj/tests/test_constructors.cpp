#include <doctest.h>

#include "permsum/constructors.hpp"
#include "permsum/errors.hpp"
#include "permsum/functional.hpp"
#include "permsum/seeds.hpp"
#include "reference.hpp"

using namespace permsum;

namespace {

Permutation P(std::vector<int> e) { return Permutation(std::move(e)); }

}  // namespace

TEST_CASE("zero_dif_fixed_ends") {
  CHECK(zero_dif_fixed_ends(6) == P({1, 4, 2, 5, 3, 6}));
  CHECK(zero_dif_fixed_ends(7) == P({1, 3, 2, 4, 6, 5, 7}));
  CHECK(zero_dif_fixed_ends(9) == P({1, 4, 2, 5, 3, 6, 8, 7, 9}));
  CHECK(zero_dif_fixed_ends(11) == P({1, 3, 6, 4, 7, 5, 2, 8, 10, 9, 11}));
  for (int n = 6; n <= 200; ++n) {
    Permutation p = zero_dif_fixed_ends(n);
    REQUIRE(p.size() == n);
    CHECK(p.front() == 1);
    CHECK(p.back() == n);
    CHECK(evaluate(Functional::kDif, p).is_zero());
    if (n + 3 <= 200) CHECK(zero_dif_fixed_ends(n + 3) == link(p, P({1, 3, 2, 4})));
  }
  for (int n : {-1, 0, 1, 4, 5}) CHECK_THROWS_AS(zero_dif_fixed_ends(n), InvalidArgument);
}

TEST_CASE("zero_dif_end_shy") {
  CHECK(zero_dif_end_shy(8) == P({1, 2, 4, 8, 6, 5, 3, 7}));
  CHECK(zero_dif_end_shy(13) == P({1, 4, 2, 5, 3, 6, 7, 9, 13, 11, 10, 8, 12}));
  for (int n = 8; n <= 200; ++n) {
    Permutation p = zero_dif_end_shy(n);
    REQUIRE(p.size() == n);
    CHECK(p.front() == 1);
    CHECK(p.back() == n - 1);
    CHECK(evaluate(Functional::kDif, p).is_zero());
  }
  CHECK_THROWS_AS(zero_dif_end_shy(7), InvalidArgument);
}

TEST_CASE("zero_cycdif") {
  CHECK(zero_cycdif(8) == P({1, 2, 3, 4, 8, 7, 6, 5}));
  CHECK(zero_cycdif(9) == P({2, 1, 4, 5, 9, 3, 7, 6, 8}));
  CHECK(zero_cycdif(15) == P({1, 3, 2, 4, 6, 5, 7, 14, 10, 12, 13, 15, 11, 9, 8}));
  for (int n = 8; n <= 200; ++n) {
    Permutation p = zero_cycdif(n);
    REQUIRE(p.size() == n);
    CHECK(evaluate(Functional::kCycDif, p).is_zero());
  }
  CHECK_THROWS_AS(zero_cycdif(7), InvalidArgument);
}

TEST_CASE("odd zero_cycdif splits into a zero-dif head and a reversed, shifted zero-dif tail") {
  for (int n = 15; n <= 61; n += 2) {
    const int k = n / 2;
    Permutation rho = zero_cycdif(n);
    auto e = rho.entries();
    CHECK(evaluate_prefix(Functional::kDif, e.first(static_cast<std::size_t>(k))).is_zero());
    CHECK(evaluate_prefix(Functional::kDif, e.subspan(static_cast<std::size_t>(k))).is_zero());
    CHECK(e[static_cast<std::size_t>(k)] == 2 * k);
    CHECK(rho.back() == k + 1);
  }
}

TEST_CASE("prod_one") {
  CHECK(prod_one(6) == P({2, 1, 3, 4, 5, 6}));
  CHECK(prod_one(7) == P({2, 1, 3, 7, 4, 5, 6}));
  CHECK(prod_one(9) == P({6, 4, 1, 2, 9, 7, 5, 3, 8}));
  CHECK(prod_one(10) == P({6, 10, 4, 1, 2, 9, 7, 5, 3, 8}));
  CHECK(prod_one(11) == P({6, 10, 4, 1, 2, 11, 9, 7, 5, 3, 8}));
  // The insertion rule reproduces the published length-32 permutation.
  CHECK(prod_one(32) == seed("delta_32"));
  for (int n = 5; n >= 0; --n) CHECK_THROWS_AS(prod_one(n), InvalidArgument);
}

TEST_CASE("prod_one keeps prod = 1 after every single insertion") {
  const auto chain = prod_one_chain(200);
  REQUIRE(chain.size() == 200 - 8 + 1);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    CHECK(chain[i].size() == static_cast<int>(8 + i));
    CHECK(evaluate(Functional::kProd, chain[i]) == Rational(1));
  }
}

TEST_CASE("integer_witness admissibility") {
  CHECK(is_admissible_integer(3, 2));
  CHECK(is_admissible_integer(3, -2));
  CHECK_FALSE(is_admissible_integer(3, 0));
  CHECK_FALSE(is_admissible_integer(3, 1));
  CHECK_FALSE(is_admissible_integer(5, 0));
  CHECK_FALSE(is_admissible_integer(5, 3));
  CHECK(is_admissible_integer(5, -4));
  CHECK(is_admissible_integer(4, 0));
  CHECK_FALSE(is_admissible_integer(6, 4));
  CHECK(is_admissible_integer(6, 5));
  CHECK_FALSE(is_admissible_integer(6, 6));

  try {
    integer_witness(6, 4);
    FAIL("expected Inadmissible");
  } catch (const Inadmissible& e) {
    CHECK(e.kind() == Inadmissible::Kind::kExcluded);
    CHECK(std::string(e.what()).find("excluded: n-2") != std::string::npos);
  }
  try {
    integer_witness(6, 7);
    FAIL("expected Inadmissible");
  } catch (const Inadmissible& e) {
    CHECK(e.kind() == Inadmissible::Kind::kOutOfRange);
  }
  try {
    integer_witness(5, 3);
    FAIL("expected Inadmissible");
  } catch (const Inadmissible& e) {
    CHECK(e.kind() == Inadmissible::Kind::kExcluded);
  }
}

TEST_CASE("integer_witness examples") {
  for (int n = 2; n <= 30; ++n) {
    CHECK(integer_witness(n, -(n - 1)) == Permutation::identity(n));
    CHECK(integer_witness(n, n - 1) == reverse(Permutation::identity(n)));
  }
  CHECK(integer_witness(7, 0) == P({1, 3, 2, 4, 6, 5, 7}));
  // 4 is in V_5: confirm against the brute-force value set of S_5.
  const auto v5 = reference::all_values(Functional::kDif, 5);
  CHECK(std::binary_search(v5.begin(), v5.end(), Rational(4)));
  CHECK(evaluate(Functional::kDif, integer_witness(5, 4)) == Rational(4));
}

TEST_CASE("integer_witness hits every admissible value; nonpositive ones end in n") {
  for (int n = 2; n <= 200; ++n) {
    for (long long m = -(n - 1); m <= n - 1; ++m) {
      if (!is_admissible_integer(n, m)) {
        CHECK_THROWS_AS(integer_witness(n, m), Inadmissible);
        continue;
      }
      Permutation p = integer_witness(n, m);
      REQUIRE(p.size() == n);
      CHECK(evaluate(Functional::kDif, p) == Rational(m));
      if (m <= 0) CHECK(p.back() == n);
      if (m > 0) CHECK(p.front() == n);
    }
  }
}
