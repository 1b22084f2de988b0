#include <doctest.h>

#include "permsum/errors.hpp"
#include "permsum/search.hpp"
#include "reference.hpp"

using namespace permsum;

namespace {

std::vector<long long> theorem_integers(int n) {
  std::vector<long long> out;
  for (long long m = -(n - 1); m <= n - 1; ++m) {
    const long long a = m < 0 ? -m : m;
    bool in = n == 3 ? a == 2 : n == 5 ? (a == 1 || a == 2 || a == 4) : a != n - 2;
    if (in) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("nonnegative part of V_5") {
  const std::vector<Rational> listed = {
      Rational(1, 12), Rational(1, 6),  Rational(1, 4),   Rational(1, 3),  Rational(1, 2),
      Rational(7, 12), Rational(2, 3),  Rational(3, 4),   Rational(1),     Rational(7, 6),
      Rational(4, 3),  Rational(3, 2),  Rational(19, 12), Rational(7, 4),  Rational(11, 6),
      Rational(23, 12), Rational(2),    Rational(13, 6),  Rational(11, 4), Rational(4)};
  CHECK(enumerate_values(Functional::kDif, 5).nonnegative() == listed);
}

TEST_CASE("small value sets") {
  CHECK(enumerate_values(Functional::kDif, 2).values == std::vector<Rational>{Rational(-1), Rational(1)});
  CHECK(enumerate_values(Functional::kDif, 3).values ==
        std::vector<Rational>{Rational(-2), Rational(-1, 2), Rational(1, 2), Rational(2)});
  CHECK(enumerate_values(Functional::kDif, 6).integers() ==
        std::vector<long long>{-5, -3, -2, -1, 0, 1, 2, 3, 5});
}

TEST_CASE("parallel enumeration equals the serial brute force (n <= 7)") {
  for (Functional f : kAllFunctionals) {
    for (int n = min_length(f); n <= 7; ++n) {
      const auto expected = reference::all_values(f, n);
      for (bool sym : {true, false}) {
        for (bool bignum : {true, false}) {
          EnumerateOptions o;
          o.symmetry_reduction = sym;
          o.force_bignum = bignum;
          o.workers = sym ? 3 : 1;
          INFO(name(f) << " n=" << n << " sym=" << sym << " bignum=" << bignum);
          ValueSet vs = enumerate_values(f, n, o);
          CHECK(vs.values == expected);
          CHECK(vs.n == n);
          CHECK(vs.functional == f);
        }
      }
    }
  }
}

TEST_CASE("value sets of antisymmetric functionals are closed under negation") {
  for (Functional f : {Functional::kDif, Functional::kCycDif, Functional::kSqDif, Functional::kCycSqDif}) {
    ValueSet vs = enumerate_values(f, 8, EnumerateOptions{.workers = 4});
    for (const auto& v : vs.values) CHECK(vs.contains(-v));
  }
}

TEST_CASE("enumeration budget is an error, never a truncated set") {
  EnumerateOptions o;
  o.node_budget = 100;
  CHECK_THROWS_AS(enumerate_values(Functional::kDif, 9, o), BudgetExceeded);
  o.node_budget = 120;  // exactly |S_5| is enough
  o.symmetry_reduction = false;
  CHECK_NOTHROW(enumerate_values(Functional::kDif, 5, o));
  CHECK_THROWS_AS(enumerate_values(Functional::kDif, 1), InvalidArgument);
  CHECK_THROWS_AS(enumerate_values(Functional::kCycSum, 2), InvalidArgument);
}

TEST_CASE("integer values: exhaustive and constructive routes agree with the theorem") {
  for (int n = 2; n <= 9; ++n) {
    INFO("n=" << n);
    CHECK(integer_values_exhaustive(n) == theorem_integers(n));
    CHECK(integer_values_constructive(n) == theorem_integers(n));
  }
  CHECK(integer_values(3) == std::vector<long long>{-2, 2});
  CHECK(integer_values(7) == std::vector<long long>{-6, -4, -3, -2, -1, 0, 1, 2, 3, 4, 6});
  CHECK(integer_values(40) == theorem_integers(40));
}
