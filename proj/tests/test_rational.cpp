#include <doctest.h>

#include <random>

#include "permsum/errors.hpp"
#include "permsum/rational.hpp"

using permsum::Rational;

TEST_CASE("rational normalizes to lowest terms with positive denominator") {
  Rational r(6, -8);
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(Rational(0, -5).den() == 1);
  CHECK(Rational(0, -5) == Rational(0));
}

TEST_CASE("rational text form") {
  CHECK(Rational(-7, 12).to_string() == "-7/12");
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational(8, 4).to_string() == "2");
  CHECK(Rational::parse("-7/12") == Rational(-7, 12));
  CHECK(Rational::parse("+3") == Rational(3));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), permsum::InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), permsum::InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("x"), permsum::InvalidArgument);
  CHECK_THROWS_AS(Rational::parse(""), permsum::InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("3/"), permsum::InvalidArgument);
}

TEST_CASE("rational arithmetic agrees with cross-multiplication on random fractions") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-1000, 1000);
  std::uniform_int_distribution<long long> den(1, 1000);
  for (int i = 0; i < 500; ++i) {
    const long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x(a, b), y(c, d);
    CHECK(x + y == Rational(a * d + c * b, b * d));
    CHECK(x - y == Rational(a * d - c * b, b * d));
    CHECK((x < y) == (a * d < c * b));
    CHECK(-(-x) == x);
    CHECK(Rational::parse(x.to_string()) == x);
  }
}

TEST_CASE("rational stays exact beyond 64-bit denominators") {
  Rational total;
  for (long long k = 2; k <= 60; ++k) total += Rational(1, k * (k - 1));
  // Telescoping: sum 1/(k(k-1)) for k = 2..N is 1 - 1/N.
  CHECK(total == Rational(59, 60));
  Rational big;
  for (long long p : {101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151}) big += Rational(1, p);
  CHECK(big.den() > mpz_class("1000000000000000000000"));
  for (long long p : {101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151}) big -= Rational(1, p);
  CHECK(big.is_zero());
}

TEST_CASE("residue modulo a prime") {
  const std::uint64_t p = 1000003;
  CHECK(permsum::residue_mod(Rational(3), p) == 3);
  CHECK(permsum::residue_mod(Rational(-1), p) == p - 1);
  // 2 * inverse(2) == 1
  CHECK((2 * permsum::residue_mod(Rational(1, 2), p)) % p == 1);
  CHECK(permsum::residue_mod(Rational(1, static_cast<long long>(p)), p) == p);
}
