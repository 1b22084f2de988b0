#include <doctest.h>

#include "permsum/errors.hpp"
#include "permsum/seeds.hpp"

using namespace permsum;

TEST_CASE("every embedded seed passes its claim") {
  for (const auto& check : verify_claims(construction_seeds())) {
    INFO(check.name << ": " << check.detail);
    CHECK(check.ok);
  }
  for (const auto& check : verify_claims(cycsqdif_witnesses())) {
    INFO(check.name << ": " << check.detail);
    CHECK(check.ok);
  }
  CHECK(cycsqdif_witnesses().size() == 16);
  CHECK_NOTHROW(ensure_seeds_verified());
}

TEST_CASE("end-shy seeds have zero dif but nonzero cycdif") {
  // Their closing edge 1/(j - 1 - 1) is never cancelled, so only the
  // non-cyclic reading of the claim can hold.
  for (const auto& c : end_shy_seeds()) {
    Permutation p(c.entries);
    CHECK(p.front() == 1);
    CHECK(p.back() == p.size() - 1);
    CHECK(evaluate(Functional::kDif, p) == Rational(0));
    CHECK(evaluate(Functional::kCycDif, p) != Rational(0));
  }
}

TEST_CASE("a corrupted claim is reported by name") {
  SeedClaim bad = cycsqdif_witnesses().front();
  std::swap(bad.entries[1], bad.entries[2]);
  SeedCheck check = check_seed(bad);
  CHECK_FALSE(check.ok);
  CHECK(check.name == "pi_12");

  SeedClaim wrong_end = fixed_end_seeds().front();
  wrong_end.last = 5;
  CHECK_FALSE(check_seed(wrong_end).ok);

  SeedClaim not_a_perm = fixed_end_seeds().front();
  not_a_perm.entries.push_back(1);
  CHECK_FALSE(check_seed(not_a_perm).ok);
}

TEST_CASE("seed lookup") {
  CHECK(seed("delta_6") == Permutation({2, 1, 3, 4, 5, 6}));
  CHECK_THROWS_AS(seed("delta_5"), InvalidArgument);
}
