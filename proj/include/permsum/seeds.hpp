#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permsum/functional.hpp"

namespace permsum {

// One embedded permutation and the property it is claimed to have.
struct SeedClaim {
  std::string name;
  std::vector<int> entries;
  Functional functional;
  Rational expected;
  std::optional<int> first;  // required pi(1), if any
  std::optional<int> last;   // required pi(n), if any
};

struct SeedCheck {
  std::string name;
  bool ok = false;
  std::string detail;  // evaluated value, or why the claim fails
};

// Zero-dif building blocks with pi(1) = 1, pi(n) = n.
const std::vector<SeedClaim>& fixed_end_seeds();
// Zero-dif permutations of length j = 8..12 with pi(1) = 1, pi(j) = j - 1.
const std::vector<SeedClaim>& end_shy_seeds();
// Zero-cycdif permutations of odd length 9, 11, 13.
const std::vector<SeedClaim>& cycdif_seeds();
// prod = 1 permutations of length 6, 7, 8 and the explicit length-32 one.
const std::vector<SeedClaim>& prod_seeds();
// The sixteen published zero-cycsqdif witnesses of length 12..27.
const std::vector<SeedClaim>& cycsqdif_witnesses();

// Everything the constructions rely on (every table above except the
// cycsqdif witnesses).
std::vector<SeedClaim> construction_seeds();

SeedCheck check_seed(const SeedClaim& claim);
std::vector<SeedCheck> verify_claims(std::span<const SeedClaim> claims);

// Verifies construction_seeds() once per process; throws
// SeedVerificationError naming the first failing seed. Safe to call
// concurrently.
void ensure_seeds_verified();

// Looks up a seed by name in construction_seeds() and returns its
// permutation; throws InvalidArgument for unknown names.
Permutation seed(const std::string& name);

}  // namespace permsum
