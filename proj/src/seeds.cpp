#include "permsum/seeds.hpp"

#include "permsum/errors.hpp"

namespace permsum {

namespace {

SeedClaim claim(std::string name, std::vector<int> entries, Functional f, long long expected,
                std::optional<int> first = std::nullopt, std::optional<int> last = std::nullopt) {
  return SeedClaim{std::move(name), std::move(entries), f, Rational(expected), first, last};
}

}  // namespace

const std::vector<SeedClaim>& fixed_end_seeds() {
  static const std::vector<SeedClaim> table = {
      claim("sigma_0", {1, 4, 2, 5, 3, 6}, Functional::kDif, 0, 1, 6),
      claim("sigma_1", {1, 3, 2, 4}, Functional::kDif, 0, 1, 4),
      claim("sigma_2", {1, 3, 6, 4, 7, 5, 2, 8}, Functional::kDif, 0, 1, 8),
  };
  return table;
}

const std::vector<SeedClaim>& end_shy_seeds() {
  static const std::vector<SeedClaim> table = {
      claim("alpha_8", {1, 2, 4, 8, 6, 5, 3, 7}, Functional::kDif, 0, 1, 7),
      claim("alpha_9", {1, 4, 2, 5, 9, 3, 7, 6, 8}, Functional::kDif, 0, 1, 8),
      claim("alpha_10", {1, 2, 6, 3, 7, 8, 5, 4, 10, 9}, Functional::kDif, 0, 1, 9),
      claim("alpha_11", {1, 2, 3, 4, 6, 5, 9, 8, 7, 11, 10}, Functional::kDif, 0, 1, 10),
      claim("alpha_12", {1, 2, 3, 6, 4, 8, 12, 10, 9, 7, 5, 11}, Functional::kDif, 0, 1, 11),
  };
  return table;
}

const std::vector<SeedClaim>& cycdif_seeds() {
  static const std::vector<SeedClaim> table = {
      claim("beta_9", {2, 1, 4, 5, 9, 3, 7, 6, 8}, Functional::kCycDif, 0),
      claim("beta_11", {1, 2, 11, 5, 4, 8, 7, 9, 3, 6, 10}, Functional::kCycDif, 0),
      claim("beta_13", {1, 2, 13, 3, 5, 4, 9, 8, 10, 6, 11, 7, 12}, Functional::kCycDif, 0),
  };
  return table;
}

const std::vector<SeedClaim>& prod_seeds() {
  static const std::vector<SeedClaim> table = {
      claim("delta_6", {2, 1, 3, 4, 5, 6}, Functional::kProd, 1),
      claim("delta_7", {2, 1, 3, 7, 4, 5, 6}, Functional::kProd, 1),
      claim("delta_8", {6, 4, 1, 2, 7, 5, 3, 8}, Functional::kProd, 1),
      claim("delta_32",
            {6,  16, 10, 24, 14, 32, 18, 22, 26, 30, 4,  1,  2,  31, 29, 27,
             25, 23, 21, 19, 17, 15, 28, 13, 11, 20, 9,  7,  12, 5,  3,  8},
            Functional::kProd, 1),
  };
  return table;
}

const std::vector<SeedClaim>& cycsqdif_witnesses() {
  static const std::vector<SeedClaim> table = {
      claim("pi_12", {1, 4, 3, 5, 7, 2, 12, 8, 10, 11, 9, 6}, Functional::kCycSqDif, 0),
      claim("pi_13", {1, 2, 12, 8, 9, 6, 11, 10, 7, 5, 13, 4, 3}, Functional::kCycSqDif, 0),
      claim("pi_14", {1, 2, 12, 9, 6, 4, 3, 13, 8, 7, 5, 10, 14, 11}, Functional::kCycSqDif, 0),
      claim("pi_15", {1, 9, 2, 3, 12, 10, 11, 5, 4, 14, 6, 15, 13, 8, 7}, Functional::kCycSqDif, 0),
      claim("pi_16", {1, 3, 2, 4, 5, 11, 16, 14, 10, 8, 6, 12, 9, 15, 13, 7},
            Functional::kCycSqDif, 0),
      claim("pi_17", {1, 3, 2, 4, 5, 9, 15, 6, 12, 16, 11, 10, 14, 13, 8, 7, 17},
            Functional::kCycSqDif, 0),
      claim("pi_18", {1, 3, 2, 4, 6, 5, 7, 13, 8, 14, 12, 16, 10, 18, 17, 9, 11, 15},
            Functional::kCycSqDif, 0),
      claim("pi_19", {1, 3, 2, 4, 6, 5, 7, 8, 12, 18, 17, 13, 9, 15, 11, 10, 16, 19, 14},
            Functional::kCycSqDif, 0),
      claim("pi_20", {1, 3, 2, 4, 6, 5, 7, 18, 8, 13, 12, 17, 9, 20, 16, 19, 10, 11, 15, 14},
            Functional::kCycSqDif, 0),
      claim("pi_21", {1, 3, 2, 4, 6, 5, 7, 17, 8, 20, 16, 9, 12, 18, 15, 13, 19, 21, 11, 14, 10},
            Functional::kCycSqDif, 0),
      claim("pi_22",
            {1, 3, 2, 4, 6, 5, 7, 8, 20, 13, 17, 22, 18, 12, 9, 15, 21, 19, 16, 11, 10, 14},
            Functional::kCycSqDif, 0),
      claim("pi_23",
            {1, 3, 2, 4, 6, 14, 10, 18, 12, 8, 20, 7, 5, 21, 15, 11, 17, 13, 22, 23, 16, 19, 9},
            Functional::kCycSqDif, 0),
      claim("pi_24",
            {1, 3, 2, 4, 6, 14, 10, 18, 12, 8, 5, 9, 21, 11, 24, 16, 20, 22, 17, 15, 13, 19, 23, 7},
            Functional::kCycSqDif, 0),
      claim("pi_25", {1, 3,  2,  4, 6,  14, 10, 18, 12, 8,  5,  16, 24,
                      9, 21, 23, 7, 17, 15, 11, 13, 22, 20, 19, 25},
            Functional::kCycSqDif, 0),
      claim("pi_26", {1,  3,  2,  4,  6,  14, 10, 18, 12, 8,  22, 13, 5,
                      23, 16, 20, 19, 21, 9,  7,  17, 11, 25, 15, 24, 26},
            Functional::kCycSqDif, 0),
      claim("pi_27", {1,  3,  2,  4,  6,  14, 10, 18, 12, 8,  22, 13, 9, 5,
                      11, 21, 23, 16, 26, 19, 25, 27, 17, 15, 24, 20, 7},
            Functional::kCycSqDif, 0),
  };
  return table;
}

std::vector<SeedClaim> construction_seeds() {
  std::vector<SeedClaim> all;
  for (const auto* table : {&fixed_end_seeds(), &end_shy_seeds(), &cycdif_seeds(), &prod_seeds()}) {
    all.insert(all.end(), table->begin(), table->end());
  }
  return all;
}

SeedCheck check_seed(const SeedClaim& claim) {
  SeedCheck check{claim.name, false, {}};
  try {
    Permutation p(claim.entries);
    Rational value = evaluate(claim.functional, p);
    check.detail = std::string(name(claim.functional)) + " = " + value.to_string();
    if (value != claim.expected) {
      check.detail += ", expected " + claim.expected.to_string();
      return check;
    }
    if (claim.first && p.front() != *claim.first) {
      check.detail += ", but pi(1) = " + std::to_string(p.front()) + " instead of " +
                      std::to_string(*claim.first);
      return check;
    }
    if (claim.last && p.back() != *claim.last) {
      check.detail += ", but pi(n) = " + std::to_string(p.back()) + " instead of " +
                      std::to_string(*claim.last);
      return check;
    }
    check.ok = true;
  } catch (const InvalidArgument& e) {
    check.detail = e.what();
  }
  return check;
}

std::vector<SeedCheck> verify_claims(std::span<const SeedClaim> claims) {
  std::vector<SeedCheck> out;
  out.reserve(claims.size());
  for (const auto& c : claims) out.push_back(check_seed(c));
  return out;
}

void ensure_seeds_verified() {
  // Function-local static initialization runs exactly once, even under
  // concurrent first use; a throw leaves it uninitialized so every caller
  // sees the failure.
  static const bool verified = [] {
    for (const auto& c : construction_seeds()) {
      SeedCheck check = check_seed(c);
      if (!check.ok) {
        throw SeedVerificationError(c.name, "seed " + c.name + " failed verification: " + check.detail);
      }
    }
    return true;
  }();
  (void)verified;
}

Permutation seed(const std::string& wanted) {
  ensure_seeds_verified();
  for (const auto* table : {&fixed_end_seeds(), &end_shy_seeds(), &cycdif_seeds(), &prod_seeds()}) {
    for (const auto& c : *table) {
      if (c.name == wanted) return Permutation(c.entries);
    }
  }
  throw InvalidArgument("unknown seed '" + wanted + "'");
}

}  // namespace permsum
