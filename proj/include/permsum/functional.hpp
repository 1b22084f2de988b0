#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "permsum/permutation.hpp"
#include "permsum/rational.hpp"

namespace permsum {

// Sums of reciprocals over adjacent entries (a, b) = (pi(k), pi(k+1)):
//   dif      1 / (a - b)
//   prod     1 / (a * b)
//   sum      1 / (a + b)
//   sqdif    1 / (a^2 - b^2)
// The cyc* variants add the wrap-around pair (pi(n), pi(1)).
enum class Functional { kDif, kCycDif, kProd, kSum, kCycSum, kSqDif, kCycSqDif };

inline constexpr std::array<Functional, 7> kAllFunctionals = {
    Functional::kDif, Functional::kCycDif, Functional::kProd,    Functional::kSum,
    Functional::kCycSum, Functional::kSqDif, Functional::kCycSqDif};

std::string_view name(Functional f);
std::optional<Functional> parse_functional(std::string_view text);

bool is_cyclic(Functional f);

// Reversing a permutation negates dif/sqdif (and their cyclic forms) and
// leaves prod/sum unchanged.
bool is_antisymmetric(Functional f);

// Smallest n the functional is defined for: 2, or 3 for cyclic forms.
int min_length(Functional f);

// The signed quantity whose reciprocal is the term for the pair (a, b).
long long edge_denominator(Functional f, long long a, long long b);

Rational edge_term(Functional f, long long a, long long b);

// Exact value over a whole permutation. Throws InvalidArgument when
// |p| < min_length(f).
Rational evaluate(Functional f, const Permutation& p);

// Sum over consecutive pairs of a partial sequence, never including a wrap
// term. Entries must be distinct positive integers; length >= 1.
Rational evaluate_prefix(Functional f, std::span<const int> prefix);

// A permutation together with the exact value of a functional on it. The
// value is always recomputed; a claimed value is checked, never trusted.
class Witness {
 public:
  Witness(Permutation perm, Functional f);
  // Throws InvalidArgument if the recomputed value differs from `claimed`.
  Witness(Permutation perm, Functional f, const Rational& claimed);

  const Permutation& perm() const noexcept { return perm_; }
  Functional functional() const noexcept { return functional_; }
  const Rational& value() const noexcept { return value_; }

 private:
  Permutation perm_;
  Functional functional_;
  Rational value_;
};

}  // namespace permsum
