#pragma once

// Serial brute-force reference implementations. They walk all n! orderings
// with std::next_permutation and evaluate each one from scratch with the
// exact evaluator, sharing nothing with the parallel kernels besides it.
// Test and benchmark use only.

#include <vector>

#include "permsum/functional.hpp"

namespace permsum::reference {

// Every value attained over S_n, sorted ascending and deduplicated.
std::vector<Rational> all_values(Functional f, int n);

// Every permutation of length n whose value is exactly target, in
// lexicographic order.
std::vector<Permutation> all_witnesses(Functional f, int n, const Rational& target);

}  // namespace permsum::reference
