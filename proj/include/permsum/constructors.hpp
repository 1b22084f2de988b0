#pragma once

#include <vector>

#include "permsum/permutation.hpp"

namespace permsum {

// Deterministic witnesses for the three proven existence results and for
// every attainable integer value of dif. All functions verify the seed
// tables on first use and throw InvalidArgument for n below their range.

// dif = 0 with pi(1) = 1, pi(n) = n, for n >= 6.
Permutation zero_dif_fixed_ends(int n);

// dif = 0 with pi(1) = 1, pi(n) = n - 1, for n >= 8.
Permutation zero_dif_end_shy(int n);

// cycdif = 0, for n >= 8.
Permutation zero_cycdif(int n);

// prod = 1, for n >= 6.
Permutation prod_one(int n);

// Every intermediate permutation of the prod = 1 insertion chain, lengths
// 8..n (or just the length-n seed for n in {6, 7}). back() == prod_one(n).
// Throws ConstructionFailure if some step has no adjacent pair to insert at.
std::vector<Permutation> prod_one_chain(int n);

// Whether dif attains the integer m over permutations of length n.
bool is_admissible_integer(int n, long long m);

// dif = m exactly. Throws Inadmissible (kOutOfRange or kExcluded) when no
// permutation of length n attains m. For m <= 0 the result ends in n; for
// m > 0 it starts with n (it is the reverse of the witness for -m).
Permutation integer_witness(int n, long long m);

}  // namespace permsum
