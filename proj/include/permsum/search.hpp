#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "permsum/functional.hpp"

namespace permsum {

// Largest n the search and enumeration kernels accept (values live in a
// 64-bit mask).
inline constexpr int kMaxSearchLength = 62;

enum class CandidateOrder {
  kAscending,  // plain lexicographic DFS; used for oracle comparison
  kClosest,    // try the entry that brings the partial sum closest to target first
};

struct Progress {
  std::uint64_t nodes = 0;
  int depth = 0;
  // Closest complete permutation seen so far and its exact |value - target|.
  std::optional<Permutation> best;
  std::optional<Rational> best_deviation;
};

struct SearchOptions {
  std::optional<std::chrono::duration<double>> time_budget;
  std::optional<std::uint64_t> node_budget;
  int workers = 1;
  bool symmetry_reduction = true;
  bool first_only = true;
  // Disabling pruning gives the unpruned traversal the pruned one is tested
  // against; symmetry reduction is controlled separately.
  bool prune = true;
  CandidateOrder order = CandidateOrder::kAscending;

  std::function<void(const Progress&)> on_progress;
  std::chrono::milliseconds progress_interval{1000};
};

enum class SearchStatus { kFound, kExhausted, kBudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::kExhausted;
  // Re-verified witnesses in DFS order. With first_only, at most one: the
  // first witness in lexicographic task order, independent of worker count.
  // With symmetry reduction only canonical representatives are reported.
  std::vector<Witness> witnesses;
  std::uint64_t nodes = 0;
  std::chrono::duration<double> elapsed{};
  bool space_exhausted = false;  // the whole (reduced) space was traversed
};

// DFS over permutations of length n for one whose functional value equals
// target exactly. Not-found is a result, not an error: kExhausted is a proof
// of nonexistence, kBudgetExceeded is inconclusive.
// Throws InvalidArgument for n out of range or malformed options.
SearchResult find_witness(Functional f, int n, const Rational& target,
                          const SearchOptions& opts = {});

// Every value f attains over S_n, sorted ascending.
struct ValueSet {
  int n = 0;
  Functional functional = Functional::kDif;
  std::vector<Rational> values;

  bool contains(const Rational& v) const;
  std::vector<long long> integers() const;
  std::vector<Rational> nonnegative() const;
};

struct EnumerateOptions {
  std::optional<std::chrono::duration<double>> time_budget;
  // Counts complete permutations visited.
  std::optional<std::uint64_t> node_budget;
  int workers = 1;
  bool symmetry_reduction = true;
  // Accumulate with arbitrary-precision fractions even when a 128-bit
  // common denominator would fit.
  bool force_bignum = false;
};

// Exact value set. Throws BudgetExceeded rather than returning a partial set.
ValueSet enumerate_values(Functional f, int n, const EnumerateOptions& opts = {});

// Integer values of dif over S_n by exhaustive enumeration.
std::vector<long long> integer_values_exhaustive(int n, const EnumerateOptions& opts = {});

// Integer values of dif over S_n from integer_witness, each re-evaluated.
std::vector<long long> integer_values_constructive(int n);

// Exhaustive for n <= exhaustive_limit, constructive above it.
std::vector<long long> integer_values(int n, int exhaustive_limit = 9,
                                      const EnumerateOptions& opts = {});

}  // namespace permsum
