#pragma once

// Precomputed per-(functional, n) term tables shared by the search and
// enumeration kernels. Internal header.

#include <bit>
#include <cstdint>
#include <vector>

#include "permsum/functional.hpp"

namespace permsum::detail {

// Exact accumulation in the DFS is done modulo a Mersenne prime larger than
// any term denominator; a residue match is confirmed with exact arithmetic.
inline constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kModulus ? s - kModulus : s;
}

std::uint64_t inverse_mod(long long d);

inline int lowest_bit(std::uint64_t mask) { return std::countr_zero(mask); }
inline int highest_bit(std::uint64_t mask) { return 63 - std::countl_zero(mask); }
inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
inline std::uint64_t all_values(int n) { return ((std::uint64_t{1} << n) - 1) << 1; }

class TermTables {
 public:
  TermTables(Functional f, int n);

  int n() const { return n_; }
  Functional functional() const { return f_; }

  double term(int a, int b) const { return term_[index(a, b)]; }
  std::uint64_t term_mod(int a, int b) const { return term_mod_[index(a, b)]; }

  // Admissible bounds on the sum of the terms still to be added, given the
  // unused values, the last placed entry, and (for cyclic functionals) the
  // first entry that closes the cycle. Every remaining edge is charged to
  // its right endpoint, so each unused value contributes its extreme term
  // against the set of partners still available to it.
  void completion_bounds(std::uint64_t unused, int last, int first, double& lo,
                         double& hi) const;

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_ + 1) +
           static_cast<std::size_t>(b);
  }
  double magnitude(int u, std::uint64_t partners) const;

  Functional f_;
  int n_;
  bool signed_terms_;
  std::vector<double> term_;
  std::vector<std::uint64_t> term_mod_;
};

}  // namespace permsum::detail
