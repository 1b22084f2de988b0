#include "kernel_tables.hpp"

#include <algorithm>
#include <cmath>

namespace permsum::detail {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return static_cast<std::uint64_t>(p % kModulus);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base);
    base = mul_mod(base, base);
    exp >>= 1;
  }
  return result;
}

}  // namespace

std::uint64_t inverse_mod(long long d) {
  long long r = d % static_cast<long long>(kModulus);
  if (r < 0) r += static_cast<long long>(kModulus);
  return pow_mod(static_cast<std::uint64_t>(r), kModulus - 2);
}

TermTables::TermTables(Functional f, int n)
    : f_(f),
      n_(n),
      signed_terms_(is_antisymmetric(f)),
      term_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0.0),
      term_mod_(term_.size(), 0) {
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      long long d = edge_denominator(f, a, b);
      term_[index(a, b)] = 1.0 / static_cast<double>(d);
      term_mod_[index(a, b)] = inverse_mod(d);
    }
  }
}

double TermTables::magnitude(int u, std::uint64_t partners) const {
  partners &= ~bit(u);
  if (partners == 0) return 0.0;
  if (!signed_terms_) {
    // 1/(u+w) and 1/(u*w) both peak at the smallest partner.
    return term(u, lowest_bit(partners));
  }
  // |1/(u-w)| and |1/(u^2-w^2)| both peak at the nearest partner above or
  // below u.
  double best = 0.0;
  std::uint64_t below = partners & (bit(u) - 1);
  std::uint64_t above = partners & ~((bit(u) << 1) - 1);
  if (below) best = std::fabs(term(u, highest_bit(below)));
  if (above) best = std::max(best, std::fabs(term(u, lowest_bit(above))));
  return best;
}

void TermTables::completion_bounds(std::uint64_t unused, int last, int first, double& lo,
                                   double& hi) const {
  const bool cyclic = is_cyclic(f_);
  const std::uint64_t partners = unused | bit(last);
  double upper = 0.0;
  double lower = 0.0;
  for (std::uint64_t m = unused; m; m &= m - 1) {
    const int u = lowest_bit(m);
    const double mag = magnitude(u, partners);
    upper += mag;
    if (!signed_terms_) {
      // Smallest term pairs u with its largest partner.
      std::uint64_t others = partners & ~bit(u);
      lower += term(u, highest_bit(others));
    }
  }
  if (cyclic && unused) {
    // Closing edge (pi(n), pi(1)) with pi(n) one of the unused values.
    const double wrap_max = magnitude(first, unused);
    upper += wrap_max;
    if (!signed_terms_) lower += term(first, highest_bit(unused));
  }
  if (signed_terms_) {
    lo = -upper;
    hi = upper;
  } else {
    lo = lower;
    hi = upper;
  }
}

}  // namespace permsum::detail
