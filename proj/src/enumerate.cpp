#include <algorithm>
#include <atomic>
#include <set>
#include <unordered_set>

#include <omp.h>

#include "kernel_tables.hpp"
#include "permsum/constructors.hpp"
#include "permsum/errors.hpp"
#include "permsum/search.hpp"

namespace permsum {

namespace {

using Clock = std::chrono::steady_clock;
using detail::bit;
using detail::highest_bit;
using detail::lowest_bit;
using i128 = __int128;

constexpr std::uint64_t kFlushEvery = 8192;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

struct I128Hash {
  std::size_t operator()(i128 v) const noexcept {
    auto lo = static_cast<std::uint64_t>(v);
    auto hi = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

// Common denominator of every possible term, if it leaves room for summing
// n terms of magnitude at most L in 128 bits.
std::optional<i128> common_denominator(Functional f, int n) {
  const i128 limit = static_cast<i128>(1) << 118;
  i128 l = 1;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      i128 d = edge_denominator(f, a, b);
      if (d < 0) d = -d;
      i128 g = gcd128(l, d);
      i128 factor = d / g;
      if (l > limit / factor) return std::nullopt;
      l *= factor;
    }
  }
  if (l > limit / (n + 1)) return std::nullopt;
  return l;
}

struct Reduction {
  bool fix_first_one = false;
  bool reversal = false;
  bool add_negatives = false;
};

Reduction choose_reduction(Functional f, bool enabled) {
  Reduction r;
  if (!enabled) return r;
  r.fix_first_one = is_cyclic(f);
  r.reversal = true;
  r.add_negatives = is_antisymmetric(f);
  return r;
}

struct Budget {
  const EnumerateOptions& opts;
  Clock::time_point start;
  std::atomic<std::uint64_t> leaves{0};
  std::atomic<bool> hit{false};

  // Adds `pending` leaves; returns false once the budget is exhausted.
  bool charge(std::uint64_t pending) {
    const std::uint64_t total = leaves.fetch_add(pending) + pending;
    if ((opts.node_budget && total > *opts.node_budget) ||
        (opts.time_budget && Clock::now() - start >= *opts.time_budget)) {
      hit = true;
    }
    return !hit.load();
  }
};

// DFS over all completions of a prefix, calling `on_leaf(seq)` at every
// complete permutation that respects the reduction. Accumulation is left to
// the caller through `Acc`, which must provide
//   Acc extend(const Acc&, int a, int b) and the leaf callback.
template <typename Acc, typename Extend, typename Leaf>
class Walker {
 public:
  Walker(int n, const Reduction& red, Budget& budget, Extend extend, Leaf leaf)
      : n_(n), red_(red), budget_(budget), extend_(extend), leaf_(leaf),
        seq_(static_cast<std::size_t>(n)) {}

  void run(const std::vector<int>& prefix, Acc acc) {
    std::uint64_t unused = detail::all_values(n_);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      seq_[i] = prefix[i];
      unused &= ~bit(prefix[i]);
      if (i > 0) acc = extend_(acc, prefix[i - 1], prefix[i]);
    }
    const int depth = static_cast<int>(prefix.size());
    if (admissible(depth, unused)) walk(depth, unused, acc);
    if (pending_ > 0) budget_.charge(pending_);
  }

 private:
  bool admissible(int depth, std::uint64_t unused) const {
    if (!red_.reversal) return true;
    const int anchor_pos = red_.fix_first_one ? 1 : 0;
    if (depth <= anchor_pos) return true;
    const int anchor = seq_[static_cast<std::size_t>(anchor_pos)];
    if (unused != 0) return highest_bit(unused) > anchor;
    return depth - 1 == anchor_pos || seq_[static_cast<std::size_t>(depth - 1)] > anchor;
  }

  void walk(int depth, std::uint64_t unused, const Acc& acc) {
    if (stopped_) return;
    if (unused == 0) {
      leaf_(seq_, acc);
      if (++pending_ >= kFlushEvery) {
        if (!budget_.charge(pending_)) stopped_ = true;
        pending_ = 0;
      }
      return;
    }
    const int last = seq_[depth - 1];
    for (std::uint64_t m = unused; m && !stopped_; m &= m - 1) {
      const int v = lowest_bit(m);
      seq_[depth] = v;
      const std::uint64_t rest = unused & ~bit(v);
      if (!admissible(depth + 1, rest)) continue;
      walk(depth + 1, rest, extend_(acc, last, v));
    }
  }

  int n_;
  const Reduction& red_;
  Budget& budget_;
  Extend extend_;
  Leaf leaf_;
  std::vector<int> seq_;
  std::uint64_t pending_ = 0;
  bool stopped_ = false;
};

std::vector<std::vector<int>> prefixes(int n, const Reduction& red) {
  const int depth = std::min(n, red.fix_first_one ? 3 : 2);
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  auto rec = [&](auto&& self, std::uint64_t unused) -> void {
    if (static_cast<int>(prefix.size()) == depth) {
      out.push_back(prefix);
      return;
    }
    for (std::uint64_t m = unused; m; m &= m - 1) {
      const int v = lowest_bit(m);
      if (prefix.empty() && red.fix_first_one && v != 1) continue;
      prefix.push_back(v);
      self(self, unused & ~bit(v));
      prefix.pop_back();
    }
  };
  rec(rec, detail::all_values(n));
  return out;
}

std::vector<Rational> enumerate_fixed(Functional f, int n, i128 denominator, const Reduction& red,
                                      const std::vector<std::vector<int>>& tasks, Budget& budget,
                                      int workers) {
  std::vector<i128> numer(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a != b) numer[static_cast<std::size_t>(a * (n + 1) + b)] = denominator / edge_denominator(f, a, b);
    }
  }
  auto extend = [&numer, n](i128 acc, int a, int b) {
    return acc + numer[static_cast<std::size_t>(a * (n + 1) + b)];
  };
  const bool cyclic = is_cyclic(f);

  std::unordered_set<i128, I128Hash> merged;
#pragma omp parallel num_threads(workers)
  {
    std::unordered_set<i128, I128Hash> local;
    auto leaf = [&](const std::vector<int>& seq, i128 acc) {
      if (cyclic) acc = extend(acc, seq.back(), seq.front());
      local.insert(acc);
    };
#pragma omp for schedule(dynamic, 1)
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      if (budget.hit.load()) continue;
      Walker<i128, decltype(extend), decltype(leaf)> walker(n, red, budget, extend, leaf);
      walker.run(tasks[t], 0);
    }
#pragma omp critical
    merged.insert(local.begin(), local.end());
  }

  const mpz_class den = to_mpz(denominator);
  std::vector<Rational> values;
  values.reserve(merged.size() * (red.add_negatives ? 2 : 1));
  for (i128 s : merged) {
    values.emplace_back(to_mpz(s), den);
    if (red.add_negatives) values.emplace_back(to_mpz(-s), den);
  }
  return values;
}

std::vector<Rational> enumerate_bignum(Functional f, int n, const Reduction& red,
                                       const std::vector<std::vector<int>>& tasks, Budget& budget,
                                       int workers) {
  auto extend = [f](const Rational& acc, int a, int b) { return acc + edge_term(f, a, b); };
  const bool cyclic = is_cyclic(f);
  std::set<Rational> merged;
#pragma omp parallel num_threads(workers)
  {
    std::set<Rational> local;
    auto leaf = [&](const std::vector<int>& seq, const Rational& acc) {
      local.insert(cyclic ? extend(acc, seq.back(), seq.front()) : acc);
    };
#pragma omp for schedule(dynamic, 1)
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      if (budget.hit.load()) continue;
      Walker<Rational, decltype(extend), decltype(leaf)> walker(n, red, budget, extend, leaf);
      walker.run(tasks[t], Rational());
    }
#pragma omp critical
    merged.insert(local.begin(), local.end());
  }
  std::vector<Rational> values(merged.begin(), merged.end());
  if (red.add_negatives) {
    for (const auto& v : merged) values.push_back(-v);
  }
  return values;
}

}  // namespace

bool ValueSet::contains(const Rational& v) const {
  return std::binary_search(values.begin(), values.end(), v);
}

std::vector<long long> ValueSet::integers() const {
  std::vector<long long> out;
  for (const auto& v : values) {
    if (v.is_integer()) out.push_back(v.to_integer());
  }
  return out;
}

std::vector<Rational> ValueSet::nonnegative() const {
  std::vector<Rational> out;
  for (const auto& v : values) {
    if (v.sign() >= 0) out.push_back(v);
  }
  return out;
}

ValueSet enumerate_values(Functional f, int n, const EnumerateOptions& opts) {
  if (n < min_length(f) || n > kMaxSearchLength) {
    throw InvalidArgument(std::string(name(f)) + " enumeration needs " +
                          std::to_string(min_length(f)) + " <= n <= " +
                          std::to_string(kMaxSearchLength) + ", got n = " + std::to_string(n));
  }
  if (opts.workers < 1) throw InvalidArgument("workers must be positive");

  const Reduction red = choose_reduction(f, opts.symmetry_reduction);
  const auto tasks = prefixes(n, red);
  Budget budget{opts, Clock::now()};

  std::vector<Rational> values;
  std::optional<i128> denominator = opts.force_bignum ? std::nullopt : common_denominator(f, n);
  if (denominator) {
    values = enumerate_fixed(f, n, *denominator, red, tasks, budget, opts.workers);
  } else {
    values = enumerate_bignum(f, n, red, tasks, budget, opts.workers);
  }
  if (budget.hit.load()) {
    throw BudgetExceeded("enumeration of " + std::string(name(f)) + " over S_" + std::to_string(n) +
                         " stopped after " + std::to_string(budget.leaves.load()) +
                         " permutations; no partial value set is reported");
  }

  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  ValueSet set{n, f, std::move(values)};
  if (is_antisymmetric(f)) {
    for (const auto& v : set.values) {
      if (!set.contains(-v)) {
        throw ConstructionFailure("value set of " + std::string(name(f)) + " is not closed under negation: " +
                                  v.to_string());
      }
    }
  }
  return set;
}

std::vector<long long> integer_values_exhaustive(int n, const EnumerateOptions& opts) {
  return enumerate_values(Functional::kDif, n, opts).integers();
}

std::vector<long long> integer_values_constructive(int n) {
  if (n < 2) throw InvalidArgument("dif needs n >= 2");
  std::vector<long long> out;
  for (long long m = -(n - 1); m <= n - 1; ++m) {
    if (!is_admissible_integer(n, m)) continue;
    Permutation p = integer_witness(n, m);
    if (p.size() != n || evaluate(Functional::kDif, p) != Rational(m)) {
      throw ConstructionFailure("integer_witness(" + std::to_string(n) + ", " + std::to_string(m) +
                                ") does not evaluate to " + std::to_string(m));
    }
    out.push_back(m);
  }
  return out;
}

std::vector<long long> integer_values(int n, int exhaustive_limit, const EnumerateOptions& opts) {
  if (n <= exhaustive_limit) return integer_values_exhaustive(n, opts);
  return integer_values_constructive(n);
}

}  // namespace permsum
