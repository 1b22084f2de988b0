#include "permsum/constructors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>

#include "permsum/errors.hpp"
#include "permsum/functional.hpp"
#include "permsum/seeds.hpp"

namespace permsum {

namespace {

void require_at_least(const char* what, int n, int min_n) {
  if (n < min_n) {
    throw InvalidArgument(std::string(what) + " needs n >= " + std::to_string(min_n) +
                          ", got n = " + std::to_string(n));
  }
}

// Lexicographically first witness for each integer value <= 0 attained by
// dif over S_n, preferring permutations that end in n. n <= 6 only.
using BaseTable = std::map<long long, Permutation>;

BaseTable brute_force_base(int n) {
  BaseTable table;
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  do {
    Rational v = evaluate(Functional::kDif, Permutation(e));
    if (!v.is_integer() || v.sign() > 0) continue;
    long long m = v.to_integer();
    auto it = table.find(m);
    if (it == table.end()) {
      table.emplace(m, Permutation(e));
    } else if (it->second.back() != n && e.back() == n) {
      it->second = Permutation(e);
    }
  } while (std::next_permutation(e.begin(), e.end()));
  return table;
}

const BaseTable& base_table(int n) {
  static const std::array<BaseTable, 7> tables = [] {
    std::array<BaseTable, 7> t;
    for (int k = 2; k <= 6; ++k) t[k] = brute_force_base(k);
    return t;
  }();
  return tables[static_cast<std::size_t>(n)];
}

// dif = m <= 0 ending in n. Appending n after a permutation of length n - 1
// that ends in n - 1 adds the term -1, so peel off such steps until a base
// case applies: the zero-dif construction, the identity, or the brute-force
// table for n <= 6.
Permutation nonpositive_witness(int n, long long m) {
  int base_n = n;
  long long base_m = m;
  while (!(base_m == 0 && base_n >= 6) && base_n > 6 && base_m != -(base_n - 1)) {
    --base_n;
    ++base_m;
  }
  Permutation base = Permutation::identity(1);
  if (base_m == 0 && base_n >= 6) {
    base = zero_dif_fixed_ends(base_n);
  } else if (base_m == -(base_n - 1)) {
    base = Permutation::identity(base_n);
  } else {
    const auto& table = base_table(base_n);
    auto it = table.find(base_m);
    if (it == table.end()) {
      throw ConstructionFailure("no base witness for dif = " + std::to_string(base_m) + " at n = " +
                                std::to_string(base_n));
    }
    base = it->second;
  }
  if (base_n < n && base.back() != base_n) {
    throw ConstructionFailure("witness for dif = " + std::to_string(base_m) + " at n = " +
                              std::to_string(base_n) + " does not end in n");
  }
  std::vector<int> e(base.entries().begin(), base.entries().end());
  for (int v = base_n + 1; v <= n; ++v) e.push_back(v);
  return Permutation(std::move(e));
}

}  // namespace

Permutation zero_dif_fixed_ends(int n) {
  require_at_least("zero_dif_fixed_ends", n, 6);
  ensure_seeds_verified();
  static const std::array<const char*, 3> kBaseByResidue = {"sigma_0", "sigma_1", "sigma_2"};
  Permutation result = seed(kBaseByResidue[static_cast<std::size_t>(n % 3)]);
  const Permutation block = seed("sigma_1");
  while (result.size() < n) result = link(result, block);
  return result;
}

Permutation zero_dif_end_shy(int n) {
  require_at_least("zero_dif_end_shy", n, 8);
  if (n <= 12) return seed("alpha_" + std::to_string(n));
  return link(zero_dif_fixed_ends(n - 7), seed("alpha_8"));
}

Permutation zero_cycdif(int n) {
  require_at_least("zero_cycdif", n, 8);
  if (n % 2 == 0) {
    const int k = n / 2;
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= k; ++v) e.push_back(v);
    for (int v = n; v > k; --v) e.push_back(v);
    return Permutation(std::move(e));
  }
  if (n <= 13) return seed("beta_" + std::to_string(n));
  const int k = n / 2;
  return shift_reverse_concat(zero_dif_fixed_ends(k), zero_dif_end_shy(k + 1));
}

std::vector<Permutation> prod_one_chain(int n) {
  require_at_least("prod_one", n, 6);
  if (n <= 7) return {seed("delta_" + std::to_string(n))};
  std::vector<Permutation> chain{seed("delta_8")};
  for (int m = 9; m <= n; ++m) {
    const Permutation& current = chain.back();
    auto e = current.entries();
    // Among the adjacent pairs summing to m, take the one holding the
    // smallest entry. This keeps odd letters next to 2, letters 4k+2 next to
    // 4, and splits the ascending run of 4k+2 letters for multiples of 8.
    int position = 0;
    int smallest = m;
    for (std::size_t k = 0; k + 1 < e.size(); ++k) {
      if (e[k] + e[k + 1] == m && std::min(e[k], e[k + 1]) < smallest) {
        smallest = std::min(e[k], e[k + 1]);
        position = static_cast<int>(k) + 1;
      }
    }
    if (position == 0) {
      throw ConstructionFailure("prod_one: no adjacent pair sums to " + std::to_string(m) + " in " +
                                to_string(current));
    }
    chain.push_back(insert_letter(current, position));
  }
  return chain;
}

Permutation prod_one(int n) { return prod_one_chain(n).back(); }

bool is_admissible_integer(int n, long long m) {
  if (n < 2) return false;
  const long long a = m < 0 ? -m : m;
  if (n == 3) return a == 2;
  if (n == 5) return a == 1 || a == 2 || a == 4;
  return a <= n - 1 && a != n - 2;
}

Permutation integer_witness(int n, long long m) {
  const long long a = m < 0 ? -m : m;
  if (n < 2) {
    throw Inadmissible(Inadmissible::Kind::kOutOfRange,
                       "out of range: dif needs n >= 2, got n = " + std::to_string(n));
  }
  if (a > n - 1) {
    throw Inadmissible(Inadmissible::Kind::kOutOfRange,
                       "out of range: |dif| <= n-1 = " + std::to_string(n - 1) + ", got " +
                           std::to_string(m));
  }
  if (!is_admissible_integer(n, m)) {
    std::string why = a == n - 2 ? "excluded: n-2 is not attained by dif"
                                 : "excluded: dif over S_" + std::to_string(n) +
                                       (n == 3 ? " attains only the integers -2, 2"
                                               : " attains only the integers -4, -2, -1, 1, 2, 4");
    throw Inadmissible(Inadmissible::Kind::kExcluded, why + " (n = " + std::to_string(n) +
                                                          ", m = " + std::to_string(m) + ")");
  }
  ensure_seeds_verified();
  if (m > 0) return reverse(nonpositive_witness(n, -m));
  return nonpositive_witness(n, m);
}

}  // namespace permsum
