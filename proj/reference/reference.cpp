#include "reference.hpp"

#include <algorithm>
#include <numeric>

namespace permsum::reference {

namespace {

template <typename Visit>
void for_each_permutation(int n, Visit visit) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  do {
    visit(e);
  } while (std::next_permutation(e.begin(), e.end()));
}

}  // namespace

std::vector<Rational> all_values(Functional f, int n) {
  std::vector<Rational> values;
  for_each_permutation(n, [&](const std::vector<int>& e) { values.push_back(evaluate(f, Permutation(e))); });
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<Permutation> all_witnesses(Functional f, int n, const Rational& target) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const std::vector<int>& e) {
    Permutation p(e);
    if (evaluate(f, p) == target) out.push_back(std::move(p));
  });
  return out;
}

}  // namespace permsum::reference
