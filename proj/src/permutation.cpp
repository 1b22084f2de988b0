#include "permsum/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>

#include "permsum/errors.hpp"

namespace permsum {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("empty permutation");
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n) {
      throw InvalidArgument("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[v]) throw InvalidArgument("duplicate value " + std::to_string(v));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidArgument("identity needs n >= 1");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

int Permutation::at(int position) const {
  if (position < 1 || position > size()) {
    throw InvalidArgument("position " + std::to_string(position) + " outside 1.." +
                          std::to_string(size()));
  }
  return entries_[static_cast<std::size_t>(position) - 1];
}

Permutation validate(std::span<const int> raw) {
  return Permutation(std::vector<int>(raw.begin(), raw.end()));
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::string token;
  auto flush = [&] {
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidArgument("bad permutation entry '" + token + "'");
    }
    values.push_back(v);
    token.clear();
  };
  bool any = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    any = true;
    if (c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  if (!any) throw InvalidArgument("empty permutation");
  flush();
  return Permutation(std::move(values));
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int v : p.entries()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(v);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }

Permutation reverse(const Permutation& p) {
  std::vector<int> e(p.entries().rbegin(), p.entries().rend());
  return Permutation(std::move(e));
}

Permutation complement(const Permutation& p) {
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(p.size()));
  for (int v : p.entries()) e.push_back(p.size() + 1 - v);
  return Permutation(std::move(e));
}

Permutation link(const Permutation& sigma, const Permutation& tau) {
  const int s = sigma.size();
  if (sigma.back() != s) {
    throw InvalidArgument("link: sigma must end in its maximum " + std::to_string(s));
  }
  if (tau.front() != 1) throw InvalidArgument("link: tau must start with 1");
  std::vector<int> e(sigma.entries().begin(), sigma.entries().end());
  e.reserve(static_cast<std::size_t>(s + tau.size() - 1));
  for (int v : tau.entries().subspan(1)) e.push_back(s - 1 + v);
  return Permutation(std::move(e));
}

Permutation insert_letter(const Permutation& sigma, int position) {
  const int n = sigma.size() + 1;
  if (position < 1 || position > n - 2) {
    throw InvalidArgument("insert_letter: position " + std::to_string(position) +
                          " outside 1.." + std::to_string(n - 2));
  }
  std::vector<int> e(sigma.entries().begin(), sigma.entries().end());
  e.insert(e.begin() + position, n);
  return Permutation(std::move(e));
}

Permutation shift_reverse_concat(const Permutation& sigma, const Permutation& tau) {
  const int k = sigma.size();
  if (tau.size() != k + 1) {
    throw InvalidArgument("shift_reverse_concat: |tau| must be |sigma| + 1, got " +
                          std::to_string(tau.size()) + " and " + std::to_string(k));
  }
  std::vector<int> e(sigma.entries().begin(), sigma.entries().end());
  e.reserve(static_cast<std::size_t>(2 * k + 1));
  for (auto it = tau.entries().rbegin(); it != tau.entries().rend(); ++it) e.push_back(k + *it);
  return Permutation(std::move(e));
}

}  // namespace permsum
