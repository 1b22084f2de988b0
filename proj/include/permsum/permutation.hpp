#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permsum {

// A bijection on {1, ..., n}, stored as the sequence (pi(1), ..., pi(n)).
// Immutable once built; every operator below returns a fresh value.
class Permutation {
 public:
  // Throws InvalidArgument on empty input, duplicates, or values outside 1..n.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(entries_.size()); }

  // 1-based access: at(1) is the first entry.
  int at(int position) const;
  int front() const noexcept { return entries_.front(); }
  int back() const noexcept { return entries_.back(); }

  std::span<const int> entries() const noexcept { return entries_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

// Validates a raw sequence; same contract as the constructor.
Permutation validate(std::span<const int> raw);

// Textual interchange form: comma-separated 1-based values, whitespace ignored.
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& p);
std::ostream& operator<<(std::ostream& os, const Permutation& p);

Permutation reverse(const Permutation& p);

// Entry k becomes n + 1 - pi(k).
Permutation complement(const Permutation& p);

// Joins sigma (ending in its maximum s) and tau (starting at 1) into a
// permutation of length s + t - 1, shifting tau up by s - 1 so the two
// share the junction entry s.
Permutation link(const Permutation& sigma, const Permutation& tau);

// Places the new maximum n = |sigma| + 1 right after position j, for
// 1 <= j <= n - 2 (strictly between two existing entries).
Permutation insert_letter(const Permutation& sigma, int position);

// sigma followed by the reverse of tau shifted up by k = |sigma|.
// Requires |tau| = k + 1.
Permutation shift_reverse_concat(const Permutation& sigma, const Permutation& tau);

}  // namespace permsum
