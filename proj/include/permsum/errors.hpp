#pragma once

#include <stdexcept>
#include <string>

namespace permsum {

// Malformed input: bad permutation text, out-of-range position, undersized
// permutation for a functional, bad search options.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested (n, value) pair that no permutation can realize.
class Inadmissible : public InvalidArgument {
 public:
  enum class Kind { kOutOfRange, kExcluded };

  Inadmissible(Kind kind, const std::string& what)
      : InvalidArgument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// A deterministic construction broke one of its own invariants. Never
// swallowed: it would mean the construction is wrong, not the input.
class ConstructionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An embedded seed permutation failed re-evaluation.
class SeedVerificationError : public std::logic_error {
 public:
  SeedVerificationError(std::string seed, const std::string& what)
      : std::logic_error(what), seed_(std::move(seed)) {}

  const std::string& seed() const noexcept { return seed_; }

 private:
  std::string seed_;
};

// An exhaustive computation ran out of budget before completing. The
// partial state is discarded; callers never see a truncated result.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace permsum
