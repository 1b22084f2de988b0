#include "permsum/functional.hpp"

#include <unordered_set>

#include "permsum/errors.hpp"

namespace permsum {

namespace {

constexpr std::array<std::string_view, 7> kNames = {"dif",    "cycdif", "prod",    "sum",
                                                     "cycsum", "sqdif",  "cycsqdif"};

}  // namespace

std::string_view name(Functional f) { return kNames[static_cast<std::size_t>(f)]; }

std::optional<Functional> parse_functional(std::string_view text) {
  for (Functional f : kAllFunctionals) {
    if (name(f) == text) return f;
  }
  return std::nullopt;
}

bool is_cyclic(Functional f) {
  return f == Functional::kCycDif || f == Functional::kCycSum || f == Functional::kCycSqDif;
}

bool is_antisymmetric(Functional f) {
  return f == Functional::kDif || f == Functional::kCycDif || f == Functional::kSqDif ||
         f == Functional::kCycSqDif;
}

int min_length(Functional f) { return is_cyclic(f) ? 3 : 2; }

long long edge_denominator(Functional f, long long a, long long b) {
  switch (f) {
    case Functional::kDif:
    case Functional::kCycDif:
      return a - b;
    case Functional::kProd:
      return a * b;
    case Functional::kSum:
    case Functional::kCycSum:
      return a + b;
    case Functional::kSqDif:
    case Functional::kCycSqDif:
      return a * a - b * b;
  }
  return 0;
}

Rational edge_term(Functional f, long long a, long long b) {
  return Rational(1, edge_denominator(f, a, b));
}

Rational evaluate(Functional f, const Permutation& p) {
  if (p.size() < min_length(f)) {
    throw InvalidArgument(std::string(name(f)) + " needs n >= " + std::to_string(min_length(f)) +
                          ", got n = " + std::to_string(p.size()));
  }
  auto e = p.entries();
  Rational total;
  for (std::size_t k = 0; k + 1 < e.size(); ++k) total += edge_term(f, e[k], e[k + 1]);
  if (is_cyclic(f)) total += edge_term(f, e.back(), e.front());
  return total;
}

Rational evaluate_prefix(Functional f, std::span<const int> prefix) {
  if (prefix.empty()) throw InvalidArgument("empty prefix");
  std::unordered_set<int> seen;
  for (int v : prefix) {
    if (v < 1) throw InvalidArgument("prefix entry " + std::to_string(v) + " is not positive");
    if (!seen.insert(v).second) throw InvalidArgument("duplicate prefix entry " + std::to_string(v));
  }
  Rational total;
  for (std::size_t k = 0; k + 1 < prefix.size(); ++k) total += edge_term(f, prefix[k], prefix[k + 1]);
  return total;
}

Witness::Witness(Permutation perm, Functional f)
    : perm_(std::move(perm)), functional_(f), value_(evaluate(f, perm_)) {}

Witness::Witness(Permutation perm, Functional f, const Rational& claimed) : Witness(std::move(perm), f) {
  if (value_ != claimed) {
    throw InvalidArgument(std::string(name(f)) + "(" + to_string(perm_) + ") = " +
                          value_.to_string() + ", not " + claimed.to_string());
  }
}

}  // namespace permsum
