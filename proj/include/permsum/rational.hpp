#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace permsum {

// Exact fraction over arbitrary-precision integers. Always stored in lowest
// terms with a positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(static_cast<long>(value)), den_(1) {}  // NOLINT
  Rational(long long num, long long den);
  Rational(mpz_class num, mpz_class den);

  static Rational unit_fraction(long long den) { return Rational(1, den); }

  // Accepts "a", "-a", "a/b", "-a/b". Throws InvalidArgument.
  static Rational parse(std::string_view text);

  const mpz_class& num() const noexcept { return num_; }
  const mpz_class& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return sgn(num_) == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return sgn(num_); }

  // Value as a signed 64-bit integer; throws unless is_integer() and it fits.
  long long to_integer() const;

  // Approximation for reporting and heuristics only.
  double to_double() const { return mpq_class(num_, den_).get_d(); }

  // "num/den", or bare "num" when den == 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational operator-() const;

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void normalize();

  mpz_class num_;
  mpz_class den_;
};

// Residue of r modulo the prime p, or nullopt-like sentinel p when the
// denominator is divisible by p.
std::uint64_t residue_mod(const Rational& r, std::uint64_t p);

}  // namespace permsum

template <>
struct std::hash<permsum::Rational> {
  std::size_t operator()(const permsum::Rational& r) const noexcept;
};
