#include "permsum/rational.hpp"

#include <ostream>

#include "permsum/errors.hpp"

namespace permsum {

Rational::Rational(long long num, long long den)
    : num_(static_cast<long>(num)), den_(static_cast<long>(den)) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  normalize();
}

Rational::Rational(mpz_class num, mpz_class den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (sgn(den_) == 0) throw InvalidArgument("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  if (sgn(num_) == 0) den_ = 1;
}

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) {
    auto tail = text.substr(slash + 1);
    ok = !tail.empty() && tail.front() != '-' && tail.front() != '+' &&
         parse_integer(tail, den);
  }
  if (!ok) throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
  if (sgn(den) == 0) throw InvalidArgument("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(std::move(num), std::move(den));
}

long long Rational::to_integer() const {
  if (!is_integer() || !num_.fits_slong_p()) {
    throw InvalidArgument("not a machine integer: " + to_string());
  }
  return num_.get_si();
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::uint64_t residue_mod(const Rational& r, std::uint64_t p) {
  mpz_class mod(static_cast<unsigned long>(p));
  mpz_class num_r, den_r;
  mpz_fdiv_r(num_r.get_mpz_t(), r.num().get_mpz_t(), mod.get_mpz_t());
  mpz_fdiv_r(den_r.get_mpz_t(), r.den().get_mpz_t(), mod.get_mpz_t());
  if (sgn(den_r) == 0) return p;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den_r.get_mpz_t(), mod.get_mpz_t());
  mpz_class out = (num_r * inv) % mod;
  return out.get_ui();
}

}  // namespace permsum

std::size_t std::hash<permsum::Rational>::operator()(const permsum::Rational& r) const noexcept {
  std::size_t h = std::hash<std::string>{}(r.num().get_str(16));
  return h ^ (std::hash<std::string>{}(r.den().get_str(16)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}
