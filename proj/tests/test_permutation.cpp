#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "permsum/errors.hpp"
#include "permsum/functional.hpp"
#include "permsum/permutation.hpp"

using namespace permsum;

namespace {

Permutation P(std::vector<int> e) { return Permutation(std::move(e)); }

}  // namespace

TEST_CASE("validate accepts bijections and keeps order") {
  std::vector<int> raw{1, 4, 2, 5, 3, 6};
  Permutation p = validate(raw);
  CHECK(p.size() == 6);
  CHECK(std::equal(raw.begin(), raw.end(), p.entries().begin()));
  CHECK(validate(std::vector<int>{1}).size() == 1);
  CHECK(validate(std::vector<int>{2, 1}).size() == 2);
}

TEST_CASE("validate rejects non-bijections") {
  CHECK_THROWS_AS(validate(std::vector<int>{1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(validate(std::vector<int>{}), InvalidArgument);
  CHECK_THROWS_AS(validate(std::vector<int>{0, 1}), InvalidArgument);
  CHECK_THROWS_AS(validate(std::vector<int>{1, 3}), InvalidArgument);
}

TEST_CASE("textual form") {
  CHECK(parse_permutation("1,4,2,5,3,6") == P({1, 4, 2, 5, 3, 6}));
  CHECK(parse_permutation(" 1, 4 ,2,5 , 3,6\n") == P({1, 4, 2, 5, 3, 6}));
  CHECK(to_string(P({2, 1, 3})) == "2,1,3");
  CHECK_THROWS_AS(parse_permutation(""), InvalidArgument);
  CHECK_THROWS_AS(parse_permutation("1,,2"), InvalidArgument);
  CHECK_THROWS_AS(parse_permutation("1,2,"), InvalidArgument);
  CHECK_THROWS_AS(parse_permutation("1,a"), InvalidArgument);
  CHECK_THROWS_AS(parse_permutation("1,2,2"), InvalidArgument);
}

TEST_CASE("1-based access") {
  Permutation p = P({3, 1, 2});
  CHECK(p.at(1) == 3);
  CHECK(p.at(3) == 2);
  CHECK_THROWS_AS(p.at(0), InvalidArgument);
  CHECK_THROWS_AS(p.at(4), InvalidArgument);
}

TEST_CASE("reverse") {
  CHECK(reverse(P({1, 3, 2, 4})) == P({4, 2, 3, 1}));
  CHECK(reverse(P({1})) == P({1}));
  CHECK(reverse(P({2, 1, 4, 5, 9, 3, 7, 6, 8})) == P({8, 6, 7, 3, 9, 5, 4, 1, 2}));
}

TEST_CASE("complement") {
  CHECK(complement(P({1, 2, 3})) == P({3, 2, 1}));
  CHECK(complement(P({1, 3, 2, 4})) == P({4, 2, 3, 1}));
  CHECK(complement(P({2, 1})) == P({1, 2}));
}

TEST_CASE("link") {
  CHECK(link(P({1, 4, 2, 5, 3, 6}), P({1, 3, 2, 4})) == P({1, 4, 2, 5, 3, 6, 8, 7, 9}));
  CHECK(link(P({1}), P({1, 3, 2, 4})) == P({1, 3, 2, 4}));

  // tau does not end in its maximum, so neither does the link: it ends in
  // s - 1 + tau(t) = 3 + 7.
  Permutation sigma = P({1, 3, 2, 4});
  Permutation tau = P({1, 2, 4, 8, 6, 5, 3, 7});
  Permutation rho = link(sigma, tau);
  CHECK(rho == P({1, 3, 2, 4, 5, 7, 11, 9, 8, 6, 10}));
  CHECK(rho.back() == 10);
  CHECK(evaluate(Functional::kDif, rho) == evaluate(Functional::kDif, sigma) + evaluate(Functional::kDif, tau));

  CHECK_THROWS_AS(link(P({2, 1}), P({1, 2})), InvalidArgument);
  CHECK_THROWS_AS(link(P({1, 2}), P({2, 1})), InvalidArgument);
}

TEST_CASE("insert_letter") {
  CHECK(insert_letter(P({6, 4, 1, 2, 7, 5, 3, 8}), 4) == P({6, 4, 1, 2, 9, 7, 5, 3, 8}));
  CHECK(insert_letter(P({6, 4, 1, 2, 9, 7, 5, 3, 8}), 1) == P({6, 10, 4, 1, 2, 9, 7, 5, 3, 8}));
  CHECK(insert_letter(P({1, 2}), 1) == P({1, 3, 2}));
  CHECK_THROWS_AS(insert_letter(P({1, 2}), 0), InvalidArgument);
  CHECK_THROWS_AS(insert_letter(P({1, 2}), 2), InvalidArgument);
  CHECK_THROWS_AS(insert_letter(P({1}), 1), InvalidArgument);
}

TEST_CASE("shift_reverse_concat") {
  Permutation rho = shift_reverse_concat(P({1, 3, 2, 4, 6, 5, 7}), P({1, 2, 4, 8, 6, 5, 3, 7}));
  CHECK(rho == P({1, 3, 2, 4, 6, 5, 7, 14, 10, 12, 13, 15, 11, 9, 8}));
  CHECK(rho.back() == 7 + 1);
  CHECK(shift_reverse_concat(P({1}), P({1, 2})) == P({1, 3, 2}));
  CHECK_THROWS_AS(shift_reverse_concat(P({1, 2}), P({1, 2})), InvalidArgument);
}

TEST_CASE("shift_reverse_concat ends in k + tau(1) for every small input") {
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> s(static_cast<std::size_t>(k)), t(static_cast<std::size_t>(k + 1));
    std::iota(s.begin(), s.end(), 1);
    std::iota(t.begin(), t.end(), 1);
    do {
      Permutation rho = shift_reverse_concat(P(s), P(t));
      CHECK(rho.size() == 2 * k + 1);
      CHECK(rho.back() == k + t.front());
    } while (std::next_permutation(t.begin(), t.end()));
  }
}

TEST_CASE("inserting n keeps prod exactly when the neighbours sum to n") {
  for (int m = 2; m <= 7; ++m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    const int n = m + 1;
    do {
      Permutation sigma(v);
      const Rational before = evaluate(Functional::kProd, sigma);
      for (int j = 1; j <= n - 2; ++j) {
        const bool same = evaluate(Functional::kProd, insert_letter(sigma, j)) == before;
        const bool sums = sigma.at(j) + sigma.at(j + 1) == n;
        CHECK(same == sums);
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
}
