#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "yh/error.hpp"
#include "yh/symmetric.hpp"

using namespace yh;

namespace {

std::vector<Perm> all_perms(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Bubble-sort length: the number of adjacent swaps that sort w's images.
int bubble_length(const Perm& w) {
  std::vector<int> a = w.images();
  int swaps = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j + 1 < a.size() - i; ++j)
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        ++swaps;
      }
  return swaps;
}

}  // namespace

TEST_CASE("construction and parsing") {
  CHECK(Perm(3).is_identity());
  CHECK(Perm::parse("[3,1,2]").str() == "[3,1,2]");
  CHECK(Perm::parse(" [ 2 , 1 ] ") == Perm::transposition(2, 1));
  CHECK_THROWS_AS(Perm::from_images({1, 1}), ParameterError);
  CHECK_THROWS_AS(Perm::from_images({0, 1}), ParameterError);
  CHECK_THROWS_AS(Perm(0), ParameterError);
  CHECK_THROWS_AS(Perm::transposition(3, 3), ParameterError);
  CHECK_THROWS_AS(Perm::parse("3,1,2"), ParseError);
  CHECK_THROWS_AS(Perm::parse("[1,x]"), ParseError);
  CHECK_THROWS_AS(Perm::parse("[1,1]"), ParseError);
}

TEST_CASE("composition convention") {
  const Perm s1 = Perm::transposition(3, 1), s2 = Perm::transposition(3, 2);
  CHECK(perm_compose(Perm::transposition(2, 1), Perm::transposition(2, 1)).is_identity());
  CHECK(perm_compose(perm_compose(s1, s2), s1) == perm_compose(perm_compose(s2, s1), s2));
  // (s1 s2)(3) = s1(s2(3)) = s1(2) = 1
  CHECK(perm_apply(perm_compose(s1, s2), 3) == 1);
  CHECK(perm_times_s(s2, 1) == perm_compose(s2, s1));
  CHECK_THROWS_AS(perm_compose(s1, Perm(2)), MismatchError);
  CHECK_THROWS_AS(perm_apply(s1, 4), ParameterError);
  for (const Perm& w : all_perms(4)) {
    CHECK(perm_compose(w, perm_inverse(w)).is_identity());
    CHECK(perm_compose(perm_inverse(w), w).is_identity());
  }
}

TEST_CASE("length and descents") {
  CHECK(length(Perm(4)) == 0);
  CHECK(length(Perm::parse("[3,2,1]")) == 3);
  CHECK_THROWS_AS(right_descent(Perm(3), 3), ParameterError);
  for (int n = 2; n <= 4; ++n) {
    for (const Perm& w : all_perms(n)) {
      REQUIRE(length(w) == bubble_length(w));
      REQUIRE(static_cast<int>(reduced_word(w).size()) == length(w));
      for (int i = 1; i < n; ++i) {
        if (w.is_identity()) REQUIRE_FALSE(right_descent(w, i));
        REQUIRE(right_descent(w, i) == (length(perm_times_s(w, i)) < length(w)));
        REQUIRE(right_descent(w, i) == (w(i) > w(i + 1)));
      }
    }
    for (int i = 1; i < n; ++i) CHECK(right_descent(Perm::transposition(n, i), i));
  }
}

TEST_CASE("staircase elements") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      const Perm c = staircase(n, k);
      CHECK(c(k) == n);
      for (int i = 1; i < k; ++i) CHECK(c(i) == i);
      for (int i = k + 1; i <= n; ++i) CHECK(c(i) == i - 1);
      CHECK(length(c) == n - k);
    }
    CHECK(staircase(n, n).is_identity());
  }
  CHECK_THROWS_AS(staircase(3, 0), ParameterError);
}

TEST_CASE("coset decomposition is exhaustive and unique") {
  CHECK(std::get<InSubgroup>(coset_decompose(Perm(3))).restricted == Perm(2));
  const auto top = std::get<CosetSplit>(coset_decompose(Perm::transposition(4, 3)));
  CHECK(top.v == Perm(3));
  CHECK(top.k == 3);
  CHECK_THROWS_AS(coset_decompose(Perm(1)), ParameterError);

  for (int n = 2; n <= 5; ++n) {
    for (const Perm& w : all_perms(n)) {
      const auto dec = coset_decompose(w);
      if (w(n) == n) {
        REQUIRE(std::holds_alternative<InSubgroup>(dec));
        REQUIRE(perm_embed(std::get<InSubgroup>(dec).restricted, n) == w);
        continue;
      }
      const auto& [v, k] = std::get<CosetSplit>(dec);
      REQUIRE(k == perm_inverse(w)(n));
      REQUIRE(perm_compose(perm_embed(v, n), staircase(n, k)) == w);
      REQUIRE(length(w) == length(v) + n - k);
      int matches = 0;
      for (const Perm& v2 : all_perms(n - 1))
        for (int k2 = 1; k2 < n; ++k2)
          if (perm_compose(perm_embed(v2, n), staircase(n, k2)) == w) ++matches;
      REQUIRE(matches == 1);
    }
  }
}

TEST_CASE("canonical reduced words") {
  CHECK(reduced_word(Perm(3)).empty());
  CHECK(reduced_word(Perm::transposition(3, 2)) == std::vector<int>{2});
  const Perm w = Perm::parse("[3,1,2]");
  CHECK(reduced_word(w).size() == 2);
  CHECK(word_to_perm(3, reduced_word(w)) == w);
  for (int n = 1; n <= 5; ++n) {
    for (const Perm& x : all_perms(n)) {
      const auto word = reduced_word(x);
      REQUIRE(word_to_perm(n, word) == x);
      REQUIRE(static_cast<int>(word.size()) == length(x));
      if (n >= 2 && x(n) != n) {
        const auto dec = coset_decompose(x);
        const auto& [v, k] = std::get<CosetSplit>(dec);
        std::vector<int> expected = reduced_word(v);
        for (int i = n - 1; i >= k; --i) expected.push_back(i);
        REQUIRE(word == expected);
      }
    }
  }
}

TEST_CASE("embedding and restriction") {
  const Perm w = Perm::parse("[2,1]");
  CHECK(perm_embed(w, 4) == Perm::parse("[2,1,3,4]"));
  CHECK(perm_restrict(Perm::parse("[2,1,3]")) == w);
  CHECK_THROWS_AS(perm_restrict(Perm::parse("[3,1,2]")), ParameterError);
  CHECK_THROWS_AS(perm_embed(Perm(3), 2), ParameterError);
}
