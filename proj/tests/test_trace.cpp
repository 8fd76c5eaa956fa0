#include <doctest.h>

#include "yh/checks.hpp"
#include "yh/error.hpp"
#include "yh/random.hpp"
#include "yh/trace.hpp"

using namespace yh;

namespace {

const LaurentU u = LaurentU::u();

// (1/q) sum_{m<q} x_m x_{-m} in the trace ring of modulus d.
TracePoly e_value(int d, std::int64_t q) {
  TracePoly sum(d);
  for (std::int64_t m = 0; m < q; ++m) sum += x_var(d, m) * x_var(d, -m);
  return sum * LaurentU(Rational(1, static_cast<long>(q)));
}

}  // namespace

TEST_CASE("closed forms") {
  for (int d : {1, 2, 3, 4, 9}) {
    for (int n = 1; n <= 4; ++n) {
      const YParams P = YParams::make(d, n);
      const TracePoly one(d, LaurentU(1));
      const TracePoly z = TracePoly::z(d);
      CHECK(markov_trace(y_one(P)) == one);
      for (int i = 1; i < n; ++i) {
        const YElement g = y_g(P, i), e = y_e(P, i, i + 1);
        CHECK(markov_trace(g) == z);
        CHECK(markov_trace(e * g) == z);
        CHECK(markov_trace(e) == e_value(d, d));
        CHECK(markov_trace(g * g) == one - (u - 1) * z + (u - 1) * e_value(d, d));
        const LaurentU w = LaurentU::monomial(-1) - 1;
        CHECK(markov_trace(y_g_inverse(P, i)) == z + w * (z - e_value(d, d)));
      }
    }
    for (int n = 1; n <= 3; ++n) {
      const YParams P = YParams::make(d, n);
      std::vector<int> m(n, 0);
      // Odometer over framing vectors with entries in [0, min(d, 3)).
      const int top = std::min(d, 3);
      while (true) {
        YElement x = y_one(P);
        TracePoly expected(d, LaurentU(1));
        for (int i = 0; i < n; ++i) {
          x = x * y_t(P, i + 1, m[i]);
          expected = expected * x_var(d, m[i]);
        }
        REQUIRE(markov_trace(x) == expected);
        int pos = 0;
        while (pos < n && ++m[pos] == top) m[pos++] = 0;
        if (pos == n) break;
      }
    }
  }
  CHECK(markov_trace(y_e(YParams::make(2, 2), 1, 2)).str() == "1/2 + 1/2*x_1^2");
  CHECK(markov_trace(y_g(YParams::make(2, 2), 1) * y_g(YParams::make(2, 2), 1)).str() ==
        "(-u + 1)*z + (1/2*u + 1/2) + (1/2*u - 1/2)*x_1^2");
  CHECK(markov_trace(y_t(YParams::make(5, 1), 1, -2)) == TracePoly::parse(5, "x_3"));
  CHECK(markov_trace(YElement(YParams::make(3, 2))).is_zero());
}

TEST_CASE("trace properties") {
  for (auto [d, n] : {std::pair{1, 3}, {2, 2}, {2, 3}, {3, 3}}) {
    for (const auto& c : trace_property_suite(YParams::make(d, n), 7, 60)) {
      INFO("d=" << d << " n=" << n << ": " << c.name);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("hecke collapse of the trace") {
  // At d = 1 the trace is the Ocneanu trace: tr(g_w) for the longest element of S_3.
  const YParams P = YParams::make(1, 3);
  const TracePoly z = TracePoly::z(1);
  const TracePoly one(1, LaurentU(1));
  const YElement g1 = y_g(P, 1), g2 = y_g(P, 2);
  const TracePoly tg1sq = markov_trace(g1 * g1);
  CHECK(tg1sq == u * one - (u - 1) * z);
  // tr(g1 g2 g1) = z tr(g1 g1) using g2 as the top generator.
  CHECK(markov_trace(g1 * g2 * g1) == z * tg1sq);
  for (const auto& [m, c] : markov_trace(g1 * g1 * g2 * g1 * g2).terms()) CHECK(m.x.empty());
}

TEST_CASE("connecting maps") {
  const TracePoly q = TracePoly::parse(4, "x_1 + x_2 + x_3 + z*x_2*x_3");
  CHECK(delta_map(q, 2, 1) == TracePoly::parse(2, "2*x_1 + 1 + z*x_1"));
  CHECK(delta_map(q, 2, 2) == q);
  CHECK(delta_map(q, 2, 0) == TracePoly::parse(1, "3 + z"));
  CHECK_THROWS_AS(delta_map(q, 2, 3), PrecisionError);
  CHECK_THROWS_AS(delta_map(q, 3, 1), MismatchError);
  Rng rng(51);
  for (int k = 0; k < 200; ++k) {
    const TracePoly a = random_trace_poly(rng, 27), b = random_trace_poly(rng, 27);
    const int s = static_cast<int>(rng.uniform(0, 3));
    REQUIRE(delta_map(a * b, 3, s) == delta_map(a, 3, s) * delta_map(b, 3, s));
    REQUIRE(delta_map(a + b, 3, s) == delta_map(a, 3, s) + delta_map(b, 3, s));
  }
}

TEST_CASE("commuting square") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& c : commuting_square_suite(2, 3, n, 9, 40)) {
      INFO("n=" << n << ": " << c.name);
      CHECK(c.passed);
    }
  for (const auto& c : commuting_square_suite(3, 2, 2, 10, 40)) CHECK(c.passed);
}

TEST_CASE("averaged framing elements") {
  for (std::int64_t p : {2, 3}) {
    for (int r = 1; r <= 2; ++r) {
      const int d = static_cast<int>(checked_pow(p, r));
      const YParams P = YParams::make(d, 3);
      CHECK(z_approx(p, r, 3, r, 1) == y_e(P, 1, 2));
      CHECK(z_approx(p, r, 3, 0, 2) == y_one(P));
      for (int k = 0; k <= r; ++k)
        for (int i = 1; i <= 2; ++i) CHECK(markov_trace(z_approx(p, r, 3, k, i)) == e_value(d, checked_pow(p, k)));
    }
  }
  CHECK_THROWS_AS(z_approx(2, 1, 2, 2, 1), PrecisionError);
  CHECK_THROWS_AS(z_approx(2, 1, 2, 1, 2), ParameterError);
}

TEST_CASE("towers") {
  const TowerElement one = tower_one(2, 3, 2);
  CHECK(one.depth() == 3);
  CHECK(one.level(2) == y_one(YParams::make(4, 2)));
  CHECK(tower_from_word(FramedBraidWord(2), 2, 3) == one);
  CHECK_THROWS_AS(one.level(4), PrecisionError);
  CHECK_THROWS_AS(tower_one(2, 0, 2), ParameterError);
  CHECK_THROWS_AS(tower_one(4, 2, 2), ParameterError);

  // Incoherent levels are rejected.
  std::vector<YElement> bad{y_one(YParams::make(2, 2)), y_t(YParams::make(4, 2), 1, 1)};
  CHECK_THROWS_AS(TowerElement(2, 2, bad), MismatchError);
  std::vector<YElement> wrong_modulus{y_one(YParams::make(3, 2))};
  CHECK_THROWS_AS(TowerElement(2, 2, wrong_modulus), MismatchError);
  CHECK_THROWS_AS(tower_mul(one, tower_one(2, 2, 2)), MismatchError);

  const auto w = FramedBraidWord::parse(2, "f1^{3^3:1,1,1} s1");
  const TowerElement b = tower_from_word(w, 3, 3);
  CHECK(b.is_coherent());
  for (int r = 1; r <= 3; ++r) {
    const YParams P = YParams::make(static_cast<int>(checked_pow(3, r)), 2);
    CHECK(b.level(r) == y_t(P, 1, PadicApprox(3, {1, 1, 1}).residue(r)) * y_g(P, 1));
  }
  CHECK_THROWS_AS(tower_from_word(w, 3, 4), PrecisionError);
  CHECK_THROWS_AS(tower_from_word(w, 2, 1), MismatchError);
  CHECK_THROWS_AS(tower_t(3, 3, 2, 1, PadicApprox(3, {1, 1})), PrecisionError);

  const auto c = tower_from_word(FramedBraidWord::parse(2, "f2^5 s1^-1"), 2, 3);
  const YElement classical = y_eval_word(FramedBraidWord::parse(2, "f2^5 s1^-1"), YParams::make(8, 2));
  for (int s = 1; s <= 3; ++s) CHECK(c.level(s) == phi_map(classical, 2, s));

  for (int i = 1; i <= 2; ++i) {
    const auto g = tower_g(2, 3, 3, i), e = tower_e(2, 3, 3, i), o = tower_one(2, 3, 3);
    const auto um1 = tower_scalar(2, 3, 3, u - 1);
    CHECK(tower_mul(g, g) == tower_add(o, tower_mul(um1, tower_mul(e, tower_sub(o, g)))));
    CHECK(tower_mul(g, tower_g_inverse(2, 3, 3, i)) == o);
    CHECK(tower_mul(e, g) == tower_mul(g, e));
    CHECK(tower_mul(e, e) == e);
  }

  Rng rng(52);
  TowerElement acc = tower_one(3, 2, 2);
  for (int k = 0; k < 100; ++k) {
    acc = tower_mul(acc, tower_from_word(random_word(rng, 2, 3), 3, 2));
    REQUIRE(acc.is_coherent());
  }
}

TEST_CASE("p-adic trace") {
  const PadicApprox a(3, {1, 1, 1});
  const PadicTraceValue tau = padic_trace(tower_t(3, 3, 1, 1, a));
  CHECK(tau == padic_indeterminate(a, 3));
  CHECK(tau.level(1) == x_var(3, 1));
  CHECK(tau.level(2) == x_var(9, 4));
  CHECK(tau.level(3) == x_var(27, 13));
  CHECK(tau.is_coherent());
  CHECK_THROWS_AS(tau.level(0), PrecisionError);

  for (int i = 1; i <= 2; ++i) {
    const PadicTraceValue eg = padic_trace(tower_mul(tower_e(3, 3, 3, i), tower_g(3, 3, 3, i)));
    const PadicTraceValue e = padic_trace(tower_e(3, 3, 3, i));
    for (int r = 1; r <= 3; ++r) {
      const int d = static_cast<int>(checked_pow(3, r));
      CHECK(eg.level(r) == TracePoly::z(d));
      CHECK(e.level(r) == e_value(d, d));
    }
  }

  std::vector<TracePoly> incoherent{x_var(2, 1), x_var(4, 2)};
  CHECK_THROWS_AS(PadicTraceValue(2, incoherent), MismatchError);
  std::vector<TracePoly> wrong{x_var(3, 1)};
  CHECK_THROWS_AS(PadicTraceValue(2, wrong), MismatchError);
  CHECK_THROWS_AS(padic_indeterminate(a, 4), PrecisionError);
}
