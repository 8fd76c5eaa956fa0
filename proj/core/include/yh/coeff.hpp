#pragma once

// Exact coefficient rings: rationals, Laurent polynomials in u, and the
// trace polynomial ring Q[u, u^-1][z, x_1, ..., x_{d-1}].

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace yh {

class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by intent
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  // Accepts "a" or "a/b" with an optional leading sign.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_one() const { return value_ == 1; }
  Rational abs() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const { return value_.get_str(); }
  const mpq_class& raw() const { return value_; }

private:
  mpq_class value_;
};

// Finite sum of c_k u^k, k in Z. Zero coefficients are never stored.
class LaurentU {
public:
  using Terms = std::map<int, Rational>;

  LaurentU() = default;
  LaurentU(const Rational& c);  // NOLINT: implicit by intent
  LaurentU(long c) : LaurentU(Rational(c)) {}  // NOLINT

  static LaurentU monomial(int exponent, const Rational& c = Rational(1));
  static LaurentU u() { return monomial(1); }
  static LaurentU parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // Coefficient of u^exponent (zero when absent).
  Rational coeff(int exponent) const;

  LaurentU& operator+=(const LaurentU& o);
  LaurentU& operator-=(const LaurentU& o);
  LaurentU& operator*=(const LaurentU& o);
  LaurentU& operator*=(const Rational& c);

  friend LaurentU operator+(LaurentU a, const LaurentU& b) { return a += b; }
  friend LaurentU operator-(LaurentU a, const LaurentU& b) { return a -= b; }
  friend LaurentU operator*(const LaurentU& a, const LaurentU& b);
  LaurentU operator-() const;

  friend bool operator==(const LaurentU& a, const LaurentU& b) = default;

  // Descending powers of u, e.g. "u^2 - 1", "-1/2*u + 1/2", "u^-1".
  std::string str() const;

private:
  void add_term(int exponent, const Rational& c);
  Terms terms_;
};

// z^z_exp * prod x_i^e_i with i in [1, d) and e_i > 0, stored sorted by i.
struct TraceMonomial {
  int z_exp = 0;
  std::vector<std::pair<int, int>> x;

  bool is_one() const { return z_exp == 0 && x.empty(); }
  TraceMonomial operator*(const TraceMonomial& o) const;
  friend bool operator==(const TraceMonomial&, const TraceMonomial&) = default;
  std::string str() const;
};

// Canonical term order: z-exponent descending, then x-exponent list ascending
// lexicographically.
struct TraceMonomialOrder {
  bool operator()(const TraceMonomial& a, const TraceMonomial& b) const;
};

class TracePoly {
public:
  using Terms = std::map<TraceMonomial, LaurentU, TraceMonomialOrder>;

  explicit TracePoly(int d);
  TracePoly(int d, const LaurentU& c);

  static TracePoly z(int d);
  // Inverse of str(): accepts polynomial expressions in u, z and x_i.
  static TracePoly parse(int d, std::string_view text);

  int modulus() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TraceMonomial& m, const LaurentU& c);

  TracePoly& operator+=(const TracePoly& o);
  TracePoly& operator-=(const TracePoly& o);
  TracePoly& operator*=(const LaurentU& c);

  friend TracePoly operator+(TracePoly a, const TracePoly& b) { return a += b; }
  friend TracePoly operator-(TracePoly a, const TracePoly& b) { return a -= b; }
  friend TracePoly operator*(const TracePoly& a, const TracePoly& b);
  friend TracePoly operator*(TracePoly a, const LaurentU& c) { return a *= c; }
  friend TracePoly operator*(const LaurentU& c, TracePoly a) { return a *= c; }
  TracePoly operator-() const;

  friend bool operator==(const TracePoly& a, const TracePoly& b) = default;

  std::string str() const;

private:
  void require_same_modulus(const TracePoly& o) const;
  int d_;
  Terms terms_;
};

// x_{m mod d}; the constant 1 when m is divisible by d.
TracePoly x_var(int d, std::int64_t m);

namespace detail {

// Renders sum c_k * body_k with canonical signs; an empty body stands for the
// unit of the module. Multi-term coefficients are parenthesized.
std::string render_terms(const std::vector<std::pair<const LaurentU*, std::string>>& terms);

}  // namespace detail

// Nonnegative residue of m modulo d.
inline std::int64_t mod_floor(std::int64_t m, std::int64_t d) {
  std::int64_t r = m % d;
  return r < 0 ? r + d : r;
}

}  // namespace yh
