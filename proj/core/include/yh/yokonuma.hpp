#pragma once

// The Yokonuma-Hecke algebra Y_{d,n}(u) in normal form.
//
// Elements are finite combinations of basis elements t_1^{a_1}...t_n^{a_n} g_w
// (a_i in Z/d, w in S_n) with coefficients in Q[u, u^-1]. Products are
// computed by right multiplication: framings of the right factor are carried
// through g_w (g_w t_j = t_{w(j)} g_w), then the canonical reduced word of
// its permutation is folded in one generator at a time. When g_i lowers the
// length the quadratic relation g_i^2 = 1 + (u-1) e_i (1 - g_i) gives
//
//   g_w g_i = g_{w s_i} + (u-1) (g_{w s_i} - g_w) e_i,
//
// so the ideal of quadratic relations is never materialized.
//
// The basis is taken to be linearly independent (dimension d^n n!); the
// tests certify internal consistency (associativity, relations), not
// faithfulness.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "yh/coeff.hpp"
#include "yh/framed_braids.hpp"
#include "yh/symmetric.hpp"

namespace yh {

struct YParams {
  int d = 1;
  int n = 1;

  // Throws ParameterError unless d >= 1 and n >= 1.
  static YParams make(int d, int n);
  friend bool operator==(const YParams&, const YParams&) = default;
};

struct YBasisElt {
  Perm perm;
  std::vector<int> framing;  // a_i in [0, d)

  static YBasisElt identity(const YParams& params);
  friend bool operator==(const YBasisElt&, const YBasisElt&) = default;
  // (permutation one-line notation, framing vector)
  friend auto operator<=>(const YBasisElt&, const YBasisElt&) = default;

  // "t1^2*t3*g[2,1,3]"; "1" for the identity basis element.
  std::string str() const;
};

class YElement {
public:
  using Terms = std::map<YBasisElt, LaurentU>;

  explicit YElement(const YParams& params);
  YElement(const YParams& params, const YBasisElt& b, const LaurentU& c = LaurentU(1));

  // Inverse of str(). Atoms: u, t<i>, g<i>, g[w1,...,wn], and 1; products are
  // algebra products evaluated left to right.
  static YElement parse(const YParams& params, std::string_view text);

  const YParams& params() const { return params_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const YBasisElt& b, const LaurentU& c);

  YElement& operator+=(const YElement& o);
  YElement& operator-=(const YElement& o);
  YElement& operator*=(const LaurentU& c);

  friend YElement operator+(YElement a, const YElement& b) { return a += b; }
  friend YElement operator-(YElement a, const YElement& b) { return a -= b; }
  friend YElement operator*(YElement a, const LaurentU& c) { return a *= c; }
  friend YElement operator*(const LaurentU& c, YElement a) { return a *= c; }
  // Algebra product (y_mul).
  friend YElement operator*(const YElement& a, const YElement& b);
  YElement operator-() const;

  friend bool operator==(const YElement&, const YElement&) = default;

  std::string str() const;

private:
  void require_same_params(const YElement& o) const;
  YParams params_;
  Terms terms_;
};

YElement y_one(const YParams& params);
// t_i^m
YElement y_t(const YParams& params, int i, std::int64_t m);
YElement y_g(const YParams& params, int i);
YElement y_g_inverse(const YParams& params, int i);
// e_{d,i,j} = (1/d) sum_{m<d} t_i^m t_j^{-m}; requires i != j.
YElement y_e(const YParams& params, int i, int j);
// g_w for an arbitrary permutation.
YElement y_perm(const YParams& params, const Perm& w);

// Basis element for (t^a g_w) * t_j^m.
YBasisElt mul_basis_t(const YBasisElt& b, int j, std::int64_t m, int d);
// (t^a g_w) * g_i expanded in the basis.
YElement mul_basis_g(const YParams& params, const YBasisElt& b, int i);

YElement y_mul(const YElement& x, const YElement& y);

// Quotient map C F_{d,n} -> Y_{d,n}(u) applied to a word. p-adic framing
// exponents are admitted when d = p^r with r within their precision.
YElement y_eval_word(const FramedBraidWord& w, const YParams& params);

// phi_s^r: Y_{p^r,n} -> Y_{p^s,n}, reducing framings mod p^s.
YElement phi_map(const YElement& x, std::int64_t p, int s);

// Inclusion Y_{d,m} -> Y_{d,n}, m <= n, fixing the extra strands.
YElement y_embed(const YElement& x, int n);

// r with d = p^r; throws MismatchError if d is not a power of p.
int level_of(std::int64_t d, std::int64_t p);

struct RelationCheck {
  std::string name;
  bool passed;
};

// Verifies the defining presentation, idempotency of every e_{d,i,j}, the
// commutation rules between g_i^{+-1} and e_{d,j}, and the framing swap under
// e_{d,i}, each as an exact identity in Y_{d,n}. At d = 1 it also checks the
// Hecke relation (g_i + u)(g_i - 1) = 0.
std::vector<RelationCheck> relation_suite(const YParams& params);

}  // namespace yh
