#pragma once

// The Markov trace on Y_{d,n}(u), the connecting maps delta_s^r between the
// trace rings at d = p^r, truncated towers realizing Y_{infty,n}(u), and the
// p-adic trace computed level by level.

#include <cstdint>
#include <vector>

#include "yh/coeff.hpp"
#include "yh/framed_braids.hpp"
#include "yh/padic.hpp"
#include "yh/yokonuma.hpp"

namespace yh {

// tr: Y_{d,n}(u) -> Q[u^{+-1}][z, x_1, ..., x_{d-1}].
//
// For a basis element t^a g_w on n strands:
//   w(n) = n:       tr = x_{a_n} tr(t^{a'} g_w')              (a', w' on n-1 strands)
//   w = v c_k:      t^a g_w = (t^{a'} g_v) g_{n-1} (t_{n-1}^{a_n} g_{s_{n-2}...s_k})
//                   tr = z tr((t^{a'} g_v)(t_{n-1}^{a_n} g_{s_{n-2}...s_k}))
// with tr(t_1^m) = x_m on one strand.
TracePoly markov_trace(const YElement& x);

// x_i -> x_{i mod p^s} (x_0 = 1), z and u fixed. The modulus of q must be p^r
// with s <= r.
TracePoly delta_map(const TracePoly& q, std::int64_t p, int s);

// (1/p^k) sum_{m=0}^{p^k - 1} t_i^m t_{i+1}^{-m} in Y_{p^r,n}; k <= r.
YElement z_approx(std::int64_t p, int r, int n, int k, int i);

class TowerElement {
public:
  // levels[r-1] lives in Y_{p^r,n}; coherence is checked.
  TowerElement(std::int64_t p, int n, std::vector<YElement> levels);

  std::int64_t prime() const { return p_; }
  int depth() const { return static_cast<int>(levels_.size()); }
  int strands() const { return n_; }
  // Projection onto Y_{p^r,n}.
  const YElement& level(int r) const;
  const std::vector<YElement>& levels() const { return levels_; }

  // phi_s^r(levels[r]) == levels[s] for every r >= s.
  bool is_coherent() const;

  friend bool operator==(const TowerElement&, const TowerElement&) = default;

private:
  std::int64_t p_;
  int n_;
  std::vector<YElement> levels_;
};

TowerElement tower_one(std::int64_t p, int depth, int n);
TowerElement tower_g(std::int64_t p, int depth, int n, int i);
TowerElement tower_g_inverse(std::int64_t p, int depth, int n, int i);
TowerElement tower_e(std::int64_t p, int depth, int n, int i);
// t_i raised to a p-adic exponent; the exponent's precision must be >= depth.
TowerElement tower_t(std::int64_t p, int depth, int n, int i, const PadicApprox& exponent);
// Constant tower of a scalar.
TowerElement tower_scalar(std::int64_t p, int depth, int n, const LaurentU& c);

// Framing exponents may be integers or p-adic values of precision >= depth.
TowerElement tower_from_word(const FramedBraidWord& w, std::int64_t p, int depth);

TowerElement tower_mul(const TowerElement& x, const TowerElement& y);
TowerElement tower_add(const TowerElement& x, const TowerElement& y);
TowerElement tower_sub(const TowerElement& x, const TowerElement& y);

class PadicTraceValue {
public:
  // levels[r-1] has modulus p^r; coherence is checked.
  PadicTraceValue(std::int64_t p, std::vector<TracePoly> levels);

  std::int64_t prime() const { return p_; }
  int depth() const { return static_cast<int>(levels_.size()); }
  const TracePoly& level(int r) const;
  const std::vector<TracePoly>& levels() const { return levels_; }

  bool is_coherent() const;

  friend bool operator==(const PadicTraceValue&, const PadicTraceValue&) = default;

private:
  std::int64_t p_;
  std::vector<TracePoly> levels_;
};

// tau = lim tau_r, truncated at the tower's depth.
PadicTraceValue padic_trace(const TowerElement& x);

// The p-adic indeterminate x_a = (x_{a_1}, x_{a_2}, ...).
PadicTraceValue padic_indeterminate(const PadicApprox& a, int depth);

}  // namespace yh
