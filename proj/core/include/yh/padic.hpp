#pragma once

// Truncated p-adic integers. A value of precision R is the coherent family
// of residues a_r = sum_{i<r} d_i p^i (r = 1..R), stored through its base-p
// digits so that coherence between levels holds by construction.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace yh {

bool is_prime(std::int64_t p);

// p^e; throws PrecisionError if the result does not fit in 63 bits.
std::int64_t checked_pow(std::int64_t p, int e);

class PadicApprox {
public:
  // Throws ParameterError for a non-prime p, empty digits, or out-of-range digits.
  PadicApprox(std::int64_t p, std::vector<int> digits);

  // The constant sequence (k mod p, k mod p^2, ..., k mod p^R).
  static PadicApprox from_int(std::int64_t k, std::int64_t p, int precision);
  static PadicApprox zero(std::int64_t p, int precision) { return from_int(0, p, precision); }
  // Text format "p^R:d0,d1,...,d_{R-1}".
  static PadicApprox parse(std::string_view text);

  std::int64_t prime() const { return p_; }
  int precision() const { return static_cast<int>(digits_.size()); }
  const std::vector<int>& digits() const { return digits_; }

  // a_r in [0, p^r), 1 <= r <= precision.
  std::int64_t residue(int r) const;

  // True when every digit above `level` vanishes, i.e. the value is the
  // image of a nonnegative integer below p^level.
  bool is_constant_below(int level) const;

  friend bool operator==(const PadicApprox&, const PadicApprox&) = default;

  std::string str() const;

private:
  std::int64_t p_;
  std::vector<int> digits_;
};

// Truncation to precision s (the connecting epimorphism theta_s^R).
PadicApprox theta(const PadicApprox& a, int s);

// Levelwise sum; result precision is the smaller of the two.
PadicApprox padic_add(const PadicApprox& a, const PadicApprox& b);
PadicApprox padic_neg(const PadicApprox& a);
PadicApprox padic_sub(const PadicApprox& a, const PadicApprox& b);

struct Approximant {
  int level;
  PadicApprox value;
};

// Constant sequences converging to a: the k-th entry is the integer a_k
// embedded at a's precision, and agrees with a on levels 1..k.
std::vector<Approximant> approx_sequence(const PadicApprox& a);

}  // namespace yh
