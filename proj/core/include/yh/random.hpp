#pragma once

// Seeded generators for the property suites. Draws use only the raw output
// of std::mt19937_64, so a seed yields the same values on every platform.

#include <cstdint>
#include <random>

#include "yh/coeff.hpp"
#include "yh/framed_braids.hpp"
#include "yh/padic.hpp"
#include "yh/yokonuma.hpp"

namespace yh {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi], up to negligible modulo bias.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (engine_() >> 63) != 0; }

private:
  std::mt19937_64 engine_;
};

// Small nonzero rational with numerator in [-3, 3] and denominator in [1, 3].
Rational random_rational(Rng& rng);
// Up to three terms, u-exponents in [-2, 2].
LaurentU random_laurent(Rng& rng);
TracePoly random_trace_poly(Rng& rng, int d);
PadicApprox random_padic(Rng& rng, std::int64_t p, int precision);
YBasisElt random_basis(Rng& rng, const YParams& params);
// 1..max_terms random basis elements with random Laurent coefficients.
YElement random_element(Rng& rng, const YParams& params, int max_terms = 3);
// Mixed framing/braid letters; framing exponents in [-2d, 2d] (or [-5, 5] if d = 0).
FramedBraidWord random_word(Rng& rng, int n, int max_length, std::int64_t d = 0);

}  // namespace yh
