#include "yh/random.hpp"

namespace yh {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational random_rational(Rng& rng) {
  std::int64_t num = 0;
  while (num == 0) num = rng.uniform(-3, 3);
  return Rational(num, rng.uniform(1, 3));
}

LaurentU random_laurent(Rng& rng) {
  LaurentU out;
  const auto terms = rng.uniform(1, 3);
  for (std::int64_t k = 0; k < terms; ++k) {
    out += LaurentU::monomial(static_cast<int>(rng.uniform(-2, 2)), random_rational(rng));
  }
  return out;
}

TracePoly random_trace_poly(Rng& rng, int d) {
  TracePoly out(d);
  const auto terms = rng.uniform(0, 3);
  for (std::int64_t k = 0; k < terms; ++k) {
    TracePoly term = TracePoly(d, random_laurent(rng));
    const auto zs = rng.uniform(0, 2);
    for (std::int64_t j = 0; j < zs; ++j) term = term * TracePoly::z(d);
    const auto xs = rng.uniform(0, 2);
    for (std::int64_t j = 0; j < xs; ++j) term = term * x_var(d, rng.uniform(0, d - 1));
    out += term;
  }
  return out;
}

PadicApprox random_padic(Rng& rng, std::int64_t p, int precision) {
  std::vector<int> digits(precision);
  for (int& d : digits) d = static_cast<int>(rng.uniform(0, p - 1));
  return PadicApprox(p, std::move(digits));
}

YBasisElt random_basis(Rng& rng, const YParams& params) {
  std::vector<int> images(params.n);
  for (int i = 0; i < params.n; ++i) images[i] = i + 1;
  for (int i = params.n - 1; i > 0; --i) std::swap(images[i], images[rng.uniform(0, i)]);
  YBasisElt b{Perm::from_images(std::move(images)), std::vector<int>(params.n)};
  for (int& a : b.framing) a = static_cast<int>(rng.uniform(0, params.d - 1));
  return b;
}

YElement random_element(Rng& rng, const YParams& params, int max_terms) {
  YElement out(params);
  while (out.is_zero()) {
    const auto terms = rng.uniform(1, max_terms);
    for (std::int64_t k = 0; k < terms; ++k) out.add_term(random_basis(rng, params), random_laurent(rng));
  }
  return out;
}

FramedBraidWord random_word(Rng& rng, int n, int max_length, std::int64_t d) {
  const std::int64_t bound = d == 0 ? 5 : 2 * d;
  std::vector<Letter> letters;
  const auto length = rng.uniform(0, max_length);
  for (std::int64_t k = 0; k < length; ++k) {
    if (n == 1 || rng.coin()) {
      letters.emplace_back(FramingLetter{static_cast<int>(rng.uniform(1, n)), rng.uniform(-bound, bound)});
    } else {
      letters.emplace_back(BraidLetter{static_cast<int>(rng.uniform(1, n - 1)), rng.coin() ? 1 : -1});
    }
  }
  return FramedBraidWord(n, std::move(letters));
}

}  // namespace yh
