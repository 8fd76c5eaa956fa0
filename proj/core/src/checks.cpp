#include "yh/checks.hpp"

#include <algorithm>

#include "yh/random.hpp"
#include "yh/trace.hpp"

namespace yh {

std::vector<RelationCheck> trace_property_suite(const YParams& params, std::uint64_t seed, int samples) {
  const YParams P = YParams::make(params.d, params.n);
  Rng rng(seed);
  std::vector<RelationCheck> out;
  out.push_back({"tr(1) = 1", markov_trace(y_one(P)) == TracePoly(P.d, LaurentU(1))});

  bool cyclic = true;
  bool x_free = true;
  for (int k = 0; k < samples; ++k) {
    const YElement x = random_element(rng, P);
    const YElement y = random_element(rng, P);
    const TracePoly t = markov_trace(x * y);
    if (!(t == markov_trace(y * x))) cyclic = false;
    if (P.d == 1) {
      for (const auto& [m, c] : t.terms())
        if (!m.x.empty()) x_free = false;
    }
  }
  out.push_back({"tr(xy) = tr(yx)", cyclic});

  if (P.n >= 2) {
    const YParams lower = YParams::make(P.d, P.n - 1);
    const YElement top_g = y_g(P, P.n - 1);
    const TracePoly z = TracePoly::z(P.d);
    bool markov = true;
    bool framing = true;
    for (int k = 0; k < samples; ++k) {
      const YElement a = y_embed(random_element(rng, lower), P.n);
      const YElement b = y_embed(random_element(rng, lower), P.n);
      if (!(markov_trace(a * top_g * b) == z * markov_trace(a * b))) markov = false;
      const auto m = rng.uniform(0, P.d - 1);
      if (!(markov_trace(a * y_t(P, P.n, m)) == x_var(P.d, m) * markov_trace(a))) framing = false;
    }
    out.push_back({"tr(A g_top B) = z tr(AB)", markov});
    out.push_back({"tr(A t_top^m) = x_m tr(A)", framing});
  }
  if (P.d == 1) out.push_back({"trace has no x indeterminates at d = 1", x_free});
  return out;
}

std::vector<RelationCheck> commuting_square_suite(std::int64_t p, int depth, int n, std::uint64_t seed, int samples) {
  Rng rng(seed);
  std::vector<RelationCheck> out;
  for (int r = 2; r <= depth; ++r) {
    const YParams high = YParams::make(static_cast<int>(checked_pow(p, r)), n);
    for (int s = 1; s < r; ++s) {
      const std::string tag = " (r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")";
      const YParams low = YParams::make(static_cast<int>(checked_pow(p, s)), n);
      bool e_ok = true;
      for (int i = 1; i < n; ++i)
        if (!(phi_map(y_e(high, i, i + 1), p, s) == y_e(low, i, i + 1))) e_ok = false;
      out.push_back({"phi(e_{p^r,i}) = e_{p^s,i}" + tag, e_ok});

      bool hom = true;
      bool square = true;
      for (int k = 0; k < samples; ++k) {
        const YElement x = random_element(rng, high);
        const YElement y = random_element(rng, high);
        if (!(phi_map(x * y, p, s) == phi_map(x, p, s) * phi_map(y, p, s))) hom = false;
        if (!(delta_map(markov_trace(x), p, s) == markov_trace(phi_map(x, p, s)))) square = false;
      }
      out.push_back({"phi(xy) = phi(x)phi(y)" + tag, hom});
      out.push_back({"delta(tau_r(x)) = tau_s(phi(x))" + tag, square});
    }
  }
  return out;
}

bool all_passed(const std::vector<RelationCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.passed; });
}

}  // namespace yh
