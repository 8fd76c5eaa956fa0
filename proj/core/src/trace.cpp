#include "yh/trace.hpp"

#include <future>
#include <map>

#include "yh/error.hpp"

namespace yh {

namespace {

class TraceEvaluator {
public:
  explicit TraceEvaluator(int d) : d_(d) {}

  TracePoly of(const YElement& x) {
    TracePoly out(d_);
    for (const auto& [b, c] : x.terms()) out += basis(b) * c;
    return out;
  }

  const TracePoly& basis(const YBasisElt& b) {
    if (auto it = cache_.find(b); it != cache_.end()) return it->second;
    TracePoly value = compute(b);
    return cache_.emplace(b, std::move(value)).first->second;
  }

private:
  TracePoly compute(const YBasisElt& b) {
    const int n = b.perm.size();
    if (n == 1) return x_var(d_, b.framing[0]);
    const std::vector<int> lower_framing(b.framing.begin(), b.framing.end() - 1);
    const int top = b.framing.back();
    const auto dec = coset_decompose(b.perm);
    if (const auto* in = std::get_if<InSubgroup>(&dec)) {
      return x_var(d_, top) * basis(YBasisElt{in->restricted, lower_framing});
    }
    const auto& split = std::get<CosetSplit>(dec);
    const YParams lower = YParams::make(d_, n - 1);
    const YElement a(lower, YBasisElt{split.v, lower_framing});
    YBasisElt right{staircase(n - 1, split.k), std::vector<int>(n - 1, 0)};
    right.framing[n - 2] = top;
    const YElement product = y_mul(a, YElement(lower, right));
    return TracePoly::z(d_) * of(product);
  }

  int d_;
  std::map<YBasisElt, TracePoly> cache_;
};

void check_depth(int depth) {
  if (depth < 1) throw ParameterError("tower depth must be >= 1");
}

template <class F>
auto per_level(int depth, F&& make) {
  using T = decltype(make(1));
  std::vector<std::future<T>> pending;
  pending.reserve(depth);
  for (int r = 1; r <= depth; ++r) pending.push_back(std::async(std::launch::async, make, r));
  std::vector<T> out;
  out.reserve(depth);
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

YParams level_params(std::int64_t p, int r, int n) {
  return YParams::make(static_cast<int>(checked_pow(p, r)), n);
}

}  // namespace

TracePoly markov_trace(const YElement& x) { return TraceEvaluator(x.params().d).of(x); }

TracePoly delta_map(const TracePoly& q, std::int64_t p, int s) {
  const int r = level_of(q.modulus(), p);
  if (s < 0 || s > r) {
    throw PrecisionError("delta_map needs 0 <= s <= r (s=" + std::to_string(s) + ", r=" + std::to_string(r) + ")");
  }
  const auto target = static_cast<int>(checked_pow(p, s));
  TracePoly out(target);
  for (const auto& [m, c] : q.terms()) {
    TraceMonomial image{m.z_exp, {}};
    for (const auto& [i, e] : m.x) {
      const int j = i % target;
      if (j == 0) continue;
      image = image * TraceMonomial{0, {{j, e}}};
    }
    out.add_term(image, c);
  }
  return out;
}

YElement z_approx(std::int64_t p, int r, int n, int k, int i) {
  if (k < 0 || k > r) throw PrecisionError("z_approx needs 0 <= k <= r");
  const YParams params = level_params(p, r, n);
  if (i < 1 || i >= n) throw ParameterError("z_approx index outside 1..n-1");
  const std::int64_t count = checked_pow(p, k);
  YElement out(params);
  const LaurentU c(Rational(1, count));
  for (std::int64_t m = 0; m < count; ++m) {
    YBasisElt b = YBasisElt::identity(params);
    b.framing[i - 1] = static_cast<int>(mod_floor(m, params.d));
    b.framing[i] = static_cast<int>(mod_floor(-m, params.d));
    out.add_term(b, c);
  }
  return out;
}

// ---------------------------------------------------------------- towers

TowerElement::TowerElement(std::int64_t p, int n, std::vector<YElement> levels)
    : p_(p), n_(n), levels_(std::move(levels)) {
  check_depth(depth());
  for (int r = 1; r <= depth(); ++r) {
    const auto& params = levels_[r - 1].params();
    if (params.n != n_ || params.d != checked_pow(p_, r)) {
      throw MismatchError("tower level " + std::to_string(r) + " is not in Y_{p^r,n}");
    }
  }
  if (!is_coherent()) throw MismatchError("tower levels are not coherent under phi_s^r");
}

const YElement& TowerElement::level(int r) const {
  if (r < 1 || r > depth()) throw PrecisionError("tower level " + std::to_string(r) + " outside 1.." + std::to_string(depth()));
  return levels_[r - 1];
}

bool TowerElement::is_coherent() const {
  // phi is transitive, so adjacent levels suffice.
  for (int r = 2; r <= depth(); ++r) {
    if (!(phi_map(levels_[r - 1], p_, r - 1) == levels_[r - 2])) return false;
  }
  return true;
}

TowerElement tower_one(std::int64_t p, int depth, int n) {
  check_depth(depth);
  return TowerElement(p, n, per_level(depth, [&](int r) { return y_one(level_params(p, r, n)); }));
}

TowerElement tower_g(std::int64_t p, int depth, int n, int i) {
  check_depth(depth);
  return TowerElement(p, n, per_level(depth, [&](int r) { return y_g(level_params(p, r, n), i); }));
}

TowerElement tower_g_inverse(std::int64_t p, int depth, int n, int i) {
  check_depth(depth);
  return TowerElement(p, n, per_level(depth, [&](int r) { return y_g_inverse(level_params(p, r, n), i); }));
}

TowerElement tower_e(std::int64_t p, int depth, int n, int i) {
  check_depth(depth);
  return TowerElement(p, n, per_level(depth, [&](int r) { return y_e(level_params(p, r, n), i, i + 1); }));
}

TowerElement tower_t(std::int64_t p, int depth, int n, int i, const PadicApprox& exponent) {
  check_depth(depth);
  if (exponent.prime() != p) throw MismatchError("p-adic exponent over a different prime");
  if (exponent.precision() < depth) throw PrecisionError("p-adic exponent precision below tower depth");
  return TowerElement(p, n, per_level(depth, [&](int r) {
    return y_t(level_params(p, r, n), i, exponent.residue(r));
  }));
}

TowerElement tower_scalar(std::int64_t p, int depth, int n, const LaurentU& c) {
  check_depth(depth);
  return TowerElement(p, n, per_level(depth, [&](int r) { return y_one(level_params(p, r, n)) * c; }));
}

TowerElement tower_from_word(const FramedBraidWord& w, std::int64_t p, int depth) {
  check_depth(depth);
  if (!is_prime(p)) throw ParameterError("tower prime " + std::to_string(p) + " is not prime");
  for (const auto& letter : w.letters()) {
    const auto* f = std::get_if<FramingLetter>(&letter);
    if (!f) continue;
    if (const auto* a = std::get_if<PadicApprox>(&f->exponent)) {
      if (a->prime() != p) throw MismatchError("p-adic framing over a different prime");
      if (a->precision() < depth) {
        throw PrecisionError("p-adic framing precision " + std::to_string(a->precision()) + " below tower depth " +
                             std::to_string(depth));
      }
    }
  }
  return TowerElement(p, w.strands(), per_level(depth, [&](int r) {
    return y_eval_word(w, level_params(p, r, w.strands()));
  }));
}

namespace {

void check_compatible(const TowerElement& x, const TowerElement& y) {
  if (x.prime() != y.prime() || x.depth() != y.depth() || x.strands() != y.strands()) {
    throw MismatchError("tower elements with different (p, R, n)");
  }
}

}  // namespace

TowerElement tower_mul(const TowerElement& x, const TowerElement& y) {
  check_compatible(x, y);
  return TowerElement(x.prime(), x.strands(),
                      per_level(x.depth(), [&](int r) { return y_mul(x.level(r), y.level(r)); }));
}

TowerElement tower_add(const TowerElement& x, const TowerElement& y) {
  check_compatible(x, y);
  std::vector<YElement> levels;
  for (int r = 1; r <= x.depth(); ++r) levels.push_back(x.level(r) + y.level(r));
  return TowerElement(x.prime(), x.strands(), std::move(levels));
}

TowerElement tower_sub(const TowerElement& x, const TowerElement& y) {
  check_compatible(x, y);
  std::vector<YElement> levels;
  for (int r = 1; r <= x.depth(); ++r) levels.push_back(x.level(r) - y.level(r));
  return TowerElement(x.prime(), x.strands(), std::move(levels));
}

// ---------------------------------------------------------------- p-adic trace

PadicTraceValue::PadicTraceValue(std::int64_t p, std::vector<TracePoly> levels) : p_(p), levels_(std::move(levels)) {
  check_depth(depth());
  for (int r = 1; r <= depth(); ++r) {
    if (levels_[r - 1].modulus() != checked_pow(p_, r)) {
      throw MismatchError("trace level " + std::to_string(r) + " does not have modulus p^r");
    }
  }
  if (!is_coherent()) throw MismatchError("trace levels are not coherent under delta_s^r");
}

const TracePoly& PadicTraceValue::level(int r) const {
  if (r < 1 || r > depth()) throw PrecisionError("trace level " + std::to_string(r) + " outside 1.." + std::to_string(depth()));
  return levels_[r - 1];
}

bool PadicTraceValue::is_coherent() const {
  for (int r = 2; r <= depth(); ++r) {
    if (!(delta_map(levels_[r - 1], p_, r - 1) == levels_[r - 2])) return false;
  }
  return true;
}

PadicTraceValue padic_trace(const TowerElement& x) {
  return PadicTraceValue(x.prime(), per_level(x.depth(), [&](int r) { return markov_trace(x.level(r)); }));
}

PadicTraceValue padic_indeterminate(const PadicApprox& a, int depth) {
  check_depth(depth);
  if (a.precision() < depth) throw PrecisionError("p-adic exponent precision below depth");
  std::vector<TracePoly> levels;
  for (int r = 1; r <= depth; ++r) {
    levels.push_back(x_var(static_cast<int>(checked_pow(a.prime(), r)), a.residue(r)));
  }
  return PadicTraceValue(a.prime(), std::move(levels));
}

}  // namespace yh
