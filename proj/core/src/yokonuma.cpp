#include "yh/yokonuma.hpp"

#include <utility>

#include "yh/error.hpp"
#include "yh/expr_parser.hpp"

namespace yh {

namespace {

using Terms = YElement::Terms;

void accumulate(Terms& terms, const YBasisElt& b, const LaurentU& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

void accumulate(Terms& terms, YBasisElt&& b, const LaurentU& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(std::move(b), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

void check_index(const YParams& params, int i, int upper, const char* what) {
  if (i < 1 || i > upper) {
    throw ParameterError(std::string(what) + " index " + std::to_string(i) + " outside 1.." + std::to_string(upper) +
                         " in Y_{" + std::to_string(params.d) + "," + std::to_string(params.n) + "}");
  }
}

// out += c * (t^a g_w) * e_{d,i,i+1}
void accumulate_times_e(Terms& out, const YBasisElt& b, int i, const LaurentU& c, int d) {
  const LaurentU scaled = c * LaurentU(Rational(1, d));
  const int left = b.perm(i) - 1;
  const int right = b.perm(i + 1) - 1;
  for (int m = 0; m < d; ++m) {
    YBasisElt next = b;
    next.framing[left] = (next.framing[left] + m) % d;
    next.framing[right] = (next.framing[right] + d - m) % d;
    accumulate(out, std::move(next), scaled);
  }
}

// out += c * (t^a g_w) * g_i
void accumulate_times_g(Terms& out, const YBasisElt& b, int i, const LaurentU& c, int d) {
  YBasisElt shorter{perm_times_s(b.perm, i), b.framing};
  if (!right_descent(b.perm, i)) {
    accumulate(out, std::move(shorter), c);
    return;
  }
  // g_w g_i = g_{w s_i} + (u-1)(g_{w s_i} - g_w) e_i
  const LaurentU um1 = c * (LaurentU::u() - LaurentU(1));
  accumulate_times_e(out, shorter, i, um1, d);
  accumulate_times_e(out, b, i, -um1, d);
  accumulate(out, std::move(shorter), c);
}

Terms times_g(const Terms& in, int i, int d) {
  Terms out;
  for (const auto& [b, c] : in) accumulate_times_g(out, b, i, c, d);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- basics

YParams YParams::make(int d, int n) {
  if (d < 1) throw ParameterError("Yokonuma-Hecke modulus d must be >= 1");
  if (n < 1) throw ParameterError("strand count n must be >= 1");
  return YParams{d, n};
}

YBasisElt YBasisElt::identity(const YParams& params) {
  return YBasisElt{Perm(params.n), std::vector<int>(params.n, 0)};
}

std::string YBasisElt::str() const {
  std::string out;
  for (std::size_t i = 0; i < framing.size(); ++i) {
    if (framing[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "t" + std::to_string(i + 1);
    if (framing[i] != 1) out += "^" + std::to_string(framing[i]);
  }
  if (!perm.is_identity()) {
    if (!out.empty()) out += "*";
    out += "g" + perm.str();
  }
  return out.empty() ? "1" : out;
}

YElement::YElement(const YParams& params) : params_(YParams::make(params.d, params.n)) {}

YElement::YElement(const YParams& params, const YBasisElt& b, const LaurentU& c) : YElement(params) {
  add_term(b, c);
}

void YElement::add_term(const YBasisElt& b, const LaurentU& c) {
  if (b.perm.size() != params_.n || static_cast<int>(b.framing.size()) != params_.n) {
    throw MismatchError("basis element size does not match n");
  }
  for (int a : b.framing) {
    if (a < 0 || a >= params_.d) throw ParameterError("basis framing outside [0, d)");
  }
  accumulate(terms_, b, c);
}

void YElement::require_same_params(const YElement& o) const {
  if (!(params_ == o.params_)) {
    throw MismatchError("Yokonuma-Hecke elements of different algebras: Y_{" + std::to_string(params_.d) + "," +
                        std::to_string(params_.n) + "} vs Y_{" + std::to_string(o.params_.d) + "," +
                        std::to_string(o.params_.n) + "}");
  }
}

YElement& YElement::operator+=(const YElement& o) {
  require_same_params(o);
  for (const auto& [b, c] : o.terms_) accumulate(terms_, b, c);
  return *this;
}

YElement& YElement::operator-=(const YElement& o) {
  require_same_params(o);
  for (const auto& [b, c] : o.terms_) accumulate(terms_, b, -c);
  return *this;
}

YElement& YElement::operator*=(const LaurentU& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

YElement YElement::operator-() const {
  YElement out = *this;
  for (auto& [b, c] : out.terms_) c = -c;
  return out;
}

YElement operator*(const YElement& a, const YElement& b) { return y_mul(a, b); }

std::string YElement::str() const {
  std::vector<std::pair<const LaurentU*, std::string>> rendered;
  rendered.reserve(terms_.size());
  for (const auto& [b, c] : terms_) {
    std::string unit = b.str();
    rendered.emplace_back(&c, unit == "1" ? std::string() : std::move(unit));
  }
  return detail::render_terms(rendered);
}

YElement YElement::parse(const YParams& params, std::string_view text) {
  detail::ExprHooks<YElement> hooks;
  hooks.scalar = [params](const Rational& c) { return y_one(params) * LaurentU(c); };
  hooks.atom = [params](std::string_view id, std::size_t column) -> YElement {
    try {
      if (id == "u") return y_one(params) * LaurentU::u();
      if (id.size() > 1 && (id[0] == 't' || id[0] == 'g') &&
          id.find_first_not_of("0123456789", 1) == std::string_view::npos) {
        const int i = std::stoi(std::string(id.substr(1)));
        return id[0] == 't' ? y_t(params, i, 1) : y_g(params, i);
      }
      if (id.size() > 1 && id[0] == 'g' && id[1] == '[') {
        const Perm w = Perm::parse(id.substr(1));
        if (w.size() != params.n) throw ParameterError("permutation size does not match n");
        return y_perm(params, w);
      }
    } catch (const ParameterError& e) {
      throw ParseError(e.what(), column);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), column);
    }
    throw ParseError("unknown symbol '" + std::string(id) + "'", column);
  };
  hooks.mul = [](const YElement& a, const YElement& b) { return y_mul(a, b); };
  hooks.negative_power = [params](const YElement& base, int e, std::size_t column) -> YElement {
    // Only framing monomials c * t^a are inverted here.
    if (base.terms().size() != 1 || !base.terms().begin()->first.perm.is_identity() ||
        !base.terms().begin()->second.is_monomial()) {
      throw ParseError("negative powers are only supported for framing monomials", column);
    }
    const auto& [b, c] = *base.terms().begin();
    const auto& [k, r] = *c.terms().begin();
    YBasisElt inv = b;
    for (int& a : inv.framing) a = static_cast<int>(mod_floor(-static_cast<std::int64_t>(a) * e, params.d));
    Rational scale(1);
    for (int i = 0; i < e; ++i) scale /= r;
    return YElement(params, inv, LaurentU::monomial(-k * e, scale));
  };
  return detail::ExprParser<YElement>(text, std::move(hooks)).parse();
}

// ---------------------------------------------------------------- generators

YElement y_one(const YParams& params) { return YElement(params, YBasisElt::identity(params)); }

YElement y_t(const YParams& params, int i, std::int64_t m) {
  check_index(params, i, params.n, "framing generator");
  YBasisElt b = YBasisElt::identity(params);
  b.framing[i - 1] = static_cast<int>(mod_floor(m, params.d));
  return YElement(params, b);
}

YElement y_g(const YParams& params, int i) {
  check_index(params, i, params.n - 1, "braid generator");
  YBasisElt b = YBasisElt::identity(params);
  b.perm = Perm::transposition(params.n, i);
  return YElement(params, b);
}

YElement y_perm(const YParams& params, const Perm& w) {
  if (w.size() != params.n) throw MismatchError("permutation size does not match n");
  YBasisElt b = YBasisElt::identity(params);
  b.perm = w;
  return YElement(params, b);
}

YElement y_e(const YParams& params, int i, int j) {
  check_index(params, i, params.n, "idempotent");
  check_index(params, j, params.n, "idempotent");
  if (i == j) throw ParameterError("e_{d,i,j} needs i != j");
  YElement out(params);
  const LaurentU c(Rational(1, params.d));
  for (int m = 0; m < params.d; ++m) {
    YBasisElt b = YBasisElt::identity(params);
    b.framing[i - 1] = m;
    b.framing[j - 1] = (params.d - m) % params.d;
    out.add_term(b, c);
  }
  return out;
}

YElement y_g_inverse(const YParams& params, int i) {
  check_index(params, i, params.n - 1, "braid generator");
  // g_i^{-1} = g_i - (u^{-1} - 1) e_i + (u^{-1} - 1) e_i g_i
  const LaurentU c = LaurentU::monomial(-1) - LaurentU(1);
  const YElement e = y_e(params, i, i + 1);
  const YElement g = y_g(params, i);
  return g - e * c + y_mul(e, g) * c;
}

// ---------------------------------------------------------------- products

YBasisElt mul_basis_t(const YBasisElt& b, int j, std::int64_t m, int d) {
  if (j < 1 || j > b.perm.size()) throw ParameterError("framing generator index outside 1..n");
  YBasisElt out = b;
  auto& slot = out.framing[b.perm(j) - 1];
  slot = static_cast<int>(mod_floor(slot + m, d));
  return out;
}

YElement mul_basis_g(const YParams& params, const YBasisElt& b, int i) {
  check_index(params, i, params.n - 1, "braid generator");
  YElement out(params);
  Terms terms;
  accumulate_times_g(terms, b, i, LaurentU(1), params.d);
  for (const auto& [basis, c] : terms) out.add_term(basis, c);
  return out;
}

YElement y_mul(const YElement& x, const YElement& y) {
  if (!(x.params() == y.params())) {
    throw MismatchError("multiplying elements of different Yokonuma-Hecke algebras");
  }
  const int d = x.params().d;
  const int n = x.params().n;
  // Fold words are shared by every left term, so compute them once.
  std::map<Perm, std::vector<int>> words;
  for (const auto& [b, c] : y.terms()) words.try_emplace(b.perm, reduced_word(b.perm));

  Terms result;
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) {
      YBasisElt start = bx;
      for (int j = 1; j <= n; ++j) {
        if (by.framing[j - 1] == 0) continue;
        auto& slot = start.framing[bx.perm(j) - 1];
        slot = (slot + by.framing[j - 1]) % d;
      }
      const auto& word = words.at(by.perm);
      if (word.empty()) {
        accumulate(result, std::move(start), cx * cy);
        continue;
      }
      Terms current;
      current.emplace(std::move(start), cx * cy);
      for (std::size_t k = 0; k + 1 < word.size(); ++k) current = times_g(current, word[k], d);
      for (const auto& [b, c] : current) accumulate_times_g(result, b, word.back(), c, d);
    }
  }
  YElement out(x.params());
  for (auto& [b, c] : result) out.add_term(b, c);
  return out;
}

YElement y_eval_word(const FramedBraidWord& w, const YParams& params) {
  if (w.strands() != params.n) throw MismatchError("word strand count does not match n");
  Terms current;
  current.emplace(YBasisElt::identity(params), LaurentU(1));
  std::map<int, YElement> inverses;
  for (const auto& letter : w.letters()) {
    if (const auto* f = std::get_if<FramingLetter>(&letter)) {
      std::int64_t m = 0;
      if (const auto* k = std::get_if<std::int64_t>(&f->exponent)) {
        m = *k;
      } else {
        const auto& a = std::get<PadicApprox>(f->exponent);
        const int r = level_of(params.d, a.prime());
        if (r > a.precision()) {
          throw PrecisionError("p-adic framing of precision " + std::to_string(a.precision()) +
                               " cannot be evaluated at d = " + std::to_string(params.d));
        }
        m = r == 0 ? 0 : a.residue(r);
      }
      Terms next;
      for (const auto& [b, c] : current) accumulate(next, mul_basis_t(b, f->index, m, params.d), c);
      current = std::move(next);
    } else {
      const auto& s = std::get<BraidLetter>(letter);
      if (s.sign > 0) {
        current = times_g(current, s.index, params.d);
      } else {
        auto it = inverses.find(s.index);
        if (it == inverses.end()) it = inverses.emplace(s.index, y_g_inverse(params, s.index)).first;
        YElement acc(params);
        for (const auto& [b, c] : current) acc.add_term(b, c);
        current = y_mul(acc, it->second).terms();
      }
    }
  }
  YElement out(params);
  for (auto& [b, c] : current) out.add_term(b, c);
  return out;
}

int level_of(std::int64_t d, std::int64_t p) {
  if (!is_prime(p)) throw ParameterError("level_of needs a prime p");
  int r = 0;
  std::int64_t m = d;
  while (m > 1 && m % p == 0) {
    m /= p;
    ++r;
  }
  if (d < 1 || m != 1) {
    throw MismatchError("modulus " + std::to_string(d) + " is not a power of " + std::to_string(p));
  }
  return r;
}

YElement phi_map(const YElement& x, std::int64_t p, int s) {
  const int r = level_of(x.params().d, p);
  if (s < 0 || s > r) {
    throw PrecisionError("phi_map needs 0 <= s <= r (s=" + std::to_string(s) + ", r=" + std::to_string(r) + ")");
  }
  const auto target = static_cast<int>(checked_pow(p, s));
  YElement out(YParams{target, x.params().n});
  for (const auto& [b, c] : x.terms()) {
    YBasisElt reduced = b;
    for (int& a : reduced.framing) a %= target;
    out.add_term(reduced, c);
  }
  return out;
}

YElement y_embed(const YElement& x, int n) {
  if (n < x.params().n) throw ParameterError("cannot embed into fewer strands");
  const YParams target = YParams::make(x.params().d, n);
  YElement out(target);
  for (const auto& [b, c] : x.terms()) {
    YBasisElt wide{perm_embed(b.perm, n), b.framing};
    wide.framing.resize(n, 0);
    out.add_term(wide, c);
  }
  return out;
}

// ---------------------------------------------------------------- relations

namespace {

// h_i = g_{i-1} ... g_1 t_1 g_1^{-1} ... g_{i-1}^{-1}
YElement conjugated_framing(const YParams& params, int i) {
  YElement out = y_t(params, 1, 1);
  for (int j = 1; j < i; ++j) out = y_mul(y_mul(y_g(params, j), out), y_g_inverse(params, j));
  return out;
}

std::string idx(int i) { return std::to_string(i); }
std::string idx(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

}  // namespace

std::vector<RelationCheck> relation_suite(const YParams& params) {
  const YParams P = YParams::make(params.d, params.n);
  const int n = P.n;
  std::vector<RelationCheck> out;
  auto check = [&out](std::string name, const YElement& lhs, const YElement& rhs) {
    out.push_back({std::move(name), lhs == rhs});
  };

  std::vector<YElement> g, gi, e;
  for (int i = 1; i < n; ++i) {
    g.push_back(y_g(P, i));
    gi.push_back(y_g_inverse(P, i));
    e.push_back(y_e(P, i, i + 1));
  }
  const YElement one = y_one(P);
  const YElement t1 = y_t(P, 1, 1);

  for (int i = 1; i + 1 < n; ++i) {
    check("braid g" + idx(i) + "g" + idx(i + 1) + "g" + idx(i), g[i - 1] * g[i] * g[i - 1], g[i] * g[i - 1] * g[i]);
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) check("far-commute g" + idx(i) + " g" + idx(j), g[i - 1] * g[j - 1], g[j - 1] * g[i - 1]);
  for (int i = 2; i < n; ++i) check("t1 commutes with g" + idx(i), t1 * g[i - 1], g[i - 1] * t1);
  if (n >= 2) check("t1 g1 t1 g1^-1 = g1 t1 g1^-1 t1", t1 * g[0] * t1 * gi[0], g[0] * t1 * gi[0] * t1);
  {
    YElement power = one;
    for (int k = 0; k < P.d; ++k) power = power * t1;
    check("t1^d = 1", power, one);
  }
  for (int i = 1; i < n; ++i) {
    const YElement h = conjugated_framing(P, i);
    check("conjugated framing at g" + idx(i), g[i - 1] * h * gi[i - 1], gi[i - 1] * h * g[i - 1]);
  }
  for (int i = 1; i < n; ++i) {
    const YElement& gg = g[i - 1];
    const YElement& ee = e[i - 1];
    check("quadratic g" + idx(i), gg * gg, one + ee * (one - gg) * (LaurentU::u() - LaurentU(1)));
    check("inverse g" + idx(i) + " g" + idx(i) + "^-1", gg * gi[i - 1], one);
    check("inverse g" + idx(i) + "^-1 g" + idx(i), gi[i - 1] * gg, one);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const YElement eij = y_e(P, i, j);
      check("idempotent e" + idx(i, j), eij * eij, eij);
      check("symmetric e" + idx(i, j), eij, y_e(P, j, i));
    }
  }
  for (int i = 1; i < n; ++i) {
    const Perm s = Perm::transposition(n, i);
    for (int j = 1; j < n; ++j) {
      const YElement& ej = e[j - 1];
      for (int sign : {1, -1}) {
        const YElement& gs = sign > 0 ? g[i - 1] : gi[i - 1];
        const std::string gname = "g" + idx(i) + (sign > 0 ? "" : "^-1");
        if (j != i - 1 && j != i + 1) {
          check(gname + " commutes with e" + idx(j, j + 1), gs * ej, ej * gs);
        } else {
          const YElement swapped = y_e(P, s(j), s(j + 1));
          check(gname + " e" + idx(j, j + 1) + " = e" + idx(s(j), s(j + 1)) + " " + gname, gs * ej, swapped * gs);
          check("e" + idx(j, j + 1) + " " + gname + " = " + gname + " e" + idx(s(j), s(j + 1)), ej * gs, gs * swapped);
        }
      }
    }
  }
  for (int i = 1; i < n; ++i) {
    // Every framing vector, enumerated in base d.
    bool all = true;
    std::vector<int> a(n, 0);
    for (;;) {
      YBasisElt t = YBasisElt::identity(P);
      t.framing = a;
      YBasisElt swapped = t;
      std::swap(swapped.framing[i - 1], swapped.framing[i]);
      if (!(e[i - 1] * YElement(P, t) == e[i - 1] * YElement(P, swapped))) all = false;
      int k = 0;
      while (k < n && ++a[k] == P.d) a[k++] = 0;
      if (k == n) break;
    }
    out.push_back({"e" + idx(i, i + 1) + " absorbs framing swap", all});
  }
  if (P.d == 1) {
    for (int i = 1; i < n; ++i) {
      const YElement uu = one * LaurentU::u();
      check("Hecke (g" + idx(i) + " + u)(g" + idx(i) + " - 1) = 0", (g[i - 1] + uu) * (g[i - 1] - one), YElement(P));
    }
  }
  return out;
}

}  // namespace yh
