#include "yh/coeff.hpp"

#include <algorithm>
#include <sstream>

#include "yh/error.hpp"
#include "yh/expr_parser.hpp"

namespace yh {

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.size() > 1 && s[0] == '+' && s[1] != '-') s.erase(0, 1);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'", 1);
  if (q.get_den() == 0) throw ParseError("zero denominator", 1);
  return Rational(q);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ParameterError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- LaurentU

LaurentU::LaurentU(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentU LaurentU::monomial(int exponent, const Rational& c) {
  LaurentU out;
  out.add_term(exponent, c);
  return out;
}

Rational LaurentU::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

void LaurentU::add_term(int exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentU& LaurentU::operator+=(const LaurentU& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentU& LaurentU::operator-=(const LaurentU& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentU operator*(const LaurentU& a, const LaurentU& b) {
  LaurentU out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentU& LaurentU::operator*=(const LaurentU& o) { return *this = *this * o; }

LaurentU& LaurentU::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentU LaurentU::operator-() const {
  LaurentU out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

namespace {

// Renders |c| * u^e without sign; c != 0.
std::string unsigned_u_term(const Rational& c, int e) {
  const Rational a = c.abs();
  if (e == 0) return a.str();
  std::string power = e == 1 ? "u" : "u^" + std::to_string(e);
  if (a.is_one()) return power;
  return a.str() + "*" + power;
}

}  // namespace

std::string LaurentU::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += unsigned_u_term(c, e);
    first = false;
  }
  return out;
}

LaurentU LaurentU::parse(std::string_view text) {
  detail::ExprHooks<LaurentU> hooks;
  hooks.scalar = [](const Rational& c) { return LaurentU(c); };
  hooks.atom = [](std::string_view id, std::size_t column) -> LaurentU {
    if (id == "u") return LaurentU::u();
    throw ParseError("unknown symbol '" + std::string(id) + "'", column);
  };
  hooks.mul = [](const LaurentU& a, const LaurentU& b) { return a * b; };
  hooks.negative_power = [](const LaurentU& base, int e, std::size_t column) -> LaurentU {
    if (!base.is_monomial()) throw ParseError("only monomials may have negative exponents", column);
    const auto& [k, c] = *base.terms().begin();
    Rational inv = Rational(1) / c;
    Rational acc(1);
    for (int i = 0; i < e; ++i) acc *= inv;
    return LaurentU::monomial(-k * e, acc);
  };
  return detail::ExprParser<LaurentU>(text, std::move(hooks)).parse();
}

std::string detail::render_terms(const std::vector<std::pair<const LaurentU*, std::string>>& terms) {
  if (terms.empty()) return "0";
  if (terms.size() == 1 && terms.front().second.empty()) return terms.front().first->str();
  std::string out;
  bool first = true;
  for (const auto& [c, unit] : terms) {
    std::string body;
    bool negative = false;
    if (c->is_monomial()) {
      const auto& [e, r] = *c->terms().begin();
      negative = r.sign() < 0;
      if (unit.empty()) {
        body = unsigned_u_term(r, e);
      } else if (e == 0 && r.abs().is_one()) {
        body = unit;
      } else {
        body = unsigned_u_term(r, e) + "*" + unit;
      }
    } else {
      body = "(" + c->str() + ")";
      if (!unit.empty()) body += "*" + unit;
    }
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    out += body;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- TracePoly

TraceMonomial TraceMonomial::operator*(const TraceMonomial& o) const {
  TraceMonomial out;
  out.z_exp = z_exp + o.z_exp;
  out.x.reserve(x.size() + o.x.size());
  auto a = x.begin();
  auto b = o.x.begin();
  while (a != x.end() || b != o.x.end()) {
    if (b == o.x.end() || (a != x.end() && a->first < b->first)) {
      out.x.push_back(*a++);
    } else if (a == x.end() || b->first < a->first) {
      out.x.push_back(*b++);
    } else {
      out.x.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

std::string TraceMonomial::str() const {
  std::string out;
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out += "*";
    out += s;
  };
  if (z_exp == 1) append("z");
  else if (z_exp > 1) append("z^" + std::to_string(z_exp));
  for (const auto& [i, e] : x) {
    std::string v = "x_" + std::to_string(i);
    if (e > 1) v += "^" + std::to_string(e);
    append(v);
  }
  return out.empty() ? "1" : out;
}

bool TraceMonomialOrder::operator()(const TraceMonomial& a, const TraceMonomial& b) const {
  if (a.z_exp != b.z_exp) return a.z_exp > b.z_exp;
  return a.x < b.x;
}

TracePoly::TracePoly(int d) : d_(d) {
  if (d < 1) throw ParameterError("trace polynomial modulus must be >= 1");
}

TracePoly::TracePoly(int d, const LaurentU& c) : TracePoly(d) {
  if (!c.is_zero()) terms_.emplace(TraceMonomial{}, c);
}

TracePoly TracePoly::z(int d) {
  TracePoly out(d);
  out.terms_.emplace(TraceMonomial{1, {}}, LaurentU(1));
  return out;
}

void TracePoly::add_term(const TraceMonomial& m, const LaurentU& c) {
  if (c.is_zero()) return;
  for (const auto& [i, e] : m.x) {
    if (i < 1 || i >= d_ || e < 1) throw ParameterError("x-index outside [1, d)");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TracePoly::require_same_modulus(const TracePoly& o) const {
  if (d_ != o.d_) {
    throw MismatchError("trace polynomials at incompatible levels (d=" + std::to_string(d_) +
                        " vs d=" + std::to_string(o.d_) + ")");
  }
}

TracePoly& TracePoly::operator+=(const TracePoly& o) {
  require_same_modulus(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TracePoly& TracePoly::operator-=(const TracePoly& o) {
  require_same_modulus(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TracePoly& TracePoly::operator*=(const LaurentU& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

TracePoly operator*(const TracePoly& a, const TracePoly& b) {
  a.require_same_modulus(b);
  TracePoly out(a.d_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

TracePoly TracePoly::operator-() const {
  TracePoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string TracePoly::str() const {
  std::vector<std::pair<const LaurentU*, std::string>> rendered;
  rendered.reserve(terms_.size());
  for (const auto& [m, c] : terms_) rendered.emplace_back(&c, m.is_one() ? std::string() : m.str());
  return detail::render_terms(rendered);
}

TracePoly TracePoly::parse(int d, std::string_view text) {
  detail::ExprHooks<TracePoly> hooks;
  hooks.scalar = [d](const Rational& c) { return TracePoly(d, LaurentU(c)); };
  hooks.atom = [d](std::string_view id, std::size_t column) -> TracePoly {
    if (id == "u") return TracePoly(d, LaurentU::u());
    if (id == "z") return TracePoly::z(d);
    if (id.size() > 2 && id.substr(0, 2) == "x_") {
      const std::string digits(id.substr(2));
      if (digits.find_first_not_of("0123456789") == std::string::npos) {
        const long m = std::stol(digits);
        if (m < 1 || m >= d) {
          throw ParseError("x-index " + digits + " outside [1, " + std::to_string(d) + ")", column);
        }
        return x_var(d, m);
      }
    }
    throw ParseError("unknown symbol '" + std::string(id) + "'", column);
  };
  hooks.mul = [](const TracePoly& a, const TracePoly& b) { return a * b; };
  hooks.negative_power = [d](const TracePoly& base, int e, std::size_t column) -> TracePoly {
    if (base.terms().size() != 1 || !base.terms().begin()->first.is_one() ||
        !base.terms().begin()->second.is_monomial()) {
      throw ParseError("only monomials in u may have negative exponents", column);
    }
    const auto& [k, c] = *base.terms().begin()->second.terms().begin();
    Rational inv = Rational(1) / c;
    Rational acc(1);
    for (int i = 0; i < e; ++i) acc *= inv;
    return TracePoly(d, LaurentU::monomial(-k * e, acc));
  };
  return detail::ExprParser<TracePoly>(text, std::move(hooks)).parse();
}

TracePoly x_var(int d, std::int64_t m) {
  if (d < 1) throw ParameterError("x_var: modulus must be >= 1");
  const auto index = static_cast<int>(mod_floor(m, d));
  if (index == 0) return TracePoly(d, LaurentU(1));
  TracePoly out(d);
  out.add_term(TraceMonomial{0, {{index, 1}}}, LaurentU(1));
  return out;
}

}  // namespace yh
