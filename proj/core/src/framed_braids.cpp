#include "yh/framed_braids.hpp"

#include <cctype>
#include <charconv>

#include "yh/coeff.hpp"
#include "yh/error.hpp"

namespace yh {

namespace {

void check_strands(int n) {
  if (n < 1) throw ParameterError("strand count must be >= 1");
}

void check_letter(int n, const Letter& letter) {
  if (const auto* f = std::get_if<FramingLetter>(&letter)) {
    if (f->index < 1 || f->index > n) {
      throw ParameterError("framing generator f_" + std::to_string(f->index) + " outside 1.." + std::to_string(n));
    }
  } else {
    const auto& b = std::get<BraidLetter>(letter);
    if (b.index < 1 || b.index >= n) {
      throw ParameterError("braid generator s_" + std::to_string(b.index) + " outside 1.." + std::to_string(n - 1));
    }
    if (b.sign != 1 && b.sign != -1) throw ParameterError("braid letter sign must be +1 or -1");
  }
}

std::int64_t parse_integer(std::string_view s, std::size_t column) {
  std::int64_t v = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("expected integer, got '" + std::string(s) + "'", column);
  }
  return v;
}

Letter parse_token(std::string_view tok, std::size_t column) {
  if (tok.size() < 2 || (tok[0] != 'f' && tok[0] != 's')) {
    throw ParseError("unknown token '" + std::string(tok) + "'", column);
  }
  const auto caret = tok.find('^');
  const std::string_view index_text = tok.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1);
  if (index_text.empty() || !std::isdigit(static_cast<unsigned char>(index_text[0]))) {
    throw ParseError("missing generator index in '" + std::string(tok) + "'", column + 1);
  }
  const int index = static_cast<int>(parse_integer(index_text, column + 1));
  std::string_view exponent = caret == std::string_view::npos ? std::string_view{} : tok.substr(caret + 1);
  const std::size_t exponent_column = column + caret + 1;
  if (caret != std::string_view::npos && exponent.empty()) throw ParseError("missing exponent", exponent_column);

  if (tok[0] == 's') {
    int sign = 1;
    if (!exponent.empty()) {
      const auto e = parse_integer(exponent, exponent_column);
      if (e != 1 && e != -1) throw ParseError("braid exponent must be 1 or -1", exponent_column);
      sign = static_cast<int>(e);
    }
    return BraidLetter{index, sign};
  }
  if (exponent.empty()) return FramingLetter{index, std::int64_t{1}};
  if (exponent.front() == '{') {
    if (exponent.back() != '}') throw ParseError("unterminated p-adic exponent", exponent_column);
    try {
      return FramingLetter{index, PadicApprox::parse(exponent.substr(1, exponent.size() - 2))};
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad p-adic exponent: ") + e.message(), exponent_column + 1);
    } catch (const ParameterError& e) {
      throw ParseError(std::string("bad p-adic exponent: ") + e.what(), exponent_column + 1);
    }
  }
  return FramingLetter{index, parse_integer(exponent, exponent_column)};
}

void push_reduced(BraidWord& word, const BraidLetter& letter) {
  if (!word.empty() && word.back().index == letter.index && word.back().sign == -letter.sign) {
    word.pop_back();
  } else {
    word.push_back(letter);
  }
}

std::int64_t reduce(std::int64_t v, std::int64_t modulus) { return modulus == 0 ? v : mod_floor(v, modulus); }

std::string exponent_str(const FramingExponent& e) {
  if (const auto* k = std::get_if<std::int64_t>(&e)) return std::to_string(*k);
  return "{" + std::get<PadicApprox>(e).str() + "}";
}

}  // namespace

FramedBraidWord::FramedBraidWord(int n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
  check_strands(n_);
  for (const auto& l : letters_) check_letter(n_, l);
}

FramedBraidWord FramedBraidWord::parse(int n, std::string_view text) {
  check_strands(n);
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    Letter letter = parse_token(text.substr(start, pos - start), start + 1);
    try {
      check_letter(n, letter);
    } catch (const ParameterError& e) {
      throw ParseError(e.what(), start + 1);
    }
    letters.push_back(std::move(letter));
  }
  return FramedBraidWord(n, std::move(letters));
}

bool FramedBraidWord::has_padic_framings() const {
  for (const auto& l : letters_) {
    if (const auto* f = std::get_if<FramingLetter>(&l); f && std::holds_alternative<PadicApprox>(f->exponent)) {
      return true;
    }
  }
  return false;
}

FramedBraidWord FramedBraidWord::operator*(const FramedBraidWord& o) const {
  if (n_ != o.n_) throw MismatchError("multiplying framed braid words on different strand counts");
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), o.letters_.begin(), o.letters_.end());
  return FramedBraidWord(n_, std::move(letters));
}

FramedBraidWord FramedBraidWord::inverse() const {
  std::vector<Letter> letters;
  letters.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    if (const auto* f = std::get_if<FramingLetter>(&*it)) {
      if (const auto* k = std::get_if<std::int64_t>(&f->exponent)) {
        letters.emplace_back(FramingLetter{f->index, -*k});
      } else {
        letters.emplace_back(FramingLetter{f->index, padic_neg(std::get<PadicApprox>(f->exponent))});
      }
    } else {
      const auto& b = std::get<BraidLetter>(*it);
      letters.emplace_back(BraidLetter{b.index, -b.sign});
    }
  }
  return FramedBraidWord(n_, std::move(letters));
}

std::string FramedBraidWord::str() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += " ";
    if (const auto* f = std::get_if<FramingLetter>(&l)) {
      out += "f" + std::to_string(f->index) + "^" + exponent_str(f->exponent);
    } else {
      const auto& b = std::get<BraidLetter>(l);
      out += "s" + std::to_string(b.index) + (b.sign < 0 ? "^-1" : "");
    }
  }
  return out;
}

BraidWord free_reduce(BraidWord word) {
  BraidWord out;
  out.reserve(word.size());
  for (const auto& l : word) push_reduced(out, l);
  return out;
}

BraidWord braid_inverse(const BraidWord& word) {
  BraidWord out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back({it->index, -it->sign});
  return out;
}

Perm braid_permutation(int n, const BraidWord& word) {
  Perm w(n);
  for (const auto& l : word) w = perm_times_s(w, l.index);
  return w;
}

SplitFramedBraid SplitFramedBraid::identity(int n, std::int64_t modulus) {
  check_strands(n);
  if (modulus < 0) throw ParameterError("framing modulus must be >= 0");
  return SplitFramedBraid{n, modulus, std::vector<std::int64_t>(n, 0), {}};
}

std::string SplitFramedBraid::str() const {
  std::string out = "(";
  for (int i = 0; i < n; ++i) {
    if (i) out += ",";
    out += std::to_string(framing[i]);
  }
  out += ")";
  for (const auto& l : braid) out += " s" + std::to_string(l.index) + (l.sign < 0 ? "^-1" : "");
  return out;
}

SplitFramedBraid split(const FramedBraidWord& w) {
  SplitFramedBraid out = SplitFramedBraid::identity(w.strands());
  Perm transport(w.strands());
  for (const auto& letter : w.letters()) {
    if (const auto* f = std::get_if<FramingLetter>(&letter)) {
      const auto* k = std::get_if<std::int64_t>(&f->exponent);
      if (!k) throw ParameterError("split: p-adic framing in a classical framed braid word");
      out.framing[transport(f->index) - 1] += *k;
    } else {
      const auto& b = std::get<BraidLetter>(letter);
      push_reduced(out.braid, b);
      transport = perm_times_s(transport, b.index);
    }
  }
  return out;
}

SplitFramedBraid multiply_split(const SplitFramedBraid& x, const SplitFramedBraid& y) {
  if (x.n != y.n) throw MismatchError("multiplying framed braids on different strand counts");
  if (x.modulus != y.modulus) throw MismatchError("multiplying framed braids with different framing moduli");
  SplitFramedBraid out = x;
  const Perm transport = braid_permutation(x.n, x.braid);
  for (int j = 1; j <= x.n; ++j) {
    auto& slot = out.framing[transport(j) - 1];
    slot = reduce(slot + y.framing[j - 1], x.modulus);
  }
  for (const auto& l : y.braid) push_reduced(out.braid, l);
  return out;
}

SplitFramedBraid inverse_split(const SplitFramedBraid& x) {
  SplitFramedBraid out = SplitFramedBraid::identity(x.n, x.modulus);
  const Perm transport = braid_permutation(x.n, x.braid);
  for (int j = 1; j <= x.n; ++j) out.framing[j - 1] = reduce(-x.framing[transport(j) - 1], x.modulus);
  out.braid = braid_inverse(x.braid);
  return out;
}

SplitFramedBraid project_modular(const SplitFramedBraid& x, std::int64_t d) {
  if (d < 1) throw ParameterError("framing modulus must be >= 1");
  if (x.modulus != 0 && x.modulus % d != 0) {
    throw MismatchError("Z/" + std::to_string(x.modulus) + " does not project onto Z/" + std::to_string(d));
  }
  SplitFramedBraid out = x;
  out.modulus = d;
  for (auto& a : out.framing) a = mod_floor(a, d);
  return out;
}

SplitFramedBraid pi_level_map(const SplitFramedBraid& x, std::int64_t p, int s) {
  if (!is_prime(p)) throw ParameterError("level map needs a prime p");
  if (s < 0) throw PrecisionError("level must be >= 0");
  int r = 0;
  std::int64_t m = x.modulus;
  while (m > 1 && m % p == 0) {
    m /= p;
    ++r;
  }
  if (x.modulus < 1 || m != 1) {
    throw MismatchError("framed braid modulus " + std::to_string(x.modulus) + " is not a power of " + std::to_string(p));
  }
  if (s > r) throw PrecisionError("level map needs s <= r (s=" + std::to_string(s) + ", r=" + std::to_string(r) + ")");
  return project_modular(x, checked_pow(p, s));
}

FramedBraidWord to_word(const SplitFramedBraid& x) {
  std::vector<Letter> letters;
  for (int i = 0; i < x.n; ++i) {
    if (x.framing[i] != 0) letters.emplace_back(FramingLetter{i + 1, x.framing[i]});
  }
  for (const auto& l : x.braid) letters.emplace_back(l);
  return FramedBraidWord(x.n, std::move(letters));
}

PadicFramedBraid PadicFramedBraid::identity(int n, std::int64_t p, int precision) {
  check_strands(n);
  return PadicFramedBraid{n, std::vector<PadicApprox>(n, PadicApprox::zero(p, precision)), {}};
}

PadicFramedBraid PadicFramedBraid::from_word(const FramedBraidWord& w, std::int64_t p, int precision) {
  PadicFramedBraid out = identity(w.strands(), p, precision);
  Perm transport(w.strands());
  for (const auto& letter : w.letters()) {
    if (const auto* f = std::get_if<FramingLetter>(&letter)) {
      PadicApprox e = PadicApprox::zero(p, precision);
      if (const auto* k = std::get_if<std::int64_t>(&f->exponent)) {
        e = PadicApprox::from_int(*k, p, precision);
      } else {
        const auto& a = std::get<PadicApprox>(f->exponent);
        if (a.prime() != p) throw MismatchError("p-adic framing over a different prime");
        if (a.precision() < precision) {
          throw PrecisionError("p-adic framing has precision " + std::to_string(a.precision()) + " < " +
                               std::to_string(precision));
        }
        e = theta(a, precision);
      }
      auto& slot = out.framings[transport(f->index) - 1];
      slot = padic_add(slot, e);
    } else {
      const auto& b = std::get<BraidLetter>(letter);
      push_reduced(out.braid, b);
      transport = perm_times_s(transport, b.index);
    }
  }
  return out;
}

PadicFramedBraid padic_multiply(const PadicFramedBraid& x, const PadicFramedBraid& y) {
  if (x.n != y.n) throw MismatchError("multiplying p-adic framed braids on different strand counts");
  if (x.prime() != y.prime() || x.precision() != y.precision()) {
    throw MismatchError("multiplying p-adic framed braids with different (p, R)");
  }
  PadicFramedBraid out = x;
  const Perm transport = braid_permutation(x.n, x.braid);
  for (int j = 1; j <= x.n; ++j) {
    auto& slot = out.framings[transport(j) - 1];
    slot = padic_add(slot, y.framings[j - 1]);
  }
  for (const auto& l : y.braid) push_reduced(out.braid, l);
  return out;
}

SplitFramedBraid padic_project(const PadicFramedBraid& x, int r) {
  SplitFramedBraid out = SplitFramedBraid::identity(x.n, checked_pow(x.prime(), r));
  for (int i = 0; i < x.n; ++i) out.framing[i] = x.framings[i].residue(r);
  out.braid = x.braid;
  return out;
}

SplitFramedBraid padic_approximant(const PadicFramedBraid& x, int k) {
  SplitFramedBraid out = padic_project(x, k);
  out.modulus = 0;
  return out;
}

FramedBraidWord elementary_framing_word(int i, int n) {
  check_strands(n);
  if (i < 1 || i > n) throw ParameterError("elementary framing index outside 1..n");
  std::vector<Letter> letters;
  for (int j = i - 1; j >= 1; --j) letters.emplace_back(BraidLetter{j, 1});
  letters.emplace_back(FramingLetter{1, std::int64_t{1}});
  for (int j = 1; j <= i - 1; ++j) letters.emplace_back(BraidLetter{j, -1});
  return FramedBraidWord(n, std::move(letters));
}

}  // namespace yh
