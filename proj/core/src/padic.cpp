#include "yh/padic.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "yh/coeff.hpp"
#include "yh/error.hpp"

namespace yh {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::int64_t checked_pow(std::int64_t p, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) {
    if (out > std::numeric_limits<std::int64_t>::max() / p) {
      throw PrecisionError(std::to_string(p) + "^" + std::to_string(e) + " overflows 63 bits");
    }
    out *= p;
  }
  return out;
}

PadicApprox::PadicApprox(std::int64_t p, std::vector<int> digits) : p_(p), digits_(std::move(digits)) {
  if (!is_prime(p_)) throw ParameterError("p-adic base " + std::to_string(p_) + " is not prime");
  if (digits_.empty()) throw ParameterError("p-adic precision must be >= 1");
  checked_pow(p_, precision());
  for (int d : digits_) {
    if (d < 0 || d >= p_) throw ParameterError("p-adic digit out of range [0, p)");
  }
}

PadicApprox PadicApprox::from_int(std::int64_t k, std::int64_t p, int precision) {
  if (p < 2 || !is_prime(p)) throw ParameterError("p-adic base " + std::to_string(p) + " is not prime");
  if (precision < 1) throw ParameterError("p-adic precision must be >= 1");
  const std::int64_t modulus = checked_pow(p, precision);
  std::int64_t v = mod_floor(k, modulus);
  std::vector<int> digits(precision);
  for (int i = 0; i < precision; ++i) {
    digits[i] = static_cast<int>(v % p);
    v /= p;
  }
  return PadicApprox(p, std::move(digits));
}

std::int64_t PadicApprox::residue(int r) const {
  if (r < 1 || r > precision()) {
    throw PrecisionError("level " + std::to_string(r) + " outside [1, " + std::to_string(precision()) + "]");
  }
  std::int64_t out = 0;
  std::int64_t place = 1;
  for (int i = 0; i < r; ++i) {
    out += digits_[i] * place;
    if (i + 1 < r) place *= p_;
  }
  return out;
}

bool PadicApprox::is_constant_below(int level) const {
  return std::all_of(digits_.begin() + std::min(level, precision()), digits_.end(),
                     [](int d) { return d == 0; });
}

std::string PadicApprox::str() const {
  std::string out = std::to_string(p_) + "^" + std::to_string(precision()) + ":";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(digits_[i]);
  }
  return out;
}

namespace {

std::int64_t parse_int(std::string_view s, std::size_t column) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("expected integer, got '" + std::string(s) + "'", column);
  }
  return v;
}

}  // namespace

PadicApprox PadicApprox::parse(std::string_view text) {
  const auto caret = text.find('^');
  const auto colon = text.find(':');
  if (caret == std::string_view::npos || colon == std::string_view::npos || colon < caret) {
    throw ParseError("p-adic value must look like p^R:d0,d1,...", 1);
  }
  const std::int64_t p = parse_int(text.substr(0, caret), 1);
  const std::int64_t r = parse_int(text.substr(caret + 1, colon - caret - 1), caret + 2);
  std::vector<int> digits;
  std::size_t start = colon + 1;
  for (;;) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    digits.push_back(static_cast<int>(parse_int(text.substr(start, end - start), start + 1)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<std::int64_t>(digits.size()) != r) {
    throw ParseError("p-adic value declares precision " + std::to_string(r) + " but lists " +
                         std::to_string(digits.size()) + " digits",
                     colon + 2);
  }
  return PadicApprox(p, std::move(digits));
}

PadicApprox theta(const PadicApprox& a, int s) {
  if (s < 1 || s > a.precision()) {
    throw PrecisionError("theta: level " + std::to_string(s) + " outside [1, " +
                         std::to_string(a.precision()) + "]");
  }
  return PadicApprox(a.prime(), std::vector<int>(a.digits().begin(), a.digits().begin() + s));
}

PadicApprox padic_add(const PadicApprox& a, const PadicApprox& b) {
  if (a.prime() != b.prime()) throw MismatchError("p-adic sum of different primes");
  const int precision = std::min(a.precision(), b.precision());
  const auto p = static_cast<int>(a.prime());
  std::vector<int> digits(precision);
  int carry = 0;
  for (int i = 0; i < precision; ++i) {
    const int s = a.digits()[i] + b.digits()[i] + carry;
    digits[i] = s % p;
    carry = s / p;
  }
  return PadicApprox(a.prime(), std::move(digits));
}

PadicApprox padic_neg(const PadicApprox& a) {
  // -a = (complement of each digit) + 1.
  const auto p = static_cast<int>(a.prime());
  std::vector<int> digits(a.precision());
  int carry = 1;
  for (int i = 0; i < a.precision(); ++i) {
    const int s = (p - 1 - a.digits()[i]) + carry;
    digits[i] = s % p;
    carry = s / p;
  }
  return PadicApprox(a.prime(), std::move(digits));
}

PadicApprox padic_sub(const PadicApprox& a, const PadicApprox& b) { return padic_add(a, padic_neg(b)); }

std::vector<Approximant> approx_sequence(const PadicApprox& a) {
  std::vector<Approximant> out;
  out.reserve(a.precision());
  for (int k = 1; k <= a.precision(); ++k) {
    out.push_back({k, PadicApprox::from_int(a.residue(k), a.prime(), a.precision())});
  }
  return out;
}

}  // namespace yh
