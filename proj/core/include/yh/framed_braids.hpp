#pragma once

// Framed braid words and their split form (framing vector, braid word) in
// F_n = Z^n x| B_n, the modular groups F_{d,n}, and the truncated p-adic
// groups F_{infty,n} = Z_p^n x| B_n.
//
// Transport convention: moving a framing f_j^e leftwards past a braid b
// places it on strand pi(b)(j), i.e. b * f_j^e = f_{pi(b)(j)}^e * b, where
// pi(b) is the product of the s_i of b in word order. Equality of framed
// braids is equality of framing vectors plus letter-for-letter equality of
// the freely reduced braid words.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "yh/padic.hpp"
#include "yh/symmetric.hpp"

namespace yh {

struct BraidLetter {
  int index;  // sigma_index, 1 <= index <= n-1
  int sign;   // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

using FramingExponent = std::variant<std::int64_t, PadicApprox>;

struct FramingLetter {
  int index;  // f_index, 1 <= index <= n
  FramingExponent exponent;
  friend bool operator==(const FramingLetter&, const FramingLetter&) = default;
};

using Letter = std::variant<FramingLetter, BraidLetter>;

using BraidWord = std::vector<BraidLetter>;

class FramedBraidWord {
public:
  explicit FramedBraidWord(int n, std::vector<Letter> letters = {});

  // Whitespace-separated tokens: f<i>^<e>, f<i>, f<i>^{p^R:d0,...}, s<i>,
  // s<i>^-1, s<i>^1. An empty string is the identity.
  static FramedBraidWord parse(int n, std::string_view text);

  int strands() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool has_padic_framings() const;

  FramedBraidWord operator*(const FramedBraidWord& o) const;
  FramedBraidWord inverse() const;

  std::string str() const;

private:
  int n_;
  std::vector<Letter> letters_;
};

// Cancels adjacent sigma_i sigma_i^{-1} pairs until none remain.
BraidWord free_reduce(BraidWord word);
BraidWord braid_inverse(const BraidWord& word);
// Image of the braid in S_n.
Perm braid_permutation(int n, const BraidWord& word);

// Element of F_n (modulus == 0) or F_{d,n} (modulus == d, framings in [0, d)).
struct SplitFramedBraid {
  int n = 1;
  std::int64_t modulus = 0;
  std::vector<std::int64_t> framing;
  BraidWord braid;

  static SplitFramedBraid identity(int n, std::int64_t modulus = 0);

  friend bool operator==(const SplitFramedBraid&, const SplitFramedBraid&) = default;
  std::string str() const;
};

// Pushes every framing letter to the left; p-adic exponents are rejected.
SplitFramedBraid split(const FramedBraidWord& w);
SplitFramedBraid multiply_split(const SplitFramedBraid& x, const SplitFramedBraid& y);
SplitFramedBraid inverse_split(const SplitFramedBraid& x);
SplitFramedBraid project_modular(const SplitFramedBraid& x, std::int64_t d);
// F_{p^r,n} -> F_{p^s,n}; x.modulus must be a power p^r with s <= r.
SplitFramedBraid pi_level_map(const SplitFramedBraid& x, std::int64_t p, int s);
// Back to a word f_1^{a_1} ... f_n^{a_n} * braid.
FramedBraidWord to_word(const SplitFramedBraid& x);

struct PadicFramedBraid {
  int n;
  std::vector<PadicApprox> framings;
  BraidWord braid;

  // Zero framings at (p, R) and the empty braid.
  static PadicFramedBraid identity(int n, std::int64_t p, int precision);
  // Splits a word whose framing exponents are integers or p-adic values.
  static PadicFramedBraid from_word(const FramedBraidWord& w, std::int64_t p, int precision);

  std::int64_t prime() const { return framings.front().prime(); }
  int precision() const { return framings.front().precision(); }

  friend bool operator==(const PadicFramedBraid&, const PadicFramedBraid&) = default;
};

PadicFramedBraid padic_multiply(const PadicFramedBraid& x, const PadicFramedBraid& y);
// Image in F_{p^r,n}.
SplitFramedBraid padic_project(const PadicFramedBraid& x, int r);
// Classical framed braid with integer framings a_{k,i} = residue(framing_i, k).
SplitFramedBraid padic_approximant(const PadicFramedBraid& x, int k);

// sigma_{i-1} ... sigma_1 f_1 sigma_1^{-1} ... sigma_{i-1}^{-1}
FramedBraidWord elementary_framing_word(int i, int n);

}  // namespace yh
