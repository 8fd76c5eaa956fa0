#pragma once

// Permutations of {1, ..., n}. Composition is function composition:
// (w * v)(i) = w(v(i)). The generator s_i swaps i and i+1.

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace yh {

class Perm {
public:
  // Identity of S_n.
  explicit Perm(int n = 1);
  // One-line notation w(1), ..., w(n); throws ParameterError unless a bijection.
  static Perm from_images(std::vector<int> images);
  static Perm transposition(int n, int i);  // s_i
  // Parses "[3,1,2]".
  static Perm parse(std::string_view text);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[j - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  // "[3,1,2]"
  std::string str() const;

private:
  std::vector<int> images_;
};

Perm perm_compose(const Perm& w, const Perm& v);
Perm perm_inverse(const Perm& w);
int perm_apply(const Perm& w, int j);

// w * s_i without allocating s_i.
Perm perm_times_s(const Perm& w, int i);

// Inversion count.
int length(const Perm& w);

// true iff length(w * s_i) < length(w), i.e. w(i) > w(i+1).
bool right_descent(const Perm& w, int i);

// Extends w in S_m to S_n by fixing m+1..n.
Perm perm_embed(const Perm& w, int n);
// Restricts w in S_n with w(n) = n to S_{n-1}.
Perm perm_restrict(const Perm& w);

// c_k = s_{n-1} * s_{n-2} * ... * s_k in S_n, so c_k(k) = n.
Perm staircase(int n, int k);

struct InSubgroup {
  Perm restricted;  // w viewed in S_{n-1}
};

struct CosetSplit {
  Perm v;  // in S_{n-1}
  int k;   // w = v * c_k, length(w) = length(v) + n - k
};

using CosetDecomposition = std::variant<InSubgroup, CosetSplit>;

// Requires n >= 2.
CosetDecomposition coset_decompose(const Perm& w);

// Canonical staircase reduced word: generator indices i_1, ..., i_l with
// w = s_{i_1} * ... * s_{i_l} and l = length(w).
std::vector<int> reduced_word(const Perm& w);

// Product s_{i_1} * ... * s_{i_l} in S_n.
Perm word_to_perm(int n, const std::vector<int>& word);

}  // namespace yh
