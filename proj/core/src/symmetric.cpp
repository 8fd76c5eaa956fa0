#include "yh/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "yh/error.hpp"

namespace yh {

Perm::Perm(int n) : images_(n) {
  if (n < 1) throw ParameterError("permutation size must be >= 1");
  std::iota(images_.begin(), images_.end(), 1);
}

Perm Perm::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw ParameterError("permutation size must be >= 1");
  std::vector<bool> seen(n, false);
  for (int x : images) {
    if (x < 1 || x > n || seen[x - 1]) throw ParameterError("not a permutation of 1..n");
    seen[x - 1] = true;
  }
  Perm w(n);
  w.images_ = std::move(images);
  return w;
}

Perm Perm::transposition(int n, int i) {
  if (i < 1 || i >= n) throw ParameterError("s_" + std::to_string(i) + " not in S_" + std::to_string(n));
  Perm w(n);
  std::swap(w.images_[i - 1], w.images_[i]);
  return w;
}

Perm Perm::parse(std::string_view text) {
  std::size_t a = text.find('[');
  std::size_t b = text.rfind(']');
  if (a == std::string_view::npos || b == std::string_view::npos || b < a) {
    throw ParseError("permutation must be written [w1,...,wn]", 1);
  }
  std::vector<int> images;
  std::string body(text.substr(a + 1, b - a - 1));
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream in(body);
  int x;
  while (in >> x) images.push_back(x);
  if (!in.eof()) throw ParseError("bad permutation entry", a + 2);
  try {
    return from_images(std::move(images));
  } catch (const ParameterError& e) {
    throw ParseError(e.what(), a + 1);
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

std::string Perm::str() const {
  std::string out = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

Perm perm_compose(const Perm& w, const Perm& v) {
  if (w.size() != v.size()) throw MismatchError("composing permutations of different sizes");
  std::vector<int> out(w.size());
  for (int i = 1; i <= w.size(); ++i) out[i - 1] = w(v(i));
  return Perm::from_images(std::move(out));
}

Perm perm_inverse(const Perm& w) {
  std::vector<int> out(w.size());
  for (int i = 1; i <= w.size(); ++i) out[w(i) - 1] = i;
  return Perm::from_images(std::move(out));
}

int perm_apply(const Perm& w, int j) {
  if (j < 1 || j > w.size()) throw ParameterError("index outside 1..n");
  return w(j);
}

Perm perm_times_s(const Perm& w, int i) {
  if (i < 1 || i >= w.size()) throw ParameterError("s_" + std::to_string(i) + " not in S_" + std::to_string(w.size()));
  std::vector<int> out = w.images();
  std::swap(out[i - 1], out[i]);
  return Perm::from_images(std::move(out));
}

int length(const Perm& w) {
  int inversions = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++inversions;
  return inversions;
}

bool right_descent(const Perm& w, int i) {
  if (i < 1 || i >= w.size()) throw ParameterError("descent index outside 1..n-1");
  return w(i) > w(i + 1);
}

Perm perm_embed(const Perm& w, int n) {
  if (n < w.size()) throw ParameterError("cannot embed into a smaller symmetric group");
  std::vector<int> out = w.images();
  for (int i = w.size() + 1; i <= n; ++i) out.push_back(i);
  return Perm::from_images(std::move(out));
}

Perm perm_restrict(const Perm& w) {
  const int n = w.size();
  if (n < 2 || w(n) != n) throw ParameterError("permutation does not fix its top point");
  return Perm::from_images(std::vector<int>(w.images().begin(), w.images().end() - 1));
}

Perm staircase(int n, int k) {
  if (k < 1 || k > n) throw ParameterError("staircase index outside 1..n");
  // c_k(i) = i for i < k, c_k(k) = n, c_k(i) = i - 1 for i > k.
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = i < k ? i : (i == k ? n : i - 1);
  return Perm::from_images(std::move(out));
}

CosetDecomposition coset_decompose(const Perm& w) {
  const int n = w.size();
  if (n < 2) throw ParameterError("coset decomposition needs n >= 2");
  if (w(n) == n) return InSubgroup{perm_restrict(w)};
  int k = 1;
  while (w(k) != n) ++k;
  // v = w * c_k^{-1}; v(n) = w(k) = n.
  Perm v = perm_compose(w, perm_inverse(staircase(n, k)));
  return CosetSplit{perm_restrict(v), k};
}

std::vector<int> reduced_word(const Perm& w) {
  Perm current = w;
  // Peel staircases off the right, top strand first; collected in reverse.
  std::vector<std::vector<int>> blocks;
  while (current.size() >= 2) {
    const int n = current.size();
    auto dec = coset_decompose(current);
    if (auto* split = std::get_if<CosetSplit>(&dec)) {
      std::vector<int> block;
      for (int i = n - 1; i >= split->k; --i) block.push_back(i);
      blocks.push_back(std::move(block));
      current = split->v;
    } else {
      current = std::get<InSubgroup>(dec).restricted;
    }
  }
  std::vector<int> word;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  return word;
}

Perm word_to_perm(int n, const std::vector<int>& word) {
  Perm w(n);
  for (int i : word) w = perm_times_s(w, i);
  return w;
}

}  // namespace yh
