#pragma once

// Exterior algebra on circle variables x_0..x_{n-1}.  A word is stored as a
// bitmask of its (strictly increasing) indices.

#include "okh/number.hpp"
#include "okh/sparse.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace okh {

using Word = std::uint64_t;

inline int degree(Word w) { return std::popcount(w); }

inline bool has(Word w, int i) { return (w >> i) & 1U; }

/// Sign of x_a wedge x_b relative to the sorted word a|b, or 0 when they share a variable.
int wedge_sign(Word a, Word b);

/// Sign picked up by x_i contracting w (requires i in w).
inline int contract_sign(Word w, int i) {
  return (std::popcount(w & ((Word{1} << i) - 1)) & 1) ? -1 : 1;
}

/// Sparse element of the exterior algebra on n generators.
class ExtElement {
 public:
  explicit ExtElement(int n = 0) : n_(n) {}
  static ExtElement word(int n, Word w, Rational c = 1);
  static ExtElement variable(int n, int i);

  int ambient() const { return n_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Word w) const;

  void add(Word w, const Rational& c);
  ExtElement& operator+=(const ExtElement& o);
  ExtElement& operator-=(const ExtElement& o);
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(const Rational& c, const ExtElement& a);
  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  std::map<Word, Rational> terms_;
};

ExtElement wedge(const ExtElement& u, const ExtElement& v);
ExtElement contract(int i, const ExtElement& v);

/// Parameters of the representation V^{nu;z}: z = sum_j z[j] x_j.
struct RepData {
  Rational nu;
  std::vector<Rational> z;

  Rational epsilon() const;
};

enum class Generator { E, F, H1, H2 };

/// Action of a gl(1|1) generator; h1/h2 require word-degree homogeneous input.
ExtElement act(Generator g, const RepData& rep, const ExtElement& v);

/// x-bar restricted along `target`: variable i goes to target[i]; repeated variables give 0.
ExtElement substitute(std::span<const int> target, int target_n, const ExtElement& v);

/// Merge: y1, y2 of the source both become y; other circles follow `target`.
ExtElement merge_map(std::span<const int> target, int target_n, const ExtElement& v);

/// Split: (x_{y1} - x_{y2}) wedge v|_{y -> y1}; `target` sends y to y1.
ExtElement split_map(std::span<const int> target, int target_n, int y1, int y2,
                     const ExtElement& v);

// Matrix forms on the word basis, columns and rows indexed by mask value.

/// Substitution matrix of size 2^{target_n} x 2^{source_n}.
IntMatrix substitution_matrix(std::span<const int> target, int target_n);

/// Left multiplication by sum_j coeffs[j] x_j on 2^n words.
template <class T>
SparseMatrix<T> wedge_matrix(const std::vector<T>& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  const int dim = 1 << n;
  SparseMatrix<T> m(dim, dim);
  for (Word w = 0; w < static_cast<Word>(dim); ++w) {
    SparseVec<T> col;
    for (int j = 0; j < n; ++j) {
      if (coeffs[j] == 0 || has(w, j)) continue;
      const int s = wedge_sign(Word{1} << j, w);
      col.push_back({static_cast<int>(w | (Word{1} << j)), s > 0 ? T(coeffs[j]) : T(-coeffs[j])});
    }
    m.set_column(static_cast<int>(w), std::move(col));
  }
  return m;
}

/// e = sum_j x_j contraction on 2^n words.
IntMatrix contraction_sum_matrix(int n);

}  // namespace okh
