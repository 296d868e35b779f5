#include "okh/exterior.hpp"

namespace okh {

int wedge_sign(Word a, Word b) {
  if (a & b) return 0;
  // Each variable of b must move left past the variables of a that are larger.
  int swaps = 0;
  for (Word rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

ExtElement ExtElement::word(int n, Word w, Rational c) {
  ExtElement e(n);
  e.add(w, c);
  return e;
}

ExtElement ExtElement::variable(int n, int i) {
  if (i < 0 || i >= n) throw std::out_of_range("variable index out of range");
  return word(n, Word{1} << i);
}

Rational ExtElement::coefficient(Word w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExtElement::add(Word w, const Rational& c) {
  if (n_ < 64 && (w >> n_) != 0) throw std::out_of_range("word uses a variable beyond ambient size");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExtElement& ExtElement::operator+=(const ExtElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("ambient size mismatch");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("ambient size mismatch");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

ExtElement operator*(const Rational& c, const ExtElement& a) {
  ExtElement out(a.n_);
  if (c == 0) return out;
  for (const auto& [w, v] : a.terms_) out.terms_.emplace(w, c * v);
  return out;
}

ExtElement wedge(const ExtElement& u, const ExtElement& v) {
  if (u.ambient() != v.ambient()) throw std::invalid_argument("wedge: ambient size mismatch");
  ExtElement out(u.ambient());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      const int s = wedge_sign(a, b);
      if (s != 0) out.add(a | b, s * ca * cb);
    }
  }
  return out;
}

ExtElement contract(int i, const ExtElement& v) {
  if (i < 0 || i >= v.ambient()) throw std::out_of_range("contract: index out of range");
  ExtElement out(v.ambient());
  for (const auto& [w, c] : v.terms()) {
    if (has(w, i)) out.add(w & ~(Word{1} << i), contract_sign(w, i) * c);
  }
  return out;
}

Rational RepData::epsilon() const {
  Rational s = 0;
  for (const auto& c : z) s += c;
  return s;
}

ExtElement act(Generator g, const RepData& rep, const ExtElement& v) {
  const int n = v.ambient();
  if (static_cast<int>(rep.z.size()) != n) throw std::invalid_argument("act: z has wrong length");
  switch (g) {
    case Generator::F: {
      ExtElement z(n);
      for (int j = 0; j < n; ++j) z.add(Word{1} << j, rep.z[j]);
      return wedge(z, v);
    }
    case Generator::E: {
      ExtElement out(n);
      for (int j = 0; j < n; ++j) out += contract(j, v);
      return out;
    }
    case Generator::H1:
    case Generator::H2: {
      if (v.is_zero()) return v;
      const int d = degree(v.terms().begin()->first);
      for (const auto& [w, c] : v.terms()) {
        if (degree(w) != d) throw std::invalid_argument("act: h1/h2 need a homogeneous element");
      }
      const Rational weight =
          g == Generator::H1 ? Rational(rep.epsilon() - d - rep.nu) : Rational(d + rep.nu);
      return weight * v;
    }
  }
  throw std::invalid_argument("act: unknown generator");
}

namespace {

// Image of a word under an index map: sorted mask and permutation sign (0 on collision).
std::pair<Word, int> substitute_word(Word w, std::span<const int> target) {
  Word out = 0;
  int sign = 1;
  for (Word rest = w; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    const Word bit = Word{1} << target[i];
    if (out & bit) return {0, 0};
    // Appending on the right: move past every larger index already present.
    if (std::popcount(out >> (target[i] + 1)) & 1) sign = -sign;
    out |= bit;
  }
  return {out, sign};
}

}  // namespace

ExtElement substitute(std::span<const int> target, int target_n, const ExtElement& v) {
  ExtElement out(target_n);
  for (const auto& [w, c] : v.terms()) {
    const auto [img, s] = substitute_word(w, target);
    if (s != 0) out.add(img, s * c);
  }
  return out;
}

ExtElement merge_map(std::span<const int> target, int target_n, const ExtElement& v) {
  return substitute(target, target_n, v);
}

ExtElement split_map(std::span<const int> target, int target_n, int y1, int y2,
                     const ExtElement& v) {
  ExtElement diff(target_n);
  diff.add(Word{1} << y1, 1);
  diff.add(Word{1} << y2, -1);
  return wedge(diff, substitute(target, target_n, v));
}

IntMatrix substitution_matrix(std::span<const int> target, int target_n) {
  const int source_n = static_cast<int>(target.size());
  IntMatrix m(1 << target_n, 1 << source_n);
  for (Word w = 0; w < (Word{1} << source_n); ++w) {
    const auto [img, s] = substitute_word(w, target);
    if (s != 0) m.set_column(static_cast<int>(w), {{static_cast<int>(img), Integer(s)}});
  }
  return m;
}

IntMatrix contraction_sum_matrix(int n) {
  const int dim = 1 << n;
  IntMatrix m(dim, dim);
  for (Word w = 0; w < static_cast<Word>(dim); ++w) {
    SparseVec<Integer> col;
    for (Word rest = w; rest; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      col.push_back({static_cast<int>(w & ~(Word{1} << i)), Integer(contract_sign(w, i))});
    }
    m.set_column(static_cast<int>(w), std::move(col));
  }
  return m;
}

IntMatrix to_integer_matrix(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    SparseVec<Integer> col;
    for (const auto& e : m.column(j)) col.push_back({e.index, to_integer(e.value)});
    out.set_column(j, std::move(col));
  }
  return out;
}

}  // namespace okh
