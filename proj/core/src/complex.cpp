#include "okh/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace okh {

std::vector<int> BigradedComplex::indices_at(int hh, int qq) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (h[i] == hh && q[i] == qq) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<int, int>> BigradedComplex::bidegrees() const {
  std::set<std::pair<int, int>> s;
  for (int i = 0; i < size(); ++i) s.insert({h[i], q[i]});
  return {s.begin(), s.end()};
}

namespace {

std::vector<int> vertex_offsets(const StateCube& cube) {
  std::vector<int> off(cube.vertex_count() + 1, 0);
  for (int v = 0; v < cube.vertex_count(); ++v) off[v + 1] = off[v] + cube.vertex(v).dim();
  return off;
}

}  // namespace

BigradedComplex assemble_complex(const StateCube& cube, const EdgeSigns& es) {
  const auto off = vertex_offsets(cube);
  BigradedComplex cx;
  const int n = off.back();
  cx.labels.resize(n);
  cx.h.resize(n);
  cx.q.resize(n);
  for (int v = 0; v < cube.vertex_count(); ++v) {
    const auto& vx = cube.vertex(v);
    for (int w = 0; w < vx.dim(); ++w) {
      const int i = off[v] + w;
      cx.labels[i] = {v, static_cast<Word>(w)};
      cx.h[i] = vx.h;
      cx.q[i] = vx.q_of(static_cast<Word>(w));
    }
  }
  if (cube.vertex_count() > 0) {
    cx.q_shift = cube.vertex(0).q_shift;
    cx.n_minus = -cube.vertex(0).h;
  }
  std::vector<SparseVec<Integer>> cols(n);
  for (int ei = 0; ei < cube.edge_count(); ++ei) {
    const auto& e = cube.edge(ei);
    const Integer s = es.sign.at(ei);
    for (int c = 0; c < e.map.cols(); ++c) {
      for (const auto& entry : e.map.column(c)) {
        cols[off[e.from] + c].push_back({off[e.to] + entry.index, s * entry.value});
      }
    }
  }
  cx.d = IntMatrix(n, n);
  for (int c = 0; c < n; ++c) cx.d.set_column(c, std::move(cols[c]));
  return cx;
}

ChainMap assemble_action(const BigradedComplex& cx, const StateCube& cube, ActionGenerator g,
                         const std::vector<int>& sigma) {
  const auto off = vertex_offsets(cube);
  const int n = cx.size();
  if (n != off.back()) throw std::invalid_argument("assemble_action: complex does not match cube");
  ChainMap out;
  out.m = RatMatrix(n, n);
  switch (g) {
    case ActionGenerator::E: out.name = "e"; out.dq = -2; break;
    case ActionGenerator::F: out.name = "f"; out.dq = 2; break;
    case ActionGenerator::H1: out.name = "h1"; break;
    case ActionGenerator::H2: out.name = "h2"; break;
  }
  for (int v = 0; v < cube.vertex_count(); ++v) {
    const auto& vx = cube.vertex(v);
    const RepData rep = vx.rep();
    const Rational eps = rep.epsilon();
    RatMatrix block;
    if (g == ActionGenerator::F) block = wedge_matrix(vx.z);
    if (g == ActionGenerator::E) block = contraction_sum_matrix(vx.circles).cast<Rational>();
    for (int w = 0; w < vx.dim(); ++w) {
      SparseVec<Rational> col;
      if (g == ActionGenerator::H1 || g == ActionGenerator::H2) {
        const int deg = degree(static_cast<Word>(w));
        const Rational weight = g == ActionGenerator::H1 ? Rational(eps - deg - rep.nu)
                                                          : Rational(deg + rep.nu);
        col.push_back({off[v] + w, weight});
      } else {
        for (const auto& e : block.column(w)) {
          col.push_back({off[v] + e.index, sigma.at(v) > 0 ? e.value : Rational(-e.value)});
        }
      }
      out.m.set_column(off[v] + w, std::move(col));
    }
  }
  return out;
}

std::string DSquaredReport::describe(const BigradedComplex& cx) const {
  if (ok) return "d^2 = 0";
  std::ostringstream s;
  s << "d^2 != 0: entry " << value << " from generator " << col << " (vertex "
    << cx.labels[col].vertex << ") to generator " << row << " (vertex " << cx.labels[row].vertex
    << ")";
  return s.str();
}

DSquaredReport check_d_squared(const BigradedComplex& cx) {
  DSquaredReport rep;
  const IntMatrix dd = cx.d * cx.d;
  if (auto nz = dd.first_nonzero()) {
    rep.ok = false;
    rep.row = nz->first;
    rep.col = nz->second;
    rep.value = dd.at(nz->first, nz->second);
  }
  return rep;
}

bool is_chain_map(const BigradedComplex& cx, const ChainMap& phi) {
  for (int c = 0; c < phi.m.cols(); ++c) {
    for (const auto& e : phi.m.column(c)) {
      if (cx.h[e.index] != cx.h[c] + phi.dh || cx.q[e.index] != cx.q[c] + phi.dq) return false;
    }
  }
  const RatMatrix d = cx.d.cast<Rational>();
  return d * phi.m == phi.m * d;
}

namespace {

// Mutable sparse square matrix with row and column access.
template <class T>
class DynMatrix {
 public:
  explicit DynMatrix(int n) : cols_(n), rows_(n) {}

  template <class S>
  static DynMatrix from(const SparseMatrix<S>& m, auto convert) {
    DynMatrix out(m.cols());
    for (int c = 0; c < m.cols(); ++c) {
      for (const auto& e : m.column(c)) out.set(e.index, c, convert(e.value));
    }
    return out;
  }

  void set(int r, int c, T v) {
    if (v == 0) {
      cols_[c].erase(r);
      rows_[r].erase(c);
    } else {
      cols_[c][r] = v;
      rows_[r][c] = std::move(v);
    }
  }
  void add(int r, int c, const T& v) {
    if (v == 0) return;
    auto it = cols_[c].find(r);
    if (it == cols_[c].end()) {
      set(r, c, v);
      return;
    }
    T nv = it->second + v;
    set(r, c, std::move(nv));
  }
  const std::unordered_map<int, T>& col(int c) const { return cols_[c]; }
  const std::unordered_map<int, T>& row(int r) const { return rows_[r]; }

  void drop(int i) {
    for (const auto& [r, v] : cols_[i]) rows_[r].erase(i);
    for (const auto& [c, v] : rows_[i]) cols_[c].erase(i);
    cols_[i].clear();
    rows_[i].clear();
  }

  SparseMatrix<T> compress(const std::vector<int>& keep) const {
    std::vector<int> pos(cols_.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
    SparseMatrix<T> out(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) {
      SparseVec<T> col;
      for (const auto& [r, v] : cols_[keep[j]]) {
        if (pos[r] >= 0) col.push_back({pos[r], v});
      }
      out.set_column(static_cast<int>(j), std::move(col));
    }
    return out;
  }

 private:
  std::vector<std::unordered_map<int, T>> cols_;
  std::vector<std::unordered_map<int, T>> rows_;
};

template <class T>
EliminationResult eliminate_impl(const BigradedComplex& cx, const std::vector<ChainMap>& maps) {
  const int n = cx.size();
  DynMatrix<Integer> d = DynMatrix<Integer>::from(cx.d, [](const Integer& v) { return v; });
  std::vector<DynMatrix<T>> phi;
  for (const auto& m : maps) {
    phi.push_back(DynMatrix<T>::from(m.m, [](const Rational& v) {
      if constexpr (std::is_same_v<T, Integer>) {
        return to_integer(v);
      } else {
        return v;
      }
    }));
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(cx.h[a], cx.q[a], a) < std::tie(cx.h[b], cx.q[b], b);
  });
  std::vector<char> alive(n, 1);
  int cancellations = 0;

  bool progress = true;
  while (progress) {
    progress = false;
    for (int x : order) {
      if (!alive[x]) continue;
      int y = -1;
      for (const auto& [r, v] : d.col(x)) {
        if ((v == 1 || v == -1) && (y < 0 || r < y)) y = r;
      }
      if (y < 0) continue;
      const Integer u = d.col(x).at(y);  // u^{-1} = u
      std::vector<std::pair<int, Integer>> colx(d.col(x).begin(), d.col(x).end());
      std::vector<std::pair<int, Integer>> rowy(d.row(y).begin(), d.row(y).end());

      for (auto& p : phi) {
        // p~ = p (1 - h d): p~[b,a] = p[b,a] - u p[b,x] d[y,a]
        std::vector<std::pair<int, T>> pcol(p.col(x).begin(), p.col(x).end());
        for (const auto& [b, pbx] : pcol) {
          if (b == x) continue;
          for (const auto& [a, dya] : rowy) {
            if (a == x || a == y) continue;
            p.add(b, a, T(-(u * dya)) * pbx);
          }
        }
        // p' = (1 - d h) p~: p'[b,a] = p~[b,a] - u d[b,x] p~[y,a]
        std::vector<std::pair<int, T>> prow(p.row(y).begin(), p.row(y).end());
        for (const auto& [b, dbx] : colx) {
          if (b == x || b == y) continue;
          for (const auto& [a, pya] : prow) {
            if (a == x || a == y) continue;
            p.add(b, a, T(-(u * dbx)) * pya);
          }
        }
        p.drop(x);
        p.drop(y);
      }
      for (const auto& [b, dbx] : colx) {
        if (b == x || b == y) continue;
        for (const auto& [a, dya] : rowy) {
          if (a == x || a == y) continue;
          d.add(b, a, -(u * dbx * dya));
        }
      }
      d.drop(x);
      d.drop(y);
      alive[x] = alive[y] = 0;
      ++cancellations;
      progress = true;
    }
  }

  std::vector<int> keep;
  for (int i = 0; i < n; ++i) {
    if (alive[i]) keep.push_back(i);
  }
  EliminationResult out;
  out.cancellations = cancellations;
  auto& rc = out.complex;
  rc.n_minus = cx.n_minus;
  rc.q_shift = cx.q_shift;
  for (int i : keep) {
    rc.labels.push_back(cx.labels[i]);
    rc.h.push_back(cx.h[i]);
    rc.q.push_back(cx.q[i]);
  }
  rc.d = d.compress(keep);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    ChainMap m = maps[k];
    if constexpr (std::is_same_v<T, Integer>) {
      m.m = phi[k].compress(keep).template cast<Rational>();
    } else {
      m.m = phi[k].compress(keep);
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

bool all_integral(const std::vector<ChainMap>& maps) {
  for (const auto& m : maps) {
    for (int c = 0; c < m.m.cols(); ++c) {
      for (const auto& e : m.m.column(c)) {
        if (!is_integral(e.value)) return false;
      }
    }
  }
  return true;
}

}  // namespace

EliminationResult gaussian_eliminate(const BigradedComplex& cx, const std::vector<ChainMap>& maps) {
  if (all_integral(maps)) return eliminate_impl<Integer>(cx, maps);
  return eliminate_impl<Rational>(cx, maps);
}

ReducedResult reduced_complex(const BigradedComplex& cx, const StateCube& cube, const ChainMap& e,
                              const std::vector<ChainMap>& maps) {
  if (!is_chain_map(cx, e)) throw std::invalid_argument("reduced_complex: e is not a chain map");
  const auto off = vertex_offsets(cube);
  if (off.back() != cx.size()) throw std::invalid_argument("reduced_complex: complex does not match cube");

  // Embedding B (full <- reduced) and extraction P (reduced <- full).
  std::vector<SparseVec<Rational>> bcols;
  std::vector<std::pair<int, int>> pentries;  // (reduced index, full index)
  ReducedResult out;
  auto& rc = out.complex;
  rc.n_minus = cx.n_minus;
  rc.q_shift = cx.q_shift;
  for (int v = 0; v < cube.vertex_count(); ++v) {
    const auto& vx = cube.vertex(v);
    const int c = vx.circles;
    if (c == 0) continue;
    for (Word s = 0; s < (Word{1} << c); s += 2) {
      ExtElement b = ExtElement::word(c, 0);
      for (int i = 1; i < c; ++i) {
        if (!has(s, i)) continue;
        ExtElement diff(c);
        diff.add(Word{1} << i, 1);
        diff.add(Word{1}, -1);
        b = wedge(b, diff);
      }
      const int idx = rc.size();
      SparseVec<Rational> col;
      for (const auto& [w, coef] : b.terms()) col.push_back({off[v] + static_cast<int>(w), coef});
      bcols.push_back(std::move(col));
      pentries.push_back({idx, off[v] + static_cast<int>(s)});
      rc.labels.push_back({v, s});
      rc.h.push_back(vx.h);
      rc.q.push_back(vx.q_of(s));
    }
  }
  const int nr = rc.size();
  RatMatrix b(cx.size(), nr);
  for (int j = 0; j < nr; ++j) b.set_column(j, std::move(bcols[j]));
  RatMatrix p(nr, cx.size());
  for (const auto& [r, c] : pentries) p.set_column(c, {{r, Rational(1)}});

  if (!(e.m * b).is_zero()) throw std::logic_error("reduced_complex: basis is not in ker e");
  rc.d = to_integer_matrix(p * cx.d.cast<Rational>() * b);
  for (const auto& m : maps) {
    const RatMatrix mb = m.m * b;
    if (!(e.m * mb).is_zero()) continue;  // does not preserve ker e
    ChainMap r = m;
    r.m = p * mb;
    out.maps.push_back(std::move(r));
  }
  return out;
}

}  // namespace okh
