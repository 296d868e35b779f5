#include "okh/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace okh {

DenseInt to_dense(const IntMatrix& m) {
  DenseInt out(m.rows(), std::vector<Integer>(m.cols(), 0));
  for (int c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) out[e.index][c] = e.value;
  }
  return out;
}

DenseInt dense_identity(int n) {
  DenseInt out(n, std::vector<Integer>(n, 0));
  for (int i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

DenseInt dense_product(const DenseInt& a, const DenseInt& b, int inner) {
  const int rows = static_cast<int>(a.size());
  const int cols = b.empty() ? 0 : static_cast<int>(b[0].size());
  DenseInt out(rows, std::vector<Integer>(cols, 0));
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < cols; ++j) {
        if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

namespace {

class SmithWorker {
 public:
  SmithWorker(const DenseInt& m, int rows, int cols) : a_(m), rows_(rows), cols_(cols) {
    s_.rows = rows;
    s_.cols = cols;
    s_.u = s_.u_inv = dense_identity(rows);
    s_.v = s_.v_inv = dense_identity(cols);
  }

  SmithForm run() {
    const int limit = std::min(rows_, cols_);
    for (int t = 0; t < limit; ++t) {
      if (!bring_min_pivot(t, true)) break;
      while (true) {
        bool clean = true;
        for (int i = t + 1; i < rows_; ++i) {
          if (a_[i][t] == 0) continue;
          row_add(i, t, -(a_[i][t] / a_[t][t]));
          if (a_[i][t] != 0) clean = false;
        }
        for (int j = t + 1; j < cols_; ++j) {
          if (a_[t][j] == 0) continue;
          col_add(j, t, -(a_[t][j] / a_[t][t]));
          if (a_[t][j] != 0) clean = false;
        }
        if (!clean) {
          bring_min_pivot(t, false);
          continue;
        }
        bool divisible = true;
        for (int i = t + 1; i < rows_ && divisible; ++i) {
          for (int j = t + 1; j < cols_; ++j) {
            if (a_[i][j] != 0 && a_[i][j] % a_[t][t] != 0) {
              row_add(t, i, 1);
              divisible = false;
              break;
            }
          }
        }
        if (divisible) break;
      }
      if (a_[t][t] < 0) row_negate(t);
      s_.diagonal.push_back(a_[t][t]);
    }
    return std::move(s_);
  }

 private:
  // Moves the smallest nonzero entry of the active block (or of row/column t) to (t, t).
  bool bring_min_pivot(int t, bool whole_block) {
    int bi = -1, bj = -1;
    Integer best = 0;
    auto consider = [&](int i, int j) {
      if (a_[i][j] == 0) return;
      const Integer v = abs(a_[i][j]);
      if (bi < 0 || v < best) {
        best = v;
        bi = i;
        bj = j;
      }
    };
    if (whole_block) {
      for (int j = t; j < cols_; ++j) {
        for (int i = t; i < rows_; ++i) consider(i, j);
      }
    } else {
      for (int i = t; i < rows_; ++i) consider(i, t);
      for (int j = t + 1; j < cols_; ++j) consider(t, j);
    }
    if (bi < 0) return false;
    if (bi != t) row_swap(bi, t);
    if (bj != t) col_swap(bj, t);
    return true;
  }

  // row_i += c * row_k
  void row_add(int i, int k, const Integer& c) {
    if (c == 0) return;
    for (int j = 0; j < cols_; ++j) {
      if (a_[k][j] != 0) a_[i][j] += c * a_[k][j];
    }
    for (int j = 0; j < rows_; ++j) {
      if (s_.u[k][j] != 0) s_.u[i][j] += c * s_.u[k][j];
    }
    for (int j = 0; j < rows_; ++j) {
      if (s_.u_inv[j][i] != 0) s_.u_inv[j][k] -= c * s_.u_inv[j][i];
    }
  }
  void row_swap(int i, int k) {
    std::swap(a_[i], a_[k]);
    std::swap(s_.u[i], s_.u[k]);
    for (int j = 0; j < rows_; ++j) std::swap(s_.u_inv[j][i], s_.u_inv[j][k]);
  }
  void row_negate(int i) {
    for (auto& x : a_[i]) x = -x;
    for (auto& x : s_.u[i]) x = -x;
    for (int j = 0; j < rows_; ++j) s_.u_inv[j][i] = -s_.u_inv[j][i];
  }
  // col_j += c * col_k
  void col_add(int j, int k, const Integer& c) {
    if (c == 0) return;
    for (int i = 0; i < rows_; ++i) {
      if (a_[i][k] != 0) a_[i][j] += c * a_[i][k];
    }
    for (int i = 0; i < cols_; ++i) {
      if (s_.v[i][k] != 0) s_.v[i][j] += c * s_.v[i][k];
    }
    for (int i = 0; i < cols_; ++i) {
      if (s_.v_inv[j][i] != 0) s_.v_inv[k][i] -= c * s_.v_inv[j][i];
    }
  }
  void col_swap(int j, int k) {
    for (int i = 0; i < rows_; ++i) std::swap(a_[i][j], a_[i][k]);
    for (int i = 0; i < cols_; ++i) std::swap(s_.v[i][j], s_.v[i][k]);
    std::swap(s_.v_inv[j], s_.v_inv[k]);
  }

  DenseInt a_;
  int rows_;
  int cols_;
  SmithForm s_;
};

SparseVec<Integer> restrict_to(const SparseVec<Integer>& z, const std::vector<int>& basis) {
  SparseVec<Integer> out;
  for (const auto& e : z) {
    auto it = std::lower_bound(basis.begin(), basis.end(), e.index);
    if (it != basis.end() && *it == e.index) {
      out.push_back({static_cast<int>(it - basis.begin()), e.value});
    } else if (e.value != 0) {
      throw std::logic_error("vector leaves the expected bidegree");
    }
  }
  return out;
}

}  // namespace

SmithForm smith_normal_form(const DenseInt& m, int rows, int cols) {
  return SmithWorker(m, rows, cols).run();
}

SmithForm smith_normal_form(const IntMatrix& m) {
  return smith_normal_form(to_dense(m), m.rows(), m.cols());
}

bool verify_smith(const DenseInt& m, const SmithForm& s) {
  const DenseInt d = dense_product(dense_product(s.u, m, s.rows), s.v, s.cols);
  for (int i = 0; i < s.rows; ++i) {
    for (int j = 0; j < s.cols; ++j) {
      const Integer want = (i == j && i < s.rank()) ? s.diagonal[i] : Integer(0);
      if (d[i][j] != want) return false;
    }
  }
  for (int i = 0; i + 1 < s.rank(); ++i) {
    if (s.diagonal[i] <= 0 || s.diagonal[i + 1] % s.diagonal[i] != 0) return false;
  }
  const DenseInt iu = dense_product(s.u, s.u_inv, s.rows);
  const DenseInt iv = dense_product(s.v, s.v_inv, s.cols);
  return iu == dense_identity(s.rows) && iv == dense_identity(s.cols);
}

std::vector<Integer> HomologyGroup::class_of(const SparseVec<Integer>& z) const {
  const auto zb = restrict_to(z, basis);
  const int kr = static_cast<int>(kernel_coords.size());
  std::vector<Integer> c(kr, 0);
  for (int i = 0; i < kr; ++i) {
    for (const auto& e : zb) c[i] += kernel_coords[i][e.index] * e.value;
  }
  std::vector<Integer> out(orders.size(), 0);
  for (int i = 0; i < kr; ++i) {
    if (slot_of_row[i] < 0) continue;
    Integer y = 0;
    for (int k = 0; k < kr; ++k) y += relation_u[i][k] * c[k];
    const int slot = slot_of_row[i];
    out[slot] = orders[slot] == 0 ? y : mod_floor(y, orders[slot]);
  }
  return out;
}

const HomologyGroup* Homology::at(int h, int q) const {
  auto it = groups.find({h, q});
  return it == groups.end() ? nullptr : &it->second;
}

std::vector<Integer> Homology::all_torsion() const {
  std::vector<Integer> out;
  for (const auto& [key, g] : groups) out.insert(out.end(), g.torsion.begin(), g.torsion.end());
  std::sort(out.begin(), out.end());
  return out;
}

Homology homology_groups(const BigradedComplex& cx) {
  if (!check_d_squared(cx).ok) throw DSquaredError("homology_groups: d^2 != 0");
  Homology out;
  std::map<std::pair<int, int>, std::vector<int>> by_degree;
  for (int i = 0; i < cx.size(); ++i) by_degree[{cx.h[i], cx.q[i]}].push_back(i);
  auto block = [&](int h, int q) -> const std::vector<int>& {
    static const std::vector<int> empty;
    auto it = by_degree.find({h, q});
    return it == by_degree.end() ? empty : it->second;
  };

  for (const auto& [key, basis] : by_degree) {
    const auto [h, q] = key;
    const auto& next = block(h + 1, q);
    const auto& prev = block(h - 1, q);
    const int k = static_cast<int>(basis.size());

    const IntMatrix a = cx.d.submatrix(next, basis);
    const SmithForm sa = smith_normal_form(a);
    const int r = sa.rank();
    if (k - r == 0) continue;

    // Boundaries expressed in the kernel basis V[:, r:].
    const IntMatrix b = cx.d.submatrix(basis, prev);
    const DenseInt vb = dense_product(sa.v_inv, to_dense(b), k);
    DenseInt rel(k - r, std::vector<Integer>(prev.size(), 0));
    for (int i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < prev.size(); ++j) {
        if (vb[i][j] != 0) throw std::logic_error("boundary outside the kernel");
      }
    }
    for (int i = r; i < k; ++i) rel[i - r] = vb[i];
    const SmithForm sr = smith_normal_form(rel, k - r, static_cast<int>(prev.size()));

    HomologyGroup g;
    g.h = h;
    g.q = q;
    g.basis = basis;
    g.kernel_coords.assign(sa.v_inv.begin() + r, sa.v_inv.end());
    g.relation_u = sr.u;
    g.slot_of_row.assign(k - r, -1);
    for (int i = 0; i < k - r; ++i) {
      Integer order = 0;
      if (i < sr.rank()) {
        order = sr.diagonal[i];
        if (order == 1) continue;
        g.torsion.push_back(order);
      } else {
        ++g.free_rank;
      }
      g.slot_of_row[i] = static_cast<int>(g.orders.size());
      g.orders.push_back(order);
      // cycle = V[:, r:] * U'^{-1} e_i
      SparseVec<Integer> cyc;
      for (int row = 0; row < k; ++row) {
        Integer s = 0;
        for (int m = 0; m < k - r; ++m) {
          if (sr.u_inv[m][i] != 0) s += sa.v[row][r + m] * sr.u_inv[m][i];
        }
        if (s != 0) cyc.push_back({basis[row], s});
      }
      g.cycles.push_back(std::move(cyc));
    }
    if (g.orders.empty()) continue;
    out.groups.emplace(key, std::move(g));
  }
  return out;
}

std::map<std::pair<int, int>, InducedMap> induced_on_homology(const BigradedComplex& cx,
                                                              const ChainMap& phi,
                                                              const Homology& hom) {
  std::map<std::pair<int, int>, InducedMap> out;
  const IntMatrix m = to_integer_matrix(phi.m);
  for (const auto& [key, g] : hom.groups) {
    InducedMap im;
    im.h = g.h;
    im.q = g.q;
    im.dh = phi.dh;
    im.dq = phi.dq;
    const HomologyGroup* target = hom.at(g.h + phi.dh, g.q + phi.dq);
    const int rows = target ? static_cast<int>(target->orders.size()) : 0;
    im.matrix.assign(rows, std::vector<Integer>(g.orders.size(), 0));
    for (std::size_t s = 0; s < g.cycles.size(); ++s) {
      const SparseVec<Integer> image = m.apply(g.cycles[s]);
      if (!(cx.d.apply(image)).empty()) throw std::logic_error("induced map: image is not a cycle");
      if (!target) {
        continue;
      }
      const auto cls = target->class_of(image);
      for (int i = 0; i < rows; ++i) im.matrix[i][s] = cls[i];
    }
    out.emplace(key, std::move(im));
  }
  return out;
}

namespace {

// [F | relations] for a target group.
DenseInt with_relations(const DenseInt& f, const HomologyGroup& target, int source_slots) {
  const int m = static_cast<int>(target.orders.size());
  DenseInt out(m);
  for (int i = 0; i < m; ++i) {
    out[i] = i < static_cast<int>(f.size()) ? f[i] : std::vector<Integer>(source_slots, 0);
    for (int t = 0; t < m; ++t) {
      if (target.orders[t] != 0) out[i].push_back(i == t ? target.orders[t] : Integer(0));
    }
  }
  return out;
}

void split_invariants(const SmithForm& s, int total, int& free, std::vector<Integer>& torsion) {
  free = total - s.rank();
  torsion.clear();
  for (const auto& d : s.diagonal) {
    if (d != 1) torsion.push_back(d);
  }
}

}  // namespace

std::map<std::pair<int, int>, MapProfile> map_profile(
    const std::map<std::pair<int, int>, InducedMap>& induced, const Homology& hom) {
  std::map<std::pair<int, int>, MapProfile> out;
  for (const auto& [key, im] : induced) {
    MapProfile p;
    const HomologyGroup* target = hom.at(im.h + im.dh, im.q + im.dq);
    const int s = im.matrix.empty() ? 0 : static_cast<int>(im.matrix[0].size());
    if (target) {
      const int m = static_cast<int>(target->orders.size());
      const DenseInt mm = with_relations(im.matrix, *target, s);
      const int cols = mm.empty() ? 0 : static_cast<int>(mm[0].size());
      const SmithForm sm = smith_normal_form(mm, m, cols);
      split_invariants(sm, m, p.coker_free, p.coker_torsion);
      // Image = Z^s / {x : F x in relations}, read off the kernel of [F | R].
      DenseInt kgen(s);
      for (int i = 0; i < s; ++i) {
        for (int c = sm.rank(); c < cols; ++c) kgen[i].push_back(sm.v[i][c]);
      }
      const int kc = cols - sm.rank();
      const SmithForm sk = smith_normal_form(kgen, s, kc);
      split_invariants(sk, s, p.image_free, p.image_torsion);
    }
    out.emplace(key, std::move(p));
  }
  return out;
}

std::vector<TorsionWitness> torsion_witness(const Homology& hom,
                                            const std::map<std::pair<int, int>, InducedMap>& f_star,
                                            const Integer& n) {
  std::vector<TorsionWitness> out;
  for (const auto& [key, g] : hom.groups) {
    for (std::size_t slot = 0; slot < g.orders.size(); ++slot) {
      if (g.orders[slot] != n) continue;
      TorsionWitness w{g.h, g.q, n, false};
      // Find the map landing here.
      const InducedMap* f = nullptr;
      for (const auto& [skey, im] : f_star) {
        if (im.h + im.dh == g.h && im.q + im.dq == g.q) f = &im;
      }
      const int s = (f && !f->matrix.empty()) ? static_cast<int>(f->matrix[0].size()) : 0;
      const DenseInt mm = with_relations(f ? f->matrix : DenseInt{}, g, s);
      const int m = static_cast<int>(g.orders.size());
      const int cols = mm.empty() ? 0 : static_cast<int>(mm[0].size());
      const SmithForm sm = smith_normal_form(mm, m, cols);
      // Solvable iff U e_slot is divisible by the diagonal and vanishes past the rank.
      bool ok = true;
      for (int i = 0; i < m; ++i) {
        const Integer& y = sm.u[i][slot];
        if (i < sm.rank()) {
          if (y % sm.diagonal[i] != 0) ok = false;
        } else if (y != 0) {
          ok = false;
        }
      }
      w.in_image = ok;
      out.push_back(w);
    }
  }
  return out;
}

std::map<std::pair<int, int>, int> mod2_dimensions(const Homology& hom) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& [key, g] : hom.groups) {
    int even = 0;
    for (const auto& t : g.torsion) even += (t % 2 == 0) ? 1 : 0;
    out[key] += g.free_rank + even;
    // Tor(H^{h}, F2) contributes to H^{h-1}(C; F2).
    if (even > 0) out[{key.first - 1, key.second}] += even;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

int rank_mod2(const IntMatrix& m) {
  const int words = (m.rows() + 63) / 64;
  int rank = 0;
  std::vector<std::vector<std::uint64_t>> by_pivot(m.rows());
  for (int c = 0; c < m.cols(); ++c) {
    std::vector<std::uint64_t> v(words, 0);
    for (const auto& e : m.column(c)) {
      if (e.value % 2 != 0) v[e.index / 64] ^= std::uint64_t{1} << (e.index % 64);
    }
    while (true) {
      int p = -1;
      for (int w = 0; w < words; ++w) {
        if (v[w]) {
          p = w * 64 + std::countr_zero(v[w]);
          break;
        }
      }
      if (p < 0) break;
      if (by_pivot[p].empty()) {
        by_pivot[p] = std::move(v);
        ++rank;
        break;
      }
      for (int w = 0; w < words; ++w) v[w] ^= by_pivot[p][w];
    }
  }
  return rank;
}

}  // namespace

std::map<std::pair<int, int>, int> mod2_dimensions_direct(const BigradedComplex& cx) {
  std::map<std::pair<int, int>, std::vector<int>> by_degree;
  for (int i = 0; i < cx.size(); ++i) by_degree[{cx.h[i], cx.q[i]}].push_back(i);
  std::map<std::pair<int, int>, int> out;
  for (const auto& [key, basis] : by_degree) {
    const auto [h, q] = key;
    int dim = static_cast<int>(basis.size());
    if (auto it = by_degree.find({h + 1, q}); it != by_degree.end()) {
      dim -= rank_mod2(cx.d.submatrix(it->second, basis));
    }
    if (auto it = by_degree.find({h - 1, q}); it != by_degree.end()) {
      dim -= rank_mod2(cx.d.submatrix(basis, it->second));
    }
    if (dim != 0) out[key] = dim;
  }
  return out;
}

}  // namespace okh
