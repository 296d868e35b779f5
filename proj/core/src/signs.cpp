#include "okh/signs.hpp"

#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

namespace okh {

namespace {

class BitRow {
 public:
  explicit BitRow(int bits = 0) : words_((bits + 63) / 64, 0) {}
  void flip(int i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool test(int i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  BitRow& operator^=(const BitRow& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  int lowest() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k]) return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
    }
    return -1;
  }
  std::vector<int> ones() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      for (std::uint64_t w = words_[k]; w; w &= w - 1) {
        out.push_back(static_cast<int>(k * 64) + std::countr_zero(w));
      }
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Equation {
  BitRow vars;
  BitRow origin;
  bool rhs = false;
};

// Incremental echelon basis keyed by lowest variable.
class F2System {
 public:
  F2System(int vars, int equations) : vars_(vars), equations_(equations) {}

  // Returns false (and leaves the system unchanged) if the equation contradicts it.
  bool insert(Equation eq, std::vector<int>* conflict = nullptr) {
    while (true) {
      const int p = eq.vars.lowest();
      if (p < 0) {
        if (eq.rhs && conflict) *conflict = eq.origin.ones();
        return !eq.rhs;
      }
      auto it = rows_.find(p);
      if (it == rows_.end()) {
        rows_.emplace(p, std::move(eq));
        return true;
      }
      eq.vars ^= it->second.vars;
      eq.origin ^= it->second.origin;
      eq.rhs ^= it->second.rhs;
    }
  }

  std::vector<int> solve() const {
    std::vector<int> x(vars_, 0);
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      int v = it->second.rhs ? 1 : 0;
      for (int q : it->second.vars.ones()) {
        if (q != it->first) v ^= x[q];
      }
      x[it->first] = v;
    }
    return x;
  }

  int vars() const { return vars_; }
  int equations() const { return equations_; }

 private:
  int vars_;
  int equations_;
  std::map<int, Equation> rows_;
};

RatMatrix f_matrix(const CubeVertex& v) { return wedge_matrix(v.z); }

}  // namespace

FaceType classify_face(const StateCube& cube, const Face& f) {
  const IntMatrix c1 = cube.edge(f.e2).map * cube.edge(f.e1).map;
  const IntMatrix c2 = cube.edge(f.e4).map * cube.edge(f.e3).map;
  const bool z1 = c1.is_zero(), z2 = c2.is_zero();
  if (z1 && z2) return {FaceKind::Free, 0};
  if (!z1 && !z2) {
    if (c1 == c2) return {FaceKind::Forced, 1};
    if (c1 == c2.scaled(Integer(-1))) return {FaceKind::Forced, -1};
  }
  throw FaceInconsistency("face at vertex " + std::to_string(f.vertex) + " axes (" +
                          std::to_string(f.i) + "," + std::to_string(f.j) +
                          "): composites are not proportional");
}

EdgeSigns solve_edge_signs(const StateCube& cube, Flavor flavor, FreeFacePolicy policy) {
  const auto faces = cube.faces();
  std::vector<FaceType> types;
  types.reserve(faces.size());
  for (const auto& f : faces) types.push_back(classify_face(cube, f));
  return solve_edge_signs(cube, faces, types, flavor, policy);
}

EdgeSigns solve_edge_signs(const StateCube& cube, const std::vector<Face>& faces,
                           const std::vector<FaceType>& types, Flavor flavor,
                           FreeFacePolicy policy) {
  // Tree gauge: the edge into v from its lowest nonzero axis is fixed.
  std::vector<int> var_of_edge(cube.edge_count(), -1);
  std::vector<char> on_tree(cube.edge_count(), 0);
  for (int v = 1; v < cube.vertex_count(); ++v) {
    auto coord = cube.vertex(v).coord;
    for (int a = 0; a < cube.axes(); ++a) {
      if (coord[a] == 0) continue;
      coord[a] -= 1;
      on_tree[cube.edge_from(cube.vertex_index(coord), a)] = 1;
      break;
    }
  }
  int vars = 0;
  for (int e = 0; e < cube.edge_count(); ++e) {
    if (!on_tree[e]) var_of_edge[e] = vars++;
  }

  const int nf = static_cast<int>(faces.size());
  auto make_equation = [&](int fi, bool rhs) {
    Equation eq{BitRow(vars), BitRow(nf), rhs};
    for (int e : {faces[fi].e1, faces[fi].e2, faces[fi].e3, faces[fi].e4}) {
      if (var_of_edge[e] >= 0) eq.vars.flip(var_of_edge[e]);
    }
    eq.origin.flip(fi);
    return eq;
  };

  EdgeSigns out;
  F2System system(vars, nf);
  for (int fi = 0; fi < nf; ++fi) {
    if (types[fi].kind != FaceKind::Forced) continue;
    ++out.forced_faces;
    std::vector<int> conflict;
    // Product of signs must be -lambda; odd parity means product -1.
    if (!system.insert(make_equation(fi, types[fi].lambda == 1), &conflict)) {
      throw InfeasibleSigns("edge sign system is infeasible on forced faces", conflict);
    }
  }
  // Free faces with a generic ratio first, then the flavor-dependent ones.
  const bool y = flavor == Flavor::Y;
  std::vector<std::optional<int>> generic(nf);
  for (int fi = 0; fi < nf; ++fi) {
    if (types[fi].kind == FaceKind::Free && cube.generic_lambda) generic[fi] = cube.generic_lambda(faces[fi]);
  }
  for (int pass = 0; pass < 2; ++pass) {
    for (int fi = 0; fi < nf; ++fi) {
      if (types[fi].kind != FaceKind::Free || generic[fi].has_value() != (pass == 0)) continue;
      ++out.free_faces;
      bool rhs = y;
      if (generic[fi]) {
        rhs = *generic[fi] == 1;
      } else if (policy == FreeFacePolicy::ChordClass && cube.ladybug) {
        if (auto cls = cube.ladybug(faces[fi])) rhs = (*cls == 1) == y;
      }
      if (!system.insert(make_equation(fi, rhs))) {
        out.fallback_faces.push_back(fi);
        system.insert(make_equation(fi, !rhs));
      }
    }
  }

  const auto x = system.solve();
  out.sign.assign(cube.edge_count(), 1);
  for (int e = 0; e < cube.edge_count(); ++e) {
    if (var_of_edge[e] >= 0 && x[var_of_edge[e]]) out.sign[e] = -1;
  }
  return out;
}

std::vector<int> action_edge_relations(const StateCube& cube) {
  std::vector<int> tau(cube.edge_count(), 0);
  for (int ei = 0; ei < cube.edge_count(); ++ei) {
    const auto& e = cube.edge(ei);
    const RatMatrix m = e.map.cast<Rational>();
    const auto& src = cube.vertex(e.from);
    const auto& dst = cube.vertex(e.to);
    auto relation = [&](const RatMatrix& left, const RatMatrix& right) {
      if (left.is_zero() && right.is_zero()) return 0;
      if (left == right) return 1;
      if (left == right.scaled(Rational(-1))) return -1;
      throw std::logic_error("edge map neither commutes nor anticommutes with the action");
    };
    int t = relation(f_matrix(dst) * m, m * f_matrix(src));
    if (t == 0) {
      t = relation(contraction_sum_matrix(dst.circles).cast<Rational>() * m,
                   m * contraction_sum_matrix(src.circles).cast<Rational>());
    }
    tau[ei] = t;
  }
  return tau;
}

std::vector<int> fix_action_signs(const StateCube& cube, const std::vector<int>& tree_order) {
  const auto tau = action_edge_relations(cube);
  std::vector<int> order = tree_order;
  if (order.empty()) {
    order.resize(cube.axes());
    std::iota(order.begin(), order.end(), 0);
  }
  // Spanning forest over the edges that carry a relation, scanned breadth first
  // from the lowest unvisited vertex with axes in `order`.
  std::vector<std::vector<int>> incident(cube.vertex_count());
  for (int v = 0; v < cube.vertex_count(); ++v) {
    for (int a : order) {
      const int ei = cube.edge_from(v, a);
      if (ei < 0 || tau[ei] == 0) continue;
      incident[v].push_back(ei);
      incident[cube.edge(ei).to].push_back(ei);
    }
  }
  std::vector<int> sigma(cube.vertex_count(), 0);
  for (int root = 0; root < cube.vertex_count(); ++root) {
    if (sigma[root] != 0) continue;
    sigma[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int ei : incident[u]) {
        const auto& e = cube.edge(ei);
        const int w = e.from == u ? e.to : e.from;
        if (sigma[w] != 0) continue;
        sigma[w] = sigma[u] * tau[ei];
        queue.push_back(w);
      }
    }
  }
  for (int ei = 0; ei < cube.edge_count(); ++ei) {
    const auto& e = cube.edge(ei);
    if (tau[ei] != 0 && sigma[e.from] * sigma[e.to] != tau[ei]) {
      throw std::logic_error("action signs are inconsistent around a cycle of edges");
    }
  }
  return sigma;
}

}  // namespace okh
