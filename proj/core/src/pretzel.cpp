#include "okh/pretzel.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace okh {

namespace {

struct ArcNames {
  // Arc ids per bridge: bottom[b][i], top[b][i] for i = 0..n_b, after gluing.
  std::array<std::vector<int>, 3> bottom, top;
  int count = 0;
};

ArcNames glue_arcs(const std::array<int, 3>& n) {
  // Raw ids, then identify the ends joined by the closing arcs.
  std::vector<int> parent;
  auto fresh = [&] {
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(parent.size()) - 1;
  };
  ArcNames raw;
  for (int b = 0; b < 3; ++b) {
    for (int i = 0; i <= n[b]; ++i) {
      raw.bottom[b].push_back(fresh());
      raw.top[b].push_back(fresh());
    }
  }
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  unite(raw.bottom[0][0], raw.top[2][0]);
  unite(raw.top[0][0], raw.bottom[1][0]);
  unite(raw.top[1][0], raw.bottom[2][0]);
  unite(raw.bottom[0][n[0]], raw.top[2][n[2]]);
  unite(raw.top[0][n[0]], raw.bottom[1][n[1]]);
  unite(raw.top[1][n[1]], raw.bottom[2][n[2]]);

  std::map<int, int> label;
  ArcNames out;
  for (int b = 0; b < 3; ++b) {
    for (int i = 0; i <= n[b]; ++i) {
      for (auto [src, dst] : {std::pair{&raw.bottom, &out.bottom}, std::pair{&raw.top, &out.top}}) {
        const int root = find((*src)[b][i]);
        auto [it, inserted] = label.emplace(root, static_cast<int>(label.size()) + 1);
        (*dst)[b].push_back(it->second);
      }
    }
  }
  out.count = static_cast<int>(label.size());
  return out;
}

std::string mark_line(int arc, const MarkingTriple& m) {
  return "mark " + std::to_string(arc) + ' ' + to_string(m.alpha) + ' ' + to_string(m.beta1) + ' ' +
         to_string(m.beta2) + '\n';
}

std::string pretzel_text(const std::array<int, 3>& params, const PretzelMarkings& marks,
                         ArcNames* names_out) {
  std::array<int, 3> n{};
  for (int b = 0; b < 3; ++b) {
    if (params[b] == 0) throw std::invalid_argument("pretzel parameters must be nonzero");
    n[b] = std::abs(params[b]);
  }
  if (n[0] % 2 != n[1] % 2 || n[1] % 2 != n[2] % 2) {
    throw std::invalid_argument("pretzel parameters need equal parity");
  }
  const ArcNames a = glue_arcs(n);
  std::ostringstream out;
  for (int b = 0; b < 3; ++b) {
    const bool positive = params[b] > 0;
    for (int i = 1; i <= n[b]; ++i) {
      const int sw = a.bottom[b][i - 1], se = a.bottom[b][i];
      const int ne = a.top[b][i], nw = a.top[b][i - 1];
      // Odd crossings take both bottom ends as inputs, even ones both top ends.
      std::array<int, 4> x;
      if (i % 2 == 1) {
        x = positive ? std::array{se, ne, nw, sw} : std::array{sw, se, ne, nw};
      } else {
        x = positive ? std::array{nw, sw, se, ne} : std::array{ne, nw, sw, se};
      }
      out << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << "]\n";
    }
  }
  out << mark_line(a.bottom[0][0], marks.left);
  out << mark_line(a.bottom[0][n[0]], marks.right);
  if (names_out) *names_out = a;
  return out.str();
}

}  // namespace

MarkedDiagram pretzel_pd(int p, int q, int r, const PretzelMarkings& marks) {
  return parse_pd(pretzel_text({p, q, r}, marks, nullptr));
}

BridgeComplex bridge_complex(int n, int sign) {
  if (n < 1 || (sign != 1 && sign != -1)) throw std::invalid_argument("bad twist region");
  BridgeComplex bc;
  bc.n = n;
  bc.sign = sign;
  for (int t = 0; t <= n; ++t) {
    std::vector<int> bits(n, 0);
    for (int i = 0; i < t; ++i) bits[i] = 1;
    bc.bits.push_back(bits);
    if (sign < 0) {
      bc.small.push_back(std::max(t - 1, 0));
      bc.h.push_back(t - n);
    } else {
      bc.small.push_back(t < n ? n - t - 1 : 0);
      bc.h.push_back(t);
    }
    if (t < n) {
      const bool saddle = sign < 0 ? t == 0 : t == n - 1;
      bc.edges.push_back(saddle ? BridgeEdge::Saddle : BridgeEdge::Dot);
    }
  }
  bc.degree_zero = sign < 0 ? n : 0;
  return bc;
}

int pretzel_crossing(int n0, int n1, int b, int i) {
  if (b == 0) return i;
  if (b == 1) return n0 + i;
  return n0 + n1 + i;
}

ReducedPretzel reduced_cube(int p, int q, int r, const PretzelMarkings& marks) {
  ArcNames names;
  const std::array<int, 3> params{p, q, r};
  ReducedPretzel out;
  out.diagram = parse_pd(pretzel_text(params, marks, &names));
  const MarkedDiagram& d = out.diagram;
  std::array<int, 3> n{};
  for (int b = 0; b < 3; ++b) {
    n[b] = std::abs(params[b]);
    out.bridges[b] = bridge_complex(n[b], params[b] > 0 ? 1 : -1);
  }
  auto arc = [&](const std::vector<int>& ids, int i) {
    return d.arc_index(std::to_string(ids[i]));
  };
  auto crossing = [&](int b, int i) { return pretzel_crossing(n[0], n[1], b, i); };

  StateCube cube({n[0], n[1], n[2]});
  const int vc = cube.vertex_count();
  out.representative.resize(vc);
  std::vector<StateCircles> states(vc);
  std::vector<std::vector<int>> tmpl(vc);  // full circle -> template index or -1
  for (int v = 0; v < vc; ++v) {
    const std::vector<int> coord = cube.vertex(v).coord;
    Resolution res(d.crossing_count(), 0);
    for (int b = 0; b < 3; ++b) {
      const auto& bits = out.bridges[b].bits[coord[b]];
      for (int i = 0; i < n[b]; ++i) res[crossing(b, i)] = static_cast<std::uint8_t>(bits[i]);
    }
    out.representative[v] = res;
    states[v] = resolve_state(d, res);
    const StateCircles& s = states[v];

    std::vector<bool> small(s.c, false);
    int weight = 0, x_small = 0;
    for (int b = 0; b < 3; ++b) {
      const int t = coord[b];
      weight += t;
      int lo, hi;
      if (out.bridges[b].sign < 0) {
        lo = 1, hi = t - 1;
      } else {
        lo = t + 1, hi = n[b] - 1;
      }
      for (int i = lo; i <= hi; ++i) {
        const int c = s.circle_of_arc[arc(names.bottom[b], i)];
        if (small[c] || c != s.circle_of_arc[arc(names.top[b], i)]) {
          throw std::logic_error("twist region representative has no small circle");
        }
        small[c] = true;
        if (out.bridges[b].sign > 0) ++x_small;
      }
    }
    CubeVertex cv;
    cv.coord = coord;
    tmpl[v].assign(s.c, -1);
    for (int c = 0; c < s.c; ++c) {
      if (small[c]) {
        if (s.eps_f[c] != 0) throw std::logic_error("marking on a twist circle");
        continue;
      }
      tmpl[v][c] = cv.circles++;
      cv.z.push_back(s.eps_f[c]);
    }
    for (int c = 0; c < s.c; ++c) {
      cv.beta1 += s.eps_h1[c];
      cv.beta2 += s.eps_h2[c];
    }
    cv.nu = Rational(d.crossing_count() - weight - s.c, 2) + x_small;
    cv.h = weight - d.n_minus;
    cv.q_shift = d.n_minus - 2 * d.n_plus;
    cube.vertex(v) = cv;
  }

  for (int v = 0; v < vc; ++v) {
    const std::vector<int> coord = cube.vertex(v).coord;
    for (int b = 0; b < 3; ++b) {
      const int t = coord[b];
      if (t >= n[b]) continue;
      std::vector<int> next = coord;
      ++next[b];
      const int w = cube.vertex_index(next);
      const int cn = cube.vertex(w).circles;
      const int cs = cube.vertex(v).circles;
      std::vector<int> target(cs, -1);
      const BridgeComplex& bc = out.bridges[b];
      if (bc.edges[t] == BridgeEdge::Saddle) {
        const int k = crossing(b, bc.sign < 0 ? 0 : n[b] - 1);
        const SaddleDescriptor sd = saddle_info(d, out.representative[v], k);
        for (int c = 0; c < states[v].c; ++c) {
          const int tc = tmpl[w][sd.target[c]];
          if (tmpl[v][c] >= 0) {
            if (tc < 0) throw std::logic_error("saddle sends a template circle to a twist circle");
            target[tmpl[v][c]] = tc;
          }
        }
        IntMatrix sub = substitution_matrix(target, cn);
        if (sd.kind == SaddleKind::Merge) {
          cube.set_edge(v, b, EdgeKind::Merge, std::move(sub));
        } else {
          std::vector<Integer> diff(cn, 0);
          diff[tmpl[w][sd.y1]] = 1;
          diff[tmpl[w][sd.y2]] = -1;
          cube.set_edge(v, b, EdgeKind::Split, wedge_matrix(diff) * sub);
        }
        continue;
      }
      // Dot edge: template circles correspond through the arcs that keep their circle.
      const int moved = bc.sign < 0 ? t : t + 1;
      const int mb = arc(names.bottom[b], moved), mt = arc(names.top[b], moved);
      for (int a = 0; a < d.arc_count(); ++a) {
        if (a == mb || a == mt) continue;
        const int sc = tmpl[v][states[v].circle_of_arc[a]];
        const int tc = tmpl[w][states[w].circle_of_arc[a]];
        if (sc < 0 || tc < 0) continue;
        if (target[sc] >= 0 && target[sc] != tc) throw std::logic_error("dot edge relabelling");
        target[sc] = tc;
      }
      std::vector<bool> hit(cn, false);
      for (int c : target) {
        if (c < 0 || hit[c]) throw std::logic_error("dot edge relabelling is not a bijection");
        hit[c] = true;
      }
      const int left = tmpl[w][states[w].circle_of_arc[arc(names.bottom[b], 0)]];
      const int right = tmpl[w][states[w].circle_of_arc[arc(names.bottom[b], n[b])]];
      std::vector<Integer> diff(cn, 0);
      if (left != right) {
        diff[left] = 1;
        diff[right] = -1;
      }
      cube.set_edge(v, b, EdgeKind::Dot, wedge_matrix(diff) * substitution_matrix(target, cn));
    }
  }

  const auto bridges = out.bridges;
  const auto reps = out.representative;
  // Saddle-saddle faces are faces of the resolution hypercube at the representative.
  cube.ladybug = [d, bridges, reps, n, cube_lengths = cube.lengths()](const Face& f) -> std::optional<int> {
    std::vector<int> coord(3);
    int rest = f.vertex;
    for (int a = 0; a < 3; ++a) {
      coord[a] = rest % (cube_lengths[a] + 1);
      rest /= cube_lengths[a] + 1;
    }
    std::array<int, 2> axes{f.i, f.j};
    std::array<int, 2> ks{};
    for (int s = 0; s < 2; ++s) {
      const BridgeComplex& bc = bridges[axes[s]];
      if (bc.edges[coord[axes[s]]] != BridgeEdge::Saddle) return std::nullopt;
      ks[s] = pretzel_crossing(n[0], n[1], axes[s], bc.sign < 0 ? 0 : n[axes[s]] - 1);
    }
    return ladybug_class(d, reps[f.vertex], ks[0], ks[1]);
  };
  // Faces with a dot edge: odd maps (dots, splits) anticommute when the circles are generic.
  std::vector<EdgeKind> kinds;
  for (const auto& e : cube.edges()) kinds.push_back(e.kind);
  cube.generic_lambda = [kinds](const Face& f) -> std::optional<int> {
    const EdgeKind a = kinds[f.e1], b = kinds[f.e3];
    if (a != EdgeKind::Dot && b != EdgeKind::Dot) return std::nullopt;
    const bool odd = a != EdgeKind::Merge && b != EdgeKind::Merge;
    return odd ? -1 : 1;
  };
  out.cube = std::move(cube);
  return out;
}

}  // namespace okh
