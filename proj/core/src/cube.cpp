#include "okh/cube.hpp"

#include <stdexcept>

namespace okh {

int CubeVertex::q_of(Word w) const {
  return to_int64(to_integer(2 * (Rational(degree(w)) + nu))) + q_shift;
}

RepData CubeVertex::rep() const { return RepData{nu + beta2, z}; }

StateCube::StateCube(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  int count = 1;
  stride_.resize(lengths_.size());
  for (std::size_t a = 0; a < lengths_.size(); ++a) {
    stride_[a] = count;
    count *= lengths_[a] + 1;
  }
  vertices_.resize(count);
  out_.assign(count, std::vector<int>(lengths_.size(), -1));
  for (int v = 0; v < count; ++v) {
    auto& coord = vertices_[v].coord;
    coord.resize(lengths_.size());
    for (std::size_t a = 0; a < lengths_.size(); ++a) {
      coord[a] = (v / stride_[a]) % (lengths_[a] + 1);
    }
  }
}

int StateCube::vertex_index(const std::vector<int>& coord) const {
  int v = 0;
  for (std::size_t a = 0; a < lengths_.size(); ++a) {
    if (coord[a] < 0 || coord[a] > lengths_[a]) throw std::out_of_range("cube coordinate");
    v += coord[a] * stride_[a];
  }
  return v;
}

void StateCube::set_edge(int v, int axis, EdgeKind kind, IntMatrix map) {
  if (vertices_[v].coord[axis] >= lengths_[axis]) throw std::out_of_range("edge leaves the cube");
  const int to = v + stride_[axis];
  if (map.rows() != vertices_[to].dim() || map.cols() != vertices_[v].dim()) {
    throw std::invalid_argument("edge map has the wrong shape");
  }
  if (out_[v][axis] >= 0) {
    edges_[out_[v][axis]] = CubeEdge{v, to, axis, kind, std::move(map)};
    return;
  }
  out_[v][axis] = static_cast<int>(edges_.size());
  edges_.push_back(CubeEdge{v, to, axis, kind, std::move(map)});
}

std::vector<Face> StateCube::faces() const {
  std::vector<Face> out;
  for (int v = 0; v < vertex_count(); ++v) {
    for (int i = 0; i < axes(); ++i) {
      for (int j = i + 1; j < axes(); ++j) {
        const int ei = out_[v][i];
        const int ej = out_[v][j];
        if (ei < 0 || ej < 0) continue;
        Face f;
        f.vertex = v;
        f.i = i;
        f.j = j;
        f.e1 = ei;
        f.e2 = out_[v + stride_[i]][j];
        f.e3 = ej;
        f.e4 = out_[v + stride_[j]][i];
        if (f.e2 < 0 || f.e4 < 0) throw std::logic_error("cube is missing an edge");
        out.push_back(f);
      }
    }
  }
  return out;
}

Rational StateCube::epsilon_f() const {
  Rational s = 0;
  if (vertices_.empty()) return s;
  for (const auto& c : vertices_.front().z) s += c;
  return s;
}

CubeVertex diagram_vertex(const MarkedDiagram& d, const Resolution& r) {
  const StateCircles s = resolve_state(d, r);
  CubeVertex v;
  v.coord.assign(r.begin(), r.end());
  v.circles = s.c;
  int weight = 0;
  for (auto b : r) weight += b;
  v.nu = Rational(d.crossing_count() - weight - s.c, 2);
  v.z = s.eps_f;
  for (int i = 0; i < s.c; ++i) {
    v.beta1 += s.eps_h1[i];
    v.beta2 += s.eps_h2[i];
  }
  v.h = weight - d.n_minus;
  v.q_shift = d.n_minus - 2 * d.n_plus;
  return v;
}

StateCube build_hypercube(const MarkedDiagram& d) {
  const int n = d.crossing_count();
  if (n > 24) throw std::invalid_argument("too many crossings for the full hypercube");
  StateCube cube(std::vector<int>(n, 1));
  for (int v = 0; v < cube.vertex_count(); ++v) {
    const Resolution r = resolution_from_index(static_cast<std::uint64_t>(v), n);
    cube.vertex(v) = diagram_vertex(d, r);
  }
  for (int v = 0; v < cube.vertex_count(); ++v) {
    const Resolution r = resolution_from_index(static_cast<std::uint64_t>(v), n);
    for (int k = 0; k < n; ++k) {
      if (r[k]) continue;
      const SaddleDescriptor s = saddle_info(d, r, k);
      const int cn = cube.vertex(v + (1 << k)).circles;
      IntMatrix sub = substitution_matrix(s.target, cn);
      if (s.kind == SaddleKind::Merge) {
        cube.set_edge(v, k, EdgeKind::Merge, std::move(sub));
      } else {
        std::vector<Integer> diff(cn, 0);
        diff[s.y1] = 1;
        diff[s.y2] = -1;
        cube.set_edge(v, k, EdgeKind::Split, wedge_matrix(diff) * sub);
      }
    }
  }
  cube.ladybug = [d](const Face& f) {
    const Resolution r = resolution_from_index(static_cast<std::uint64_t>(f.vertex), d.crossing_count());
    return ladybug_class(d, r, f.i, f.j);
  };
  return cube;
}

}  // namespace okh
