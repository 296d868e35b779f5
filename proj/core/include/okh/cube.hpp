#pragma once

// A cube of state spaces: a grid of vertices, each carrying an exterior algebra
// on its circles, with unsigned merge/split/dot maps along the grid edges.  The
// resolution hypercube has every axis of length 1.

#include "okh/diagram.hpp"
#include "okh/exterior.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace okh {

enum class EdgeKind { Merge, Split, Dot };

struct CubeVertex {
  std::vector<int> coord;
  int circles = 0;
  Rational nu;                 // q = 2(|w| + nu) + q_shift
  std::vector<Rational> z;     // alpha per circle
  Rational beta1;              // marking offsets for h1, h2
  Rational beta2;
  int h = 0;
  int q_shift = 0;

  int dim() const { return 1 << circles; }
  int q_of(Word w) const;
  RepData rep() const;  // nu here already includes the beta2 offset
};

struct CubeEdge {
  int from = 0;
  int to = 0;
  int axis = 0;
  EdgeKind kind = EdgeKind::Merge;
  IntMatrix map;  // unsigned, 2^{c(to)} x 2^{c(from)}
};

/// The 2-face spanned by axes i < j at vertex v.
struct Face {
  int vertex = 0;
  int i = 0;
  int j = 0;
  int e1 = 0, e2 = 0;  // v -(i)-> . -(j)-> end
  int e3 = 0, e4 = 0;  // v -(j)-> . -(i)-> end
};

class StateCube {
 public:
  StateCube() = default;
  explicit StateCube(std::vector<int> lengths);

  const std::vector<int>& lengths() const { return lengths_; }
  int axes() const { return static_cast<int>(lengths_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int vertex_index(const std::vector<int>& coord) const;
  /// Edge leaving v along axis, or -1 at the boundary.
  int edge_from(int v, int axis) const { return out_[v][axis]; }

  CubeVertex& vertex(int v) { return vertices_[v]; }
  const CubeVertex& vertex(int v) const { return vertices_[v]; }
  const std::vector<CubeVertex>& vertices() const { return vertices_; }
  const CubeEdge& edge(int e) const { return edges_[e]; }
  const std::vector<CubeEdge>& edges() const { return edges_; }

  /// Registers the unsigned map for the edge at v along axis.
  void set_edge(int v, int axis, EdgeKind kind, IntMatrix map);

  std::vector<Face> faces() const;

  /// Total alpha, equal at every vertex.
  Rational epsilon_f() const;

  /// Optional geometric classifier for faces with vanishing composites.
  std::function<std::optional<int>(const Face&)> ladybug;

  /// Optional ratio path1 = lambda * path2 that a face with vanishing
  /// composites would have for distinct circles; takes precedence over ladybug.
  std::function<std::optional<int>(const Face&)> generic_lambda;

 private:
  std::vector<int> lengths_;
  std::vector<int> stride_;
  std::vector<CubeVertex> vertices_;
  std::vector<CubeEdge> edges_;
  std::vector<std::vector<int>> out_;
};

/// Resolution hypercube of a marked diagram; vertex index bit k is crossing k.
StateCube build_hypercube(const MarkedDiagram& d);

/// Grading data shared by every diagram-derived vertex.
CubeVertex diagram_vertex(const MarkedDiagram& d, const Resolution& r);

}  // namespace okh
