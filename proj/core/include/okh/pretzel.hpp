#pragma once

// Pretzel links P(p, q, r): planar diagrams and the reduced cube obtained by
// replacing each twist region with its zig-zag complex.

#include "okh/cube.hpp"
#include "okh/diagram.hpp"

#include <array>
#include <optional>
#include <vector>

namespace okh {

struct MarkingTriple {
  Rational alpha;
  Rational beta1;
  Rational beta2;
};

/// Defaults: (1, 1/2, 1/2) on the left outer arc, (-1, -1/2, -1/2) on the right one.
struct PretzelMarkings {
  MarkingTriple left{1, Rational(1, 2), Rational(1, 2)};
  MarkingTriple right{-1, Rational(-1, 2), Rational(-1, 2)};
};

/// Three horizontal twist regions stacked bottom to top with |p|, |q|, |r|
/// crossings; the sign of each parameter is the sign of its crossings under
/// the orientation in which every twist region is antiparallel.
MarkedDiagram pretzel_pd(int p, int q, int r, const PretzelMarkings& marks = {});

enum class BridgeEdge { Saddle, Dot };

/// Zig-zag complex of one twist region.  Positions 0..n; object t is
/// represented by a resolution of the region and carries `small[t]` extra
/// circles, on which the kept summand is 1 (negative) or x (positive).
struct BridgeComplex {
  int n = 0;
  int sign = 0;
  std::vector<BridgeEdge> edges;           // edge t joins t and t + 1
  std::vector<std::vector<int>> bits;      // 0/1 smoothing per crossing for object t
  std::vector<int> small;                  // extra circles of object t
  std::vector<int> h;                      // homological degree relative to the region
  int degree_zero = 0;                     // position of the object in degree 0
};

BridgeComplex bridge_complex(int n, int sign);

/// Crossing index in pretzel_pd order of crossing i (0-based) of bridge b.
int pretzel_crossing(int n0, int n1, int b, int i);

struct ReducedPretzel {
  MarkedDiagram diagram;
  std::array<BridgeComplex, 3> bridges;
  StateCube cube;
  std::vector<Resolution> representative;  // per cube vertex
};

/// Reduced cube of P(p, q, r) with (|p|+1)(|q|+1)(|r|+1) vertices.
ReducedPretzel reduced_cube(int p, int q, int r, const PretzelMarkings& marks = {});

}  // namespace okh
