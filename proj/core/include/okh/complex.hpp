#pragma once

// Bigraded chain complexes with a single global basis, chain-level gl(1|1)
// endomorphisms, the d^2 check and Gaussian elimination with map transport.

#include "okh/cube.hpp"
#include "okh/signs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace okh {

/// Basis element: a word in the state space of a cube vertex (vertex -1 for
/// generators that carry no such label, e.g. after elimination of hand-built complexes).
struct GenLabel {
  int vertex = -1;
  Word word = 0;
};

struct BigradedComplex {
  std::vector<GenLabel> labels;
  std::vector<int> h;
  std::vector<int> q;
  IntMatrix d;  // square; d(h, q) lands in (h + 1, q)
  int n_minus = 0;
  int q_shift = 0;

  int size() const { return static_cast<int>(labels.size()); }
  std::vector<int> indices_at(int hh, int qq) const;
  std::vector<std::pair<int, int>> bidegrees() const;  // sorted (h, q) with generators
};

struct ChainMap {
  std::string name;
  RatMatrix m;
  int dh = 0;
  int dq = 0;
};

BigradedComplex assemble_complex(const StateCube& cube, const EdgeSigns& es);

enum class ActionGenerator { E, F, H1, H2 };

ChainMap assemble_action(const BigradedComplex& cx, const StateCube& cube, ActionGenerator g,
                         const std::vector<int>& sigma);

struct DSquaredReport {
  bool ok = true;
  int row = -1;
  int col = -1;
  Integer value = 0;
  std::string describe(const BigradedComplex& cx) const;
};

DSquaredReport check_d_squared(const BigradedComplex& cx);

/// Checks that each map shifts (h, q) by its declared degree and commutes with d.
bool is_chain_map(const BigradedComplex& cx, const ChainMap& phi);

struct EliminationResult {
  BigradedComplex complex;
  std::vector<ChainMap> maps;
  int cancellations = 0;
};

/// Cancels unit entries of d (smallest bidegree first, then generator order)
/// and transports every map through the deformation retract.
EliminationResult gaussian_eliminate(const BigradedComplex& cx, const std::vector<ChainMap>& maps);

/// Subcomplex ker e, built state by state: on a vertex with circles 0..c-1 the
/// words in (x_i - x_0), i >= 1, form an integral basis of ker e.  The
/// restriction of f is included when it preserves ker e (total alpha zero).
struct ReducedResult {
  BigradedComplex complex;
  std::vector<ChainMap> maps;  // restrictions of the input maps that preserve ker e
};

ReducedResult reduced_complex(const BigradedComplex& cx, const StateCube& cube, const ChainMap& e,
                              const std::vector<ChainMap>& maps);

}  // namespace okh
