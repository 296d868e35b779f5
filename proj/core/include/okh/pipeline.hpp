#pragma once

// End-to-end runs: cube -> signs -> complex -> (ker e) -> elimination ->
// homology, with the transported gl(1|1) action and its induced maps.

#include "okh/complex.hpp"
#include "okh/homology.hpp"
#include "okh/pretzel.hpp"
#include "okh/signs.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace okh {

struct PipelineOptions {
  Flavor flavor = Flavor::Y;
  FreeFacePolicy policy = FreeFacePolicy::ChordClass;
  bool reduced = false;
  bool action = true;
  bool eliminate = true;
  /// Debug fault injection: flip the sign of this edge after solving.
  int corrupt_edge = -1;
};

using BidegreeMap = std::map<std::pair<int, int>, InducedMap>;
using ProfileMap = std::map<std::pair<int, int>, MapProfile>;

struct PipelineResult {
  StateCube cube;
  EdgeSigns signs;
  std::vector<int> sigma;
  BigradedComplex complex;       // assembled, reduced to ker e when requested
  std::vector<ChainMap> maps;    // e, f, h1, h2 on `complex` (e absent when reduced)
  BigradedComplex simplified;    // after Gaussian elimination
  std::vector<ChainMap> simplified_maps;
  int cancellations = 0;
  Homology homology;
  std::optional<BidegreeMap> f_star;  // absent when f is not integral
  std::optional<BidegreeMap> e_star;
  ProfileMap f_profile;
  ProfileMap e_profile;

  const ChainMap* map(const std::string& name) const;  // on `simplified`
};

/// Runs the pipeline on a prepared cube (signs are solved here).
PipelineResult run_cube(StateCube cube, const PipelineOptions& opt);

PipelineResult run_diagram(const MarkedDiagram& d, const PipelineOptions& opt);

/// Crossing signs used for the pretzel link of the torsion statement,
/// P(n, n, -n) in the orientation convention of pretzel_pd.
std::array<int, 3> torsion_pretzel(int n);

/// Reduced-cube run for torsion_pretzel(n); always on ker e.
PipelineResult run_pretzel(int n, const PipelineOptions& opt);

/// Full-hypercube run on the same diagram, reduced to ker e.
PipelineResult run_pretzel_full(int n, const PipelineOptions& opt);

/// Homology agreement including elementary divisors per bidegree.
bool same_homology(const Homology& a, const Homology& b);

/// Free rank and torsion per bidegree as text rows "h q rank torsion".
std::vector<std::string> homology_table(const Homology& hom);

}  // namespace okh
