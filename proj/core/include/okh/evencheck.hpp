#pragma once

// Even Khovanov homology (x^2 = 0, commuting circle variables) on the same
// basis and gradings as the odd complex, used to compare the two mod 2.

#include "okh/complex.hpp"
#include "okh/homology.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace okh {

/// Hypercube with the even merge/split maps on the word basis.
StateCube even_hypercube(const MarkedDiagram& d);

/// Even complex with the Koszul signs (-1)^{#1s before the flipped bit}.
BigradedComplex even_complex(const MarkedDiagram& d);

struct Mod2Mismatch {
  int h = 0;
  int q = 0;
  int odd = 0;
  int even = 0;
};

struct Mod2Report {
  std::map<std::pair<int, int>, int> odd;
  std::map<std::pair<int, int>, int> even;
  std::vector<Mod2Mismatch> mismatches;
  bool match() const { return mismatches.empty(); }
  std::string summary() const;
};

/// Compares dim H(C; F2) per bidegree, computed from the integral groups.
Mod2Report mod2_compare(const Homology& odd, const Homology& even);

}  // namespace okh
