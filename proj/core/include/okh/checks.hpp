#pragma once

// Exact self-checks: exterior algebra identities, gl(1|1) relations on
// V^{nu;z} and the chain-level relations of the action on a complex.

#include "okh/complex.hpp"
#include "okh/diagram.hpp"
#include "okh/exterior.hpp"
#include "okh/signs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace okh {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;  // first counterexample when !ok
};

/// The five contraction identities over all words (and word pairs) on n generators.
std::vector<CheckResult> inner_product_checks(int n);

/// e^2 = 0, f^2 = 0, ef + fe = eps(z), and the h1/h2 brackets on every basis word.
std::vector<CheckResult> gl11_checks(const RepData& rep);

/// d^2 = 0, e^2 = f^2 = 0, ef + fe = eps id and [d, g] = 0 for every map.
std::vector<CheckResult> chain_checks(const BigradedComplex& cx, const std::vector<ChainMap>& maps,
                                      const Rational& eps);

/// Everything above on a diagram: its complex with the action, and the
/// exterior identities on the circle counts and representations of its states.
std::vector<CheckResult> diagram_checks(const MarkedDiagram& d, Flavor flavor, int corrupt_edge = -1);

}  // namespace okh
