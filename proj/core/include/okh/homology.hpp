#pragma once

// Integer homology through Smith normal form, induced maps on homology
// presentations and torsion witnesses.

#include "okh/complex.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace okh {

using DenseInt = std::vector<std::vector<Integer>>;

DenseInt to_dense(const IntMatrix& m);
DenseInt dense_identity(int n);
DenseInt dense_product(const DenseInt& a, const DenseInt& b, int inner);

struct SmithForm {
  int rows = 0;
  int cols = 0;
  DenseInt u, u_inv;  // rows x rows
  DenseInt v, v_inv;  // cols x cols
  std::vector<Integer> diagonal;  // positive, d_i | d_{i+1}, length = rank
  int rank() const { return static_cast<int>(diagonal.size()); }
};

/// U * M * V = D.  Pivot: smallest absolute value in the active block.
SmithForm smith_normal_form(const DenseInt& m, int rows, int cols);
SmithForm smith_normal_form(const IntMatrix& m);

/// Exact re-check of U * M * V = D and of U * U^{-1} = V * V^{-1} = 1.
bool verify_smith(const DenseInt& m, const SmithForm& s);

/// Presentation of one homology group: slot i has order orders[i] (0 = free).
struct HomologyGroup {
  int h = 0;
  int q = 0;
  int free_rank = 0;
  std::vector<Integer> torsion;  // divisors >= 2, ascending
  std::vector<int> basis;        // complex indices of this bidegree
  std::vector<Integer> orders;   // per presentation slot
  std::vector<SparseVec<Integer>> cycles;  // representatives in complex indices
  // class coordinates: U' * (V^{-1} z)[r:], reduced by orders
  DenseInt kernel_coords;  // (k - r) x k rows of V^{-1}
  DenseInt relation_u;     // U' of the relation matrix
  std::vector<int> slot_of_row;  // row of U' -> slot index, -1 for trivial

  /// Coordinates of a cycle (given on the full complex index set).
  std::vector<Integer> class_of(const SparseVec<Integer>& z) const;
};

struct Homology {
  std::map<std::pair<int, int>, HomologyGroup> groups;  // only nonzero groups

  const HomologyGroup* at(int h, int q) const;
  std::vector<Integer> all_torsion() const;
};

class DSquaredError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Homology homology_groups(const BigradedComplex& cx);

/// Matrix of phi_* from (h, q) to (h + dh, q + dq) in slot coordinates.
struct InducedMap {
  int h = 0;
  int q = 0;
  int dh = 0;
  int dq = 0;
  DenseInt matrix;  // target slots x source slots
};

std::map<std::pair<int, int>, InducedMap> induced_on_homology(const BigradedComplex& cx,
                                                              const ChainMap& phi,
                                                              const Homology& hom);

/// Isomorphism invariants of phi_* per source bidegree.
struct MapProfile {
  int image_free = 0;
  std::vector<Integer> image_torsion;
  int coker_free = 0;
  std::vector<Integer> coker_torsion;
  friend bool operator==(const MapProfile&, const MapProfile&) = default;
};

std::map<std::pair<int, int>, MapProfile> map_profile(
    const std::map<std::pair<int, int>, InducedMap>& induced, const Homology& hom);

struct TorsionWitness {
  int h = 0;
  int q = 0;
  Integer order;
  bool in_image = false;
};

std::vector<TorsionWitness> torsion_witness(const Homology& hom,
                                            const std::map<std::pair<int, int>, InducedMap>& f_star,
                                            const Integer& n);

/// dim over F2 of H(C; F2) per bidegree from integral data (universal coefficients).
std::map<std::pair<int, int>, int> mod2_dimensions(const Homology& hom);

/// dim over F2 computed directly from the complex reduced mod 2.
std::map<std::pair<int, int>, int> mod2_dimensions_direct(const BigradedComplex& cx);

}  // namespace okh
