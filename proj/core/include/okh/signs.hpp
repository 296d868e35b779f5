#pragma once

// Edge signs on a state cube (type X / type Y) and the per-vertex signs that
// turn the raw e and f actions into chain maps.

#include "okh/cube.hpp"

#include <string>
#include <vector>

namespace okh {

enum class Flavor { X, Y };

enum class FaceKind { Forced, Free };

struct FaceType {
  FaceKind kind = FaceKind::Free;
  int lambda = 0;  // path1 = lambda * path2 when Forced
};

/// Thrown when two composites around a face are neither proportional nor both zero.
class FaceInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FaceType classify_face(const StateCube& cube, const Face& f);

/// How faces with vanishing composites get their parity.
enum class FreeFacePolicy {
  Uniform,     // every free face anticommutes under Y and commutes under X
  ChordClass,  // parity follows the geometric ladybug class where one exists
};

struct EdgeSigns {
  std::vector<int> sign;           // per edge, +1 or -1
  std::vector<int> fallback_faces;  // free faces whose configured parity had to flip
  int forced_faces = 0;
  int free_faces = 0;
};

class InfeasibleSigns : public std::runtime_error {
 public:
  InfeasibleSigns(const std::string& what, std::vector<int> cycle)
      : std::runtime_error(what), cycle_(std::move(cycle)) {}
  /// Face indices whose equations sum to 0 = 1.
  const std::vector<int>& cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

/// Solves the face equations over F2 with tree gauge: the edge into every
/// vertex from its lowest nonzero axis is fixed to +1.
EdgeSigns solve_edge_signs(const StateCube& cube, const std::vector<Face>& faces,
                           const std::vector<FaceType>& types, Flavor flavor,
                           FreeFacePolicy policy = FreeFacePolicy::ChordClass);

EdgeSigns solve_edge_signs(const StateCube& cube, Flavor flavor,
                           FreeFacePolicy policy = FreeFacePolicy::ChordClass);

/// Edge relation tau: f_to * M = tau * M * f_from (falling back on e); 0 when unconstrained.
std::vector<int> action_edge_relations(const StateCube& cube);

/// sigma per vertex with sigma(0) = +1.  `tree_order` permutes the axis scan
/// used for the spanning tree (identity when empty).
std::vector<int> fix_action_signs(const StateCube& cube, const std::vector<int>& tree_order = {});

}  // namespace okh
