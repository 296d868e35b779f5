#pragma once

// Marked planar diagrams: PD parsing, orientation and crossing signs,
// resolutions and circle tracing.

#include "okh/number.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace okh {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Slots are counter-clockwise starting at the incoming under-strand.
struct Crossing {
  int id = 0;
  std::array<int, 4> arcs{};
  int sign = 0;
};

struct Marking {
  int arc = 0;
  int position = 0;
  Rational alpha;
  Rational beta1;
  Rational beta2;
};

struct MarkedDiagram {
  std::vector<std::string> arc_labels;  // canonical order: numeric labels first
  std::vector<Crossing> crossings;
  std::vector<Marking> markings;
  int n_plus = 0;
  int n_minus = 0;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int arc_count() const { return static_cast<int>(arc_labels.size()); }
  int arc_index(std::string_view label) const;  // -1 if absent
  Rational total_alpha() const;
};

using Resolution = std::vector<std::uint8_t>;

/// Resolution from the low bits of a cube index (bit k is crossing k).
Resolution resolution_from_index(std::uint64_t index, int n);

/// Slot pairs joined by a smoothing: 0 gives (0,1),(2,3); 1 gives (0,3),(1,2).
int smoothing_partner(int slot, int bit);

struct StateCircles {
  std::vector<int> circle_of_arc;
  int c = 0;
  std::vector<Rational> eps_f;
  std::vector<Rational> eps_h1;
  std::vector<Rational> eps_h2;
};

enum class SaddleKind { Merge, Split };

/// Effect of flipping one crossing 0 -> 1.  `target[i]` is the circle of the
/// result that contains source circle i; for a split the source circle goes to y1.
struct SaddleDescriptor {
  SaddleKind kind = SaddleKind::Merge;
  std::vector<int> target;
  int source_a = -1, source_b = -1;  // merge inputs (a < b)
  int source_y = -1;                 // split input
  int y = -1;                        // merge output
  int y1 = -1, y2 = -1;              // split outputs
};

MarkedDiagram parse_pd(std::string_view text);
std::string to_pd(const MarkedDiagram& d);

StateCircles resolve_state(const MarkedDiagram& d, const Resolution& r);
SaddleDescriptor saddle_info(const MarkedDiagram& d, const Resolution& r, int k);
Rational nu_of_state(const MarkedDiagram& d, const Resolution& r);

/// Geometric class of a ladybug face at r for crossings j, k (both 0 in r),
/// computed from the chord arrows on the shared circle.  Empty when the two
/// chords do not form a ladybug.
std::optional<int> ladybug_class(const MarkedDiagram& d, const Resolution& r, int j, int k);

}  // namespace okh
