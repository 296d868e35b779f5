#include "corpus.hpp"
#include "okh/cube.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace okh;
using namespace okh::testing;

TEST(Diagram, CrossingSigns) {
  EXPECT_EQ(load_data("trefoil_right").n_plus, 3);
  EXPECT_EQ(load_data("trefoil_left").n_minus, 3);
  const MarkedDiagram fig8 = load_data("figure_eight");
  EXPECT_EQ(fig8.n_plus, 2);
  EXPECT_EQ(fig8.n_minus, 2);
  EXPECT_EQ(load_data("hopf_positive").n_plus, 2);
  EXPECT_EQ(load_data("hopf_negative").n_minus, 2);
}

TEST(Diagram, ParseErrorsCarryPositions) {
  try {
    parse_pd("X[1,2,3,4]\nX[1,2,3 4]\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_pd("Y[1,2,3,4]"), ParseError);
  EXPECT_THROW(parse_pd("X[1,1,1,2]\nX[2,3,3,4]"), ValidationError);
  EXPECT_THROW(parse_pd("X[1,1,2,2]\nmark 1 1 1 1"), ValidationError);
  EXPECT_THROW(parse_pd("X[1,1,2,2]\nmark 9 0 0 0"), ValidationError);
}

TEST(Diagram, RoundTrip) {
  for (const auto& c : corpus(2)) {
    const MarkedDiagram again = parse_pd(to_pd(c.diagram));
    ASSERT_EQ(again.crossing_count(), c.diagram.crossing_count()) << c.name;
    for (int k = 0; k < again.crossing_count(); ++k) {
      EXPECT_EQ(again.crossings[k].arcs, c.diagram.crossings[k].arcs) << c.name;
      EXPECT_EQ(again.crossings[k].sign, c.diagram.crossings[k].sign) << c.name;
    }
    EXPECT_EQ(again.markings.size(), c.diagram.markings.size());
    EXPECT_EQ(again.total_alpha(), c.diagram.total_alpha());
  }
}

TEST(Diagram, KinkResolutions) {
  const MarkedDiagram d = load_data("kink");
  std::set<int> counts;
  for (std::uint64_t i = 0; i < 2; ++i) counts.insert(resolve_state(d, resolution_from_index(i, 1)).c);
  EXPECT_EQ(counts, (std::set<int>{1, 2}));
}

TEST(Diagram, TrefoilCircleCounts) {
  // Oriented resolution: 2 circles; one flip: 1; two flips: 2; all flipped: 3.
  const MarkedDiagram d = load_data("trefoil_right");
  std::multiset<int> counts;
  for (std::uint64_t i = 0; i < 8; ++i) counts.insert(resolve_state(d, resolution_from_index(i, 3)).c);
  EXPECT_EQ(counts, (std::multiset<int>{1, 1, 1, 2, 2, 2, 2, 3}));
}

TEST(Diagram, SaddleChangesCircleCountByOne) {
  for (const auto& c : corpus(2)) {
    const int n = c.diagram.crossing_count();
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const Resolution r = resolution_from_index(i, n);
      const int before = resolve_state(c.diagram, r).c;
      for (int k = 0; k < n; ++k) {
        if (r[k]) continue;
        const SaddleDescriptor s = saddle_info(c.diagram, r, k);
        Resolution r1 = r;
        r1[k] = 1;
        EXPECT_EQ(resolve_state(c.diagram, r1).c, before + (s.kind == SaddleKind::Merge ? -1 : 1)) << c.name;
      }
    }
  }
}

TEST(Diagram, MarkingsPoolPerCircle) {
  const MarkedDiagram d = parse_pd("X[1,1,2,2]\nmark 1 1 1/2 1/2\nmark 2 2 1 1\n");
  EXPECT_EQ(d.total_alpha(), 3);
  for (std::uint64_t i = 0; i < 2; ++i) {
    const StateCircles s = resolve_state(d, resolution_from_index(i, 1));
    Rational sum = 0;
    for (const auto& e : s.eps_f) sum += e;
    EXPECT_EQ(sum, 3);
  }
}
