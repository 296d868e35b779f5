#include "corpus.hpp"
#include "okh/checks.hpp"
#include "okh/evencheck.hpp"

#include <gtest/gtest.h>

using namespace okh;
using namespace okh::testing;

namespace {

int total_free(const Homology& hom) {
  int n = 0;
  for (const auto& [k, g] : hom.groups) n += g.free_rank;
  return n;
}

PipelineOptions flavor(Flavor f) {
  PipelineOptions o;
  o.flavor = f;
  return o;
}

}  // namespace

TEST(Signs, FacesClassifyOnCorpus) {
  for (const auto& c : corpus(2)) {
    const StateCube cube = build_hypercube(c.diagram);
    for (const auto& f : cube.faces()) EXPECT_NO_THROW(classify_face(cube, f)) << c.name;
  }
}

TEST(Signs, ChordClassNeedsNoFallback) {
  for (const auto& c : corpus(3)) {
    for (Flavor f : {Flavor::X, Flavor::Y}) {
      const EdgeSigns es = solve_edge_signs(build_hypercube(c.diagram), f);
      EXPECT_TRUE(es.fallback_faces.empty()) << c.name;
    }
  }
}

TEST(Signs, TreeGaugeFixesEdgesIntoVertices) {
  const StateCube cube = build_hypercube(load_data("figure_eight"));
  const EdgeSigns es = solve_edge_signs(cube, Flavor::Y);
  for (int v = 1; v < cube.vertex_count(); ++v) {
    auto coord = cube.vertex(v).coord;
    for (int a = 0; a < cube.axes(); ++a) {
      if (coord[a] == 0) continue;
      coord[a] = 0;
      EXPECT_EQ(es.sign[cube.edge_from(cube.vertex_index(coord), a)], 1);
      break;
    }
  }
}

TEST(Signs, ActionSignsMakeChainMaps) {
  for (const auto& c : corpus(2)) {
    MarkedDiagram d = c.diagram;
    if (d.arc_count() > 0) d.markings.push_back({0, 0, 2, 1, 1});
    for (const auto& r : diagram_checks(d, Flavor::Y)) EXPECT_TRUE(r.ok) << c.name << " " << r.name << ": " << r.detail;
  }
}

TEST(Checks, CorruptedSignIsNamed) {
  const auto results = diagram_checks(load_data("trefoil_left"), Flavor::Y, 2);
  const auto first = std::find_if(results.begin(), results.end(), [](const auto& r) { return !r.ok; });
  ASSERT_NE(first, results.end());
  EXPECT_EQ(first->name, "d_squared");
}

TEST(Pipeline, UnknotHasTwoRows) {
  for (const char* name : {"unknot", "kink"}) {
    const PipelineResult r = run_diagram(load_data(name), {});
    EXPECT_EQ(homology_table(r.homology), (std::vector<std::string>{"0 -1 1 -", "0 1 1 -"})) << name;
  }
}

TEST(Pipeline, UnitMarkingOnUnknotActsByX) {
  const PipelineResult r = run_diagram(parse_pd("X[1,1,2,2]\nmark 1 1 1/2 1/2\n"), {});
  ASSERT_TRUE(r.f_star);
  const auto& f = r.f_star->at({0, -1});
  EXPECT_EQ(f.matrix.size(), 1u);
  EXPECT_EQ(abs(f.matrix[0][0]), 1);
  const auto& e = r.e_star->at({0, 1});
  EXPECT_EQ(abs(e.matrix[0][0]), 1);
}

TEST(Pipeline, KnownRanks) {
  for (Flavor fl : {Flavor::X, Flavor::Y}) {
    const PipelineResult t = run_diagram(load_data("trefoil_right"), flavor(fl));
    EXPECT_EQ(total_free(t.homology), 6);
    EXPECT_TRUE(t.homology.all_torsion().empty());
    const PipelineResult f8 = run_diagram(load_data("figure_eight"), flavor(fl));
    EXPECT_EQ(total_free(f8.homology), 10);
    EXPECT_TRUE(f8.homology.all_torsion().empty());
    const PipelineResult hopf = run_diagram(load_data("hopf_positive"), flavor(fl));
    EXPECT_EQ(total_free(hopf.homology), 4);
  }
}

TEST(Pipeline, TrefoilHasHomologicalWidthThree) {
  const PipelineResult r = run_diagram(load_data("trefoil_right"), {});
  std::set<int> hs;
  for (const auto& [k, g] : r.homology.groups) hs.insert(k.first);
  EXPECT_EQ(hs, (std::set<int>{0, 2, 3}));
  const PipelineResult l = run_diagram(load_data("trefoil_left"), {});
  hs.clear();
  for (const auto& [k, g] : l.homology.groups) hs.insert(k.first);
  EXPECT_EQ(hs, (std::set<int>{-3, -2, 0}));
}

TEST(Pipeline, ReducedHalvesKnotRank) {
  PipelineOptions o;
  o.reduced = true;
  EXPECT_EQ(total_free(run_diagram(load_data("trefoil_right"), o).homology), 3);
  EXPECT_EQ(total_free(run_diagram(load_data("figure_eight"), o).homology), 5);
}

TEST(Pipeline, CorruptEdgeRaises) {
  PipelineOptions o;
  o.corrupt_edge = 2;
  EXPECT_THROW(run_diagram(load_data("trefoil_right"), o), DSquaredError);
}

TEST(EvenCheck, TrefoilHasTwoTorsion) {
  const Homology even = homology_groups(even_complex(load_data("trefoil_right")));
  EXPECT_EQ(even.all_torsion(), std::vector<Integer>{Integer(2)});
  EXPECT_EQ(total_free(even), 4);
}

TEST(EvenCheck, Mod2MatchOnCorpus) {
  for (const auto& c : corpus(2)) {
    PipelineOptions o;
    o.action = false;
    const Mod2Report rep =
        mod2_compare(run_diagram(c.diagram, o).homology, homology_groups(even_complex(c.diagram)));
    EXPECT_TRUE(rep.match()) << c.name << ": " << rep.summary();
    EXPECT_EQ(rep.summary(), "mod2: MATCH");
  }
}

TEST(Pretzel, BridgeComplexShapes) {
  const BridgeComplex neg = bridge_complex(3, -1);
  EXPECT_EQ(neg.edges, (std::vector<BridgeEdge>{BridgeEdge::Saddle, BridgeEdge::Dot, BridgeEdge::Dot}));
  EXPECT_EQ(neg.h, (std::vector<int>{-3, -2, -1, 0}));
  EXPECT_EQ(neg.degree_zero, 3);
  const BridgeComplex pos = bridge_complex(3, 1);
  EXPECT_EQ(pos.edges, (std::vector<BridgeEdge>{BridgeEdge::Dot, BridgeEdge::Dot, BridgeEdge::Saddle}));
  EXPECT_EQ(pos.h, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(pos.degree_zero, 0);
}

TEST(Pretzel, DiagramShape) {
  const MarkedDiagram d = torsion_pretzel_pd(3);
  EXPECT_EQ(d.crossing_count(), 9);
  EXPECT_EQ(d.n_minus, 6);
  EXPECT_EQ(d.n_plus, 3);
  ASSERT_EQ(d.markings.size(), 2u);
  EXPECT_EQ(d.total_alpha(), 0);
  EXPECT_THROW(pretzel_pd(2, 3, 2), std::invalid_argument);
}

TEST(Pretzel, ReducedCubeSize) {
  const auto p = torsion_pretzel(2);
  EXPECT_EQ(reduced_cube(p[0], p[1], p[2]).cube.vertex_count(), 27);
}

TEST(Pretzel, TorsionOrder) {
  for (int n = 2; n <= 5; ++n) {
    const PipelineResult r = run_pretzel(n, {});
    EXPECT_EQ(r.homology.all_torsion(), std::vector<Integer>{Integer(n)}) << n;
  }
}

TEST(Pretzel, ReducedMatchesFull) {
  for (Flavor f : {Flavor::X, Flavor::Y}) {
    const PipelineResult red = run_pretzel(2, flavor(f));
    const PipelineResult full = run_pretzel_full(2, flavor(f));
    EXPECT_TRUE(same_homology(red.homology, full.homology));
    EXPECT_EQ(red.f_profile, full.f_profile);
  }
}

TEST(Pretzel, OuterArcMarkingsGiveNullHomotopicF) {
  // The outer arcs carry the same Fox colour, so f vanishes on homology.
  const PipelineResult r = run_pretzel(3, {});
  for (const auto& [k, p] : r.f_profile) {
    EXPECT_EQ(p.image_free, 0);
    EXPECT_TRUE(p.image_torsion.empty());
  }
}

TEST(Pretzel, MarkingOnAnotherArcReachesTorsion) {
  MarkedDiagram d = torsion_pretzel_pd(3);
  ASSERT_EQ(d.arc_labels[d.markings[1].arc], "7");
  PipelineOptions o;
  o.reduced = true;
  const PipelineResult outer = run_diagram(d, o);
  EXPECT_FALSE(torsion_witness(outer.homology, *outer.f_star, 3).front().in_image);
  d.markings[1].arc = d.arc_index("2");
  const PipelineResult moved = run_diagram(d, o);
  const auto w = torsion_witness(moved.homology, *moved.f_star, 3);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_TRUE(w.front().in_image);
}

TEST(Pipeline, Deterministic) {
  const PipelineResult a = run_pretzel(3, {}), b = run_pretzel(3, {});
  EXPECT_EQ(homology_table(a.homology), homology_table(b.homology));
  EXPECT_EQ(a.simplified.d, b.simplified.d);
  EXPECT_EQ(a.signs.sign, b.signs.sign);
}
