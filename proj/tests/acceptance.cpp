// Acceptance suite: one line per criterion, exit status = number of failures.

#include "corpus.hpp"
#include "okh/checks.hpp"
#include "okh/evencheck.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace okh;
using namespace okh::testing;

namespace {

// Tolerances: every comparison is exact; only runtimes have budgets.
constexpr double kBudgetDSquared = 60.0;
constexpr double kBudgetTorsion = 120.0;
constexpr double kBudgetCrosscheck = 600.0;
constexpr int kRandomReps = 20;
constexpr int kMaxCircles = 6;
constexpr unsigned kSeed = 20261016;

struct Verdict {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_time(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

const char* name(Flavor f) { return f == Flavor::X ? "X" : "Y"; }

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  return Rational(num(rng), den(rng));
}

MarkedDiagram with_random_markings(MarkedDiagram d, std::mt19937& rng) {
  d.markings.clear();
  if (d.arc_count() == 0) return d;
  std::uniform_int_distribution<int> count(1, 3), arc(0, d.arc_count() - 1);
  for (int k = count(rng); k > 0; --k) {
    const Rational b1 = random_rational(rng), b2 = random_rational(rng);
    d.markings.push_back({arc(rng), 0, b1 + b2, b1, b2});
  }
  return d;
}

bool same_profiles(const PipelineResult& a, const PipelineResult& b) {
  return same_homology(a.homology, b.homology) && a.f_profile == b.f_profile && a.e_profile == b.e_profile;
}

Verdict criterion1() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  int runs = 0;
  for (const auto& c : corpus(3)) {
    const StateCube cube = build_hypercube(c.diagram);
    for (Flavor f : {Flavor::X, Flavor::Y}) {
      const DSquaredReport r = check_d_squared(assemble_complex(cube, solve_edge_signs(cube, f)));
      ++runs;
      if (!r.ok) v.fail(c.name + " flavor " + name(f));
    }
  }
  const double t = seconds_since(t0);
  if (t > kBudgetDSquared) v.fail("runtime " + fmt_time(t));
  if (v.ok) v.detail = std::to_string(runs) + " complexes, " + fmt_time(t);
  return v;
}

Verdict criterion2() {
  Verdict v;
  std::mt19937 rng(kSeed);
  int runs = 0;
  for (const auto& c : corpus(3)) {
    for (Flavor f : {Flavor::X, Flavor::Y}) {
      const MarkedDiagram d = with_random_markings(c.diagram, rng);
      const StateCube cube = build_hypercube(d);
      const BigradedComplex cx = assemble_complex(cube, solve_edge_signs(cube, f));
      const auto sigma = fix_action_signs(cube);
      std::vector<ChainMap> maps;
      for (auto g : {ActionGenerator::E, ActionGenerator::F}) maps.push_back(assemble_action(cx, cube, g, sigma));
      for (const auto& r : chain_checks(cx, maps, cube.epsilon_f())) {
        if (!r.ok) v.fail(c.name + " " + name(f) + " " + r.name + ": " + r.detail);
      }
      ++runs;
    }
  }
  if (v.ok) v.detail = std::to_string(runs) + " randomly marked complexes";
  return v;
}

Verdict criterion3() {
  Verdict v;
  std::mt19937 rng(kSeed + 3);
  for (int n = 0; n <= kMaxCircles; ++n) {
    for (const auto& r : inner_product_checks(n)) {
      if (!r.ok) v.fail("n=" + std::to_string(n) + " " + r.name + ": " + r.detail);
    }
    for (int rep = 0; rep < kRandomReps; ++rep) {
      RepData data{random_rational(rng), {}};
      for (int j = 0; j < n; ++j) data.z.push_back(random_rational(rng));
      for (const auto& r : gl11_checks(data)) {
        if (!r.ok) v.fail("n=" + std::to_string(n) + " " + r.name + ": " + r.detail);
      }
    }
  }
  if (v.ok) v.detail = "n <= " + std::to_string(kMaxCircles) + ", " + std::to_string(kRandomReps) + " reps each";
  return v;
}

Verdict criterion4() {
  Verdict torsion, image;
  const auto t0 = std::chrono::steady_clock::now();
  std::string located;
  for (int n = 2; n <= 6; ++n) {
    for (Flavor f : {Flavor::X, Flavor::Y}) {
      PipelineOptions o;
      o.flavor = f;
      const PipelineResult r = run_pretzel(n, o);
      const std::string tag = "n=" + std::to_string(n) + " " + name(f);
      if (r.homology.all_torsion() != std::vector<Integer>{Integer(n)}) torsion.fail(tag + " torsion differs");
      const auto w = torsion_witness(r.homology, *r.f_star, n);
      if (w.size() != 1 || !w.front().in_image) image.fail(tag + " not in image of f");
      if (f == Flavor::Y && w.size() == 1) {
        located += (located.empty() ? "" : " ") + std::string("Z/") + std::to_string(n) + "@(" +
                   std::to_string(w.front().h) + "," + std::to_string(w.front().q) + ")";
      }
    }
  }
  const double t = seconds_since(t0);
  Verdict v;
  if (!torsion.ok) v.fail(torsion.detail);
  if (!image.ok) v.fail(image.detail);
  if (t > kBudgetTorsion) v.fail("runtime " + fmt_time(t));
  v.detail = "torsion subgroup Z/n: " + std::string(torsion.ok ? "yes" : "no") + " [" + located +
             "]; in image of f: " + (image.ok ? "yes" : "no (" + image.detail + ")") + "; " + fmt_time(t);
  return v;
}

Verdict criterion5() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 3; ++n) {
    for (Flavor f : {Flavor::X, Flavor::Y}) {
      PipelineOptions o;
      o.flavor = f;
      const PipelineResult red = run_pretzel(n, o);
      const PipelineResult full = run_pretzel_full(n, o);
      const std::string tag = "n=" + std::to_string(n) + " " + name(f);
      if (!same_homology(red.homology, full.homology)) v.fail(tag + " homology differs");
      if (red.f_profile != full.f_profile) v.fail(tag + " f profile differs");
    }
  }
  const double t = seconds_since(t0);
  if (t > kBudgetCrosscheck) v.fail("runtime " + fmt_time(t));
  if (v.ok) v.detail = "n <= 3, both flavors, " + fmt_time(t);
  return v;
}

Verdict criterion6() {
  Verdict v;
  int runs = 0;
  for (const auto& c : corpus(3)) {
    const auto ev = gaussian_eliminate(even_complex(c.diagram), {});
    const Homology even = homology_groups(ev.complex);
    for (Flavor f : {Flavor::X, Flavor::Y}) {
      PipelineOptions o;
      o.flavor = f;
      o.action = false;
      const Mod2Report rep = mod2_compare(run_diagram(c.diagram, o).homology, even);
      if (!rep.match()) v.fail(c.name + " " + name(f) + " " + rep.summary());
      ++runs;
    }
  }
  if (v.ok) v.detail = std::to_string(runs) + " comparisons";
  return v;
}

Verdict criterion7() {
  Verdict v;
  const MarkedDiagram base = load_data("trefoil_right");
  const Rational one(1), half(1, 2);
  auto marked = [&](std::vector<Marking> ms) {
    MarkedDiagram d = base;
    d.markings = std::move(ms);
    return d;
  };
  PipelineOptions o;
  o.flavor = Flavor::Y;
  auto run = [&](const MarkedDiagram& d) { return run_diagram(d, o); };
  int cases = 0;
  for (const Crossing& c : base.crossings) {
    const int a = c.arcs[0], b = c.arcs[1], cc = c.arcs[2], dd = c.arcs[3];
    const PipelineResult ref = run(marked({{a, 0, one, half, half}}));
    if (!ref.f_star || !ref.e_star) v.fail("missing induced maps");
    // (a) another position on the same arc
    if (!same_profiles(ref, run(marked({{a, 1, one, half, half}})))) v.fail("position change");
    // (b) across the over strand
    const PipelineResult over_b = run(marked({{b, 0, one, half, half}}));
    if (!same_profiles(over_b, run(marked({{dd, 0, one, half, half}})))) v.fail("over-slide");
    // (c) under the over strand with the correction on the over arc
    const PipelineResult under = run(marked({{cc, 0, -one, -half, -half}, {b, 0, 2 * one, one, one}}));
    if (!same_profiles(ref, under)) v.fail("under-slide");
    cases += 3;
  }
  if (v.ok) v.detail = std::to_string(cases) + " slides on the marked trefoil, flavor Y";
  return v;
}

Verdict criterion8() {
  Verdict v;
  int runs = 0;
  auto compare = [&](const std::string& tag, const std::function<PipelineResult(bool)>& run) {
    const PipelineResult raw = run(false), el = run(true);
    if (!same_homology(raw.homology, el.homology)) v.fail(tag + " homology");
    if (raw.f_profile != el.f_profile || raw.e_profile != el.e_profile) v.fail(tag + " action profile");
    ++runs;
  };
  for (const auto& c : corpus(2)) {
    MarkedDiagram d = c.diagram;
    if (d.markings.empty() && d.arc_count() > 0) d.markings.push_back({0, 0, 1, Rational(1, 2), Rational(1, 2)});
    compare(c.name, [&](bool elim) {
      PipelineOptions o;
      o.eliminate = elim;
      return run_diagram(d, o);
    });
  }
  for (int n = 2; n <= 4; ++n) {
    compare("reduced pretzel" + std::to_string(n), [&](bool elim) {
      PipelineOptions o;
      o.eliminate = elim;
      return run_pretzel(n, o);
    });
  }
  if (v.ok) v.detail = std::to_string(runs) + " complexes";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"d^2 = 0 on the corpus, flavors X and Y", criterion1},
      {"chain-level super relations with random markings", criterion2},
      {"exterior algebra and gl(1|1) identities", criterion3},
      {"P(n,n,-n) torsion Z/n in the image of f, n = 2..6", criterion4},
      {"reduced cube agrees with the full hypercube", criterion5},
      {"odd and even homology agree mod 2", criterion6},
      {"marking slides preserve homology and action profiles", criterion7},
      {"Gaussian elimination preserves homology and action profiles", criterion8},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    failures += v.ok ? 0 : 1;
    std::cout << "criterion " << i + 1 << ": " << (v.ok ? "PASS" : "FAIL") << " - " << criteria[i].first;
    if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
    std::cout << std::endl;
  }
  return failures;
}
