#include "okh/pipeline.hpp"

#include <sstream>

namespace okh {

const ChainMap* PipelineResult::map(const std::string& name) const {
  for (const auto& m : simplified_maps) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

PipelineResult run_cube(StateCube cube, const PipelineOptions& opt) {
  PipelineResult res;
  res.signs = solve_edge_signs(cube, opt.flavor, opt.policy);
  if (opt.corrupt_edge >= 0 && opt.corrupt_edge < cube.edge_count()) {
    res.signs.sign[opt.corrupt_edge] *= -1;
  }
  BigradedComplex cx = assemble_complex(cube, res.signs);
  const DSquaredReport dd = check_d_squared(cx);
  if (!dd.ok) throw DSquaredError(dd.describe(cx));

  std::vector<ChainMap> maps;
  if (opt.action || opt.reduced) {
    res.sigma = fix_action_signs(cube);
    for (auto g : {ActionGenerator::E, ActionGenerator::F, ActionGenerator::H1, ActionGenerator::H2}) {
      maps.push_back(assemble_action(cx, cube, g, res.sigma));
    }
  }
  if (opt.reduced) {
    ReducedResult red = reduced_complex(cx, cube, maps.front(), {maps.begin() + 1, maps.end()});
    cx = std::move(red.complex);
    maps = std::move(red.maps);
  }
  if (!opt.action) maps.clear();
  res.complex = cx;
  res.maps = maps;
  if (opt.eliminate) {
    EliminationResult el = gaussian_eliminate(cx, maps);
    res.simplified = std::move(el.complex);
    res.simplified_maps = std::move(el.maps);
    res.cancellations = el.cancellations;
  } else {
    res.simplified = cx;
    res.simplified_maps = maps;
  }
  res.homology = homology_groups(res.simplified);
  if (opt.action) {
    // Induced maps on integral homology need integral markings.
    auto integral = [](const ChainMap* m) {
      if (!m) return false;
      for (int j = 0; j < m->m.cols(); ++j) {
        for (const auto& e : m->m.column(j)) {
          if (!is_integral(e.value)) return false;
        }
      }
      return true;
    };
    if (const ChainMap* f = res.map("f"); integral(f)) {
      res.f_star = induced_on_homology(res.simplified, *f, res.homology);
      res.f_profile = map_profile(*res.f_star, res.homology);
    }
    if (const ChainMap* e = res.map("e"); integral(e)) {
      res.e_star = induced_on_homology(res.simplified, *e, res.homology);
      res.e_profile = map_profile(*res.e_star, res.homology);
    }
  }
  res.cube = std::move(cube);
  return res;
}

PipelineResult run_diagram(const MarkedDiagram& d, const PipelineOptions& opt) {
  return run_cube(build_hypercube(d), opt);
}

std::array<int, 3> torsion_pretzel(int n) { return {-n, -n, n}; }

PipelineResult run_pretzel(int n, const PipelineOptions& opt) {
  const auto p = torsion_pretzel(n);
  PipelineOptions o = opt;
  o.reduced = true;
  return run_cube(reduced_cube(p[0], p[1], p[2]).cube, o);
}

PipelineResult run_pretzel_full(int n, const PipelineOptions& opt) {
  const auto p = torsion_pretzel(n);
  PipelineOptions o = opt;
  o.reduced = true;
  return run_diagram(pretzel_pd(p[0], p[1], p[2]), o);
}

bool same_homology(const Homology& a, const Homology& b) {
  if (a.groups.size() != b.groups.size()) return false;
  for (const auto& [k, g] : a.groups) {
    const HomologyGroup* o = b.at(k.first, k.second);
    if (!o || o->free_rank != g.free_rank || o->torsion != g.torsion) return false;
  }
  return true;
}

std::vector<std::string> homology_table(const Homology& hom) {
  std::vector<std::string> rows;
  for (const auto& [k, g] : hom.groups) {
    std::ostringstream row;
    row << k.first << ' ' << k.second << ' ' << g.free_rank << ' ';
    if (g.torsion.empty()) row << '-';
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
      row << (i ? "," : "") << g.torsion[i];
    }
    rows.push_back(row.str());
  }
  return rows;
}

}  // namespace okh
