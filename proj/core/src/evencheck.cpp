#include "okh/evencheck.hpp"

#include <bit>
#include <set>
#include <sstream>

namespace okh {

namespace {

IntMatrix even_merge(const SaddleDescriptor& s, int source_n, int target_n) {
  IntMatrix m(1 << target_n, 1 << source_n);
  for (Word w = 0; w < (Word{1} << source_n); ++w) {
    if (has(w, s.source_a) && has(w, s.source_b)) continue;
    Word out = 0;
    for (int i = 0; i < source_n; ++i) {
      if (has(w, i)) out |= Word{1} << s.target[i];
    }
    m.set_column(static_cast<int>(w), {{static_cast<int>(out), Integer(1)}});
  }
  return m;
}

IntMatrix even_split(const SaddleDescriptor& s, int source_n, int target_n) {
  IntMatrix m(1 << target_n, 1 << source_n);
  const Word b1 = Word{1} << s.y1, b2 = Word{1} << s.y2;
  for (Word w = 0; w < (Word{1} << source_n); ++w) {
    Word rest = 0;
    for (int i = 0; i < source_n; ++i) {
      if (i != s.source_y && has(w, i)) rest |= Word{1} << s.target[i];
    }
    SparseVec<Integer> col;
    if (has(w, s.source_y)) {
      col.push_back({static_cast<int>(rest | b1 | b2), Integer(1)});
    } else {
      col.push_back({static_cast<int>(rest | b1), Integer(1)});
      col.push_back({static_cast<int>(rest | b2), Integer(1)});
    }
    m.set_column(static_cast<int>(w), std::move(col));
  }
  return m;
}

}  // namespace

StateCube even_hypercube(const MarkedDiagram& d) {
  StateCube cube = build_hypercube(d);
  const int n = d.crossing_count();
  for (int v = 0; v < cube.vertex_count(); ++v) {
    const Resolution r = resolution_from_index(static_cast<std::uint64_t>(v), n);
    for (int k = 0; k < n; ++k) {
      if (r[k]) continue;
      const SaddleDescriptor s = saddle_info(d, r, k);
      const int sn = cube.vertex(v).circles;
      const int tn = cube.vertex(v + (1 << k)).circles;
      if (s.kind == SaddleKind::Merge) {
        cube.set_edge(v, k, EdgeKind::Merge, even_merge(s, sn, tn));
      } else {
        cube.set_edge(v, k, EdgeKind::Split, even_split(s, sn, tn));
      }
    }
  }
  cube.ladybug = nullptr;
  return cube;
}

BigradedComplex even_complex(const MarkedDiagram& d) {
  const StateCube cube = even_hypercube(d);
  EdgeSigns es;
  es.sign.resize(cube.edge_count());
  for (int ei = 0; ei < cube.edge_count(); ++ei) {
    const auto& e = cube.edge(ei);
    const unsigned before = static_cast<unsigned>(e.from) & ((1U << e.axis) - 1U);
    es.sign[ei] = (std::popcount(before) & 1) ? -1 : 1;
  }
  return assemble_complex(cube, es);
}

std::string Mod2Report::summary() const {
  if (match()) return "mod2: MATCH";
  std::ostringstream out;
  out << "mod2: MISMATCH";
  for (const auto& m : mismatches) {
    out << " (" << m.h << "," << m.q << "): odd " << m.odd << " even " << m.even << ';';
  }
  return out.str();
}

Mod2Report mod2_compare(const Homology& odd, const Homology& even) {
  Mod2Report rep;
  rep.odd = mod2_dimensions(odd);
  rep.even = mod2_dimensions(even);
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, v] : rep.odd) keys.insert(k);
  for (const auto& [k, v] : rep.even) keys.insert(k);
  for (const auto& k : keys) {
    const int a = rep.odd.count(k) ? rep.odd.at(k) : 0;
    const int b = rep.even.count(k) ? rep.even.at(k) : 0;
    if (a != b) rep.mismatches.push_back({k.first, k.second, a, b});
  }
  return rep;
}

}  // namespace okh
