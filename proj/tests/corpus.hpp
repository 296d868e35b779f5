#pragma once

// Diagram corpus shared by the unit and acceptance tests.

#include "okh/pipeline.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace okh::testing {

struct CorpusEntry {
  std::string name;
  MarkedDiagram diagram;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline MarkedDiagram load_data(const std::string& name) {
  return parse_pd(read_file(std::string(OKH_DATA_DIR) + "/" + name + ".pd"));
}

inline const std::vector<std::string>& data_names() {
  static const std::vector<std::string> names{"unknot",        "kink",         "hopf_negative",
                                              "hopf_positive", "trefoil_left", "trefoil_right",
                                              "figure_eight"};
  return names;
}

inline MarkedDiagram torsion_pretzel_pd(int n) {
  const auto p = torsion_pretzel(n);
  return pretzel_pd(p[0], p[1], p[2]);
}

/// Data files plus the torsion pretzels up to max_pretzel on the full hypercube.
inline std::vector<CorpusEntry> corpus(int max_pretzel = 3) {
  std::vector<CorpusEntry> out;
  for (const auto& n : data_names()) out.push_back({n, load_data(n)});
  for (int n = 1; n <= max_pretzel; ++n) {
    out.push_back({"pretzel" + std::to_string(n), torsion_pretzel_pd(n)});
  }
  return out;
}

}  // namespace okh::testing
