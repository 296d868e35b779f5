// okh: odd Khovanov homology with the gl(1|1) action.

#include "okh/checks.hpp"
#include "okh/evencheck.hpp"
#include "okh/pipeline.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string input;
  int n = 0;
  okh::Flavor flavor = okh::Flavor::Y;
  bool reduced = false;
  bool action = false;
  bool crosscheck = false;
  bool full_crosscheck = false;
  bool json = false;
  int threads = 1;
  int corrupt_edge = -1;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs independent jobs on at most `threads` workers.
void run_jobs(const std::vector<std::function<void()>>& jobs, int threads) {
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs.size());
  auto work = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      try {
        jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

okh::MarkedDiagram load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream s;
  s << in.rdbuf();
  return okh::parse_pd(s.str());
}

json integer(const okh::Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return okh::to_int64(v);
  }
  return okh::to_string(v);
}

json integers(const std::vector<okh::Integer>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(integer(v));
  return out;
}

json diagram_json(const okh::MarkedDiagram& d) {
  json marks = json::array();
  for (const auto& m : d.markings) {
    marks.push_back({{"arc", d.arc_labels[m.arc]},
                     {"position", m.position},
                     {"alpha", okh::to_string(m.alpha)},
                     {"beta1", okh::to_string(m.beta1)},
                     {"beta2", okh::to_string(m.beta2)}});
  }
  return {{"crossings", d.crossing_count()},
          {"arcs", d.arc_count()},
          {"n_plus", d.n_plus},
          {"n_minus", d.n_minus},
          {"markings", marks}};
}

json homology_json(const okh::Homology& hom) {
  json out = json::array();
  for (const auto& [k, g] : hom.groups) {
    out.push_back({{"h", g.h}, {"q", g.q}, {"rank", g.free_rank}, {"torsion", integers(g.torsion)}});
  }
  return out;
}

json blocks_json(const okh::BidegreeMap& induced, const okh::Homology& hom) {
  json out = json::array();
  for (const auto& [k, im] : induced) {
    const okh::HomologyGroup* target = hom.at(im.h + im.dh, im.q + im.dq);
    if (!target) continue;
    json matrix = json::array();
    for (const auto& row : im.matrix) matrix.push_back(integers(row));
    out.push_back({{"h", im.h},
                   {"q", im.q},
                   {"dh", im.dh},
                   {"dq", im.dq},
                   {"source_orders", integers(hom.at(im.h, im.q)->orders)},
                   {"target_orders", integers(target->orders)},
                   {"matrix", matrix}});
  }
  return out;
}

// Weights (h1, h2) per bidegree, read off the diagonal of the transported maps.
json weights_json(const okh::PipelineResult& r) {
  json out = json::array();
  const okh::ChainMap* h1 = r.map("h1");
  const okh::ChainMap* h2 = r.map("h2");
  if (!h1 || !h2) return out;
  for (const auto& [k, g] : r.homology.groups) {
    const int i = g.basis.front();
    out.push_back({{"h", g.h},
                   {"q", g.q},
                   {"h1", okh::to_string(h1->m.at(i, i))},
                   {"h2", okh::to_string(h2->m.at(i, i))}});
  }
  return out;
}

json action_json(const okh::PipelineResult& r) {
  json out;
  out["f"] = r.f_star ? blocks_json(*r.f_star, r.homology) : json::array();
  out["e"] = r.e_star ? blocks_json(*r.e_star, r.homology) : json::array();
  out["weights"] = weights_json(r);
  return out;
}

std::string divisors(const std::vector<okh::Integer>& ds) {
  std::string s = "[";
  for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? "," : "") + okh::to_string(ds[i]);
  return s + "]";
}

void print_table(std::ostream& out, const okh::Homology& hom) {
  out << "h q rank torsion\n";
  for (const auto& row : okh::homology_table(hom)) out << row << '\n';
}

void print_action(std::ostream& out, const char* name, const okh::BidegreeMap& induced,
                  const okh::ProfileMap& profile, const okh::Homology& hom) {
  for (const auto& [k, im] : induced) {
    if (!hom.at(im.h + im.dh, im.q + im.dq)) continue;
    const auto& p = profile.at(k);
    out << name << "* (" << im.h << ',' << im.q << ") -> (" << im.h + im.dh << ',' << im.q + im.dq
        << "): image " << p.image_free << ' ' << divisors(p.image_torsion) << ", coker "
        << p.coker_free << ' ' << divisors(p.coker_torsion) << '\n';
  }
}

void print_fallbacks(std::ostream& out, const okh::PipelineResult& r) {
  if (r.signs.fallback_faces.empty()) return;
  out << "signs: " << r.signs.fallback_faces.size() << " free faces took the other parity\n";
}

okh::PipelineOptions options(const RunConfig& cfg) {
  okh::PipelineOptions o;
  o.flavor = cfg.flavor;
  o.reduced = cfg.reduced;
  o.action = cfg.action || cfg.reduced;
  o.corrupt_edge = cfg.corrupt_edge;
  return o;
}

const char* flavor_name(okh::Flavor f) { return f == okh::Flavor::X ? "X" : "Y"; }

int cmd_compute(const RunConfig& cfg) {
  const okh::MarkedDiagram d = load(cfg.input);
  okh::PipelineResult odd;
  okh::Homology even;
  std::vector<std::function<void()>> jobs{[&] { odd = okh::run_diagram(d, options(cfg)); }};
  if (cfg.crosscheck) {
    jobs.push_back([&] {
      const auto el = okh::gaussian_eliminate(okh::even_complex(d), {});
      even = okh::homology_groups(el.complex);
    });
  }
  run_jobs(jobs, cfg.threads);
  std::optional<okh::Mod2Report> mod2;
  if (cfg.crosscheck) mod2 = okh::mod2_compare(odd.homology, even);

  if (cfg.json) {
    json out;
    out["diagram"] = diagram_json(d);
    out["flavor"] = flavor_name(cfg.flavor);
    out["reduced"] = cfg.reduced;
    out["homology"] = homology_json(odd.homology);
    if (cfg.action) out["action"] = action_json(odd);
    json checks;
    checks["d_squared"] = true;
    checks["sign_fallbacks"] = odd.signs.fallback_faces.size();
    if (mod2) checks["mod2"] = mod2->match() ? "MATCH" : "MISMATCH";
    out["checks"] = checks;
    std::cout << out.dump(2) << '\n';
  } else {
    print_table(std::cout, odd.homology);
    if (cfg.action && odd.f_star) print_action(std::cout, "f", *odd.f_star, odd.f_profile, odd.homology);
    if (cfg.action && !odd.f_star && odd.map("f")) std::cout << "f*: skipped, markings are not integral\n";
    if (cfg.action && odd.e_star) print_action(std::cout, "e", *odd.e_star, odd.e_profile, odd.homology);
    print_fallbacks(std::cout, odd);
    if (mod2) std::cout << mod2->summary() << '\n';
  }
  return mod2 && !mod2->match() ? 1 : 0;
}

int cmd_pretzel(const RunConfig& cfg) {
  if (cfg.n < 1) throw InputError("pretzel needs n >= 1");
  const auto p = okh::torsion_pretzel(cfg.n);
  okh::PipelineOptions o;
  o.flavor = cfg.flavor;
  o.corrupt_edge = cfg.corrupt_edge;
  const bool cross = cfg.full_crosscheck && cfg.n <= 3;
  okh::PipelineResult red, full;
  std::vector<std::function<void()>> jobs{[&] { red = okh::run_pretzel(cfg.n, o); }};
  if (cross) jobs.push_back([&] { full = okh::run_pretzel_full(cfg.n, o); });
  run_jobs(jobs, cfg.threads);

  std::vector<okh::Integer> orders;
  for (const auto& t : red.homology.all_torsion()) {
    if (std::find(orders.begin(), orders.end(), t) == orders.end()) orders.push_back(t);
  }
  std::vector<okh::TorsionWitness> witnesses;
  for (const auto& t : orders) {
    for (const auto& w : okh::torsion_witness(red.homology, *red.f_star, t)) witnesses.push_back(w);
  }
  const bool match = cross && okh::same_homology(red.homology, full.homology) &&
                     red.f_profile == full.f_profile;

  if (cfg.json) {
    json out;
    out["diagram"] = {{"pretzel", {p[0], p[1], p[2]}}, {"reduced_cube_states", red.cube.vertex_count()}};
    out["flavor"] = flavor_name(cfg.flavor);
    out["reduced"] = true;
    out["homology"] = homology_json(red.homology);
    out["action"] = action_json(red);
    json checks;
    checks["d_squared"] = true;
    checks["sign_fallbacks"] = red.signs.fallback_faces.size();
    json tors = json::array();
    for (const auto& w : witnesses) {
      tors.push_back({{"order", integer(w.order)}, {"h", w.h}, {"q", w.q}, {"in_image_of_f", w.in_image}});
    }
    checks["torsion"] = tors;
    if (cross) checks["crosscheck"] = match ? "MATCH" : "MISMATCH";
    out["checks"] = checks;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "P(" << p[0] << ',' << p[1] << ',' << p[2] << ") reduced cube: " << red.cube.vertex_count()
              << " states, " << red.complex.size() << " generators, " << red.simplified.size()
              << " after elimination\n";
    print_table(std::cout, red.homology);
    print_fallbacks(std::cout, red);
    if (witnesses.empty()) std::cout << "torsion: none\n";
    for (const auto& w : witnesses) {
      std::cout << "torsion Z/" << w.order << " at (h,q)=(" << w.h << ',' << w.q
                << "); in image of f: " << (w.in_image ? "yes" : "no") << '\n';
    }
    if (cross) std::cout << "crosscheck: " << (match ? "MATCH" : "MISMATCH") << '\n';
    if (cfg.full_crosscheck && !cross) std::cout << "crosscheck: skipped (n > 3)\n";
  }
  return cross && !match ? 1 : 0;
}

int cmd_check(const RunConfig& cfg) {
  const okh::MarkedDiagram d = load(cfg.input);
  const auto results = okh::diagram_checks(d, cfg.flavor, cfg.corrupt_edge);
  int failed = 0;
  for (const auto& r : results) {
    if (cfg.json) continue;
    std::cout << (r.ok ? "ok   " : "FAIL ") << r.name;
    if (!r.ok) std::cout << ": " << r.detail;
    std::cout << '\n';
  }
  for (const auto& r : results) failed += r.ok ? 0 : 1;
  if (cfg.json) {
    json checks;
    for (const auto& r : results) checks[r.name] = r.ok ? json("ok") : json(r.detail);
    std::cout << json{{"diagram", diagram_json(d)}, {"flavor", flavor_name(cfg.flavor)}, {"checks", checks}}.dump(2)
              << '\n';
  }
  if (failed) {
    const auto first = std::find_if(results.begin(), results.end(), [](const auto& r) { return !r.ok; });
    std::cerr << "check failed: " << first->name << '\n';
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"okh: odd Khovanov homology with the gl(1|1) action"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::map<std::string, okh::Flavor> flavors{{"X", okh::Flavor::X}, {"Y", okh::Flavor::Y}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--flavor", cfg.flavor, "edge sign flavor X or Y")
        ->transform(CLI::CheckedTransformer(flavors, CLI::ignore_case));
    sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--debug-corrupt-edge", cfg.corrupt_edge, "flip the sign of one cube edge")
        ->group("Debug");
  };

  auto* compute = app.add_subcommand("compute", "homology of a PD file");
  compute->add_option("file", cfg.input, "PD file")->required();
  compute->add_flag("--reduced", cfg.reduced, "restrict to ker e");
  compute->add_flag("--action", cfg.action, "report the induced e and f");
  compute->add_flag("--crosscheck-even", cfg.crosscheck, "compare with even homology mod 2");
  common(compute);

  auto* pretzel = app.add_subcommand("pretzel", "torsion pretzel family via the reduced cube");
  pretzel->add_option("n", cfg.n, "twist count")->required();
  pretzel->add_flag("--full-crosscheck", cfg.full_crosscheck, "compare with the full hypercube (n <= 3)");
  common(pretzel);

  auto* check = app.add_subcommand("check", "exact self-checks on a PD file");
  check->add_option("file", cfg.input, "PD file")->required();
  common(check);

  CLI11_PARSE(app, argc, argv);
  try {
    if (compute->parsed()) return cmd_compute(cfg);
    if (pretzel->parsed()) return cmd_pretzel(cfg);
    return cmd_check(cfg);
  } catch (const okh::DSquaredError& e) {
    std::cerr << "INTERNAL: " << e.what() << '\n';
    return 3;
  } catch (const okh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const okh::ValidationError& e) {
    std::cerr << "invalid diagram: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "INTERNAL: " << e.what() << '\n';
    return 3;
  }
}
