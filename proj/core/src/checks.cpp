#include "okh/checks.hpp"

#include "okh/cube.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace okh {

namespace {

std::string word_text(Word w) {
  if (w == 0) return "1";
  std::ostringstream s;
  bool first = true;
  for (int i = 0; w >> i; ++i) {
    if (!has(w, i)) continue;
    s << (first ? "" : "^") << 'x' << i;
    first = false;
  }
  return s.str();
}

class Collector {
 public:
  void expect(const std::string& name, bool ok, const std::function<std::string()>& detail) {
    auto [it, fresh] = index_.try_emplace(name, static_cast<int>(out_.size()));
    if (fresh) out_.push_back({name, true, {}});
    CheckResult& r = out_[it->second];
    if (!ok && r.ok) {
      r.ok = false;
      r.detail = detail();
    }
  }
  void merge(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) expect(r.name, r.ok, [&] { return r.detail; });
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::vector<CheckResult> out_;
  std::map<std::string, int> index_;
};

}  // namespace

std::vector<CheckResult> inner_product_checks(int n) {
  Collector c;
  const Word top = Word{1} << n;
  auto at = [&](Word w) { return ExtElement::word(n, w); };
  for (Word w = 0; w < top; ++w) {
    const ExtElement v = at(w);
    for (int i = 0; i < n; ++i) {
      const ExtElement xi = ExtElement::variable(n, i);
      auto where = [&] { return "i=" + std::to_string(i) + " v=" + word_text(w); };
      c.expect("contract_square", contract(i, contract(i, v)).is_zero(), where);
      c.expect("contract_unit", contract(i, wedge(xi, v)) + wedge(xi, contract(i, v)) == v, where);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const ExtElement xj = ExtElement::variable(n, j);
        auto where2 = [&] { return where() + " j=" + std::to_string(j); };
        c.expect("contract_anticommute",
                 contract(i, contract(j, v)) == Rational(-1) * contract(j, contract(i, v)), where2);
        c.expect("contract_wedge_mixed",
                 (contract(i, wedge(xj, v)) + wedge(xj, contract(i, v))).is_zero(), where2);
      }
      for (Word u = 0; u < top; ++u) {
        const ExtElement wv = at(u);
        const Rational sign = (degree(w) % 2) ? -1 : 1;
        c.expect("contract_leibniz",
                 contract(i, wedge(v, wv)) == wedge(contract(i, v), wv) + sign * wedge(v, contract(i, wv)),
                 [&] { return where() + " w=" + word_text(u); });
      }
    }
  }
  return c.take();
}

std::vector<CheckResult> gl11_checks(const RepData& rep) {
  Collector c;
  const int n = static_cast<int>(rep.z.size());
  const Rational eps = rep.epsilon();
  auto E = [&](const ExtElement& v) { return act(Generator::E, rep, v); };
  auto F = [&](const ExtElement& v) { return act(Generator::F, rep, v); };
  auto H1 = [&](const ExtElement& v) { return act(Generator::H1, rep, v); };
  auto H2 = [&](const ExtElement& v) { return act(Generator::H2, rep, v); };
  for (Word w = 0; w < (Word{1} << n); ++w) {
    const ExtElement v = ExtElement::word(n, w);
    auto where = [&] { return "v=" + word_text(w); };
    c.expect("e_square", E(E(v)).is_zero(), where);
    c.expect("f_square", F(F(v)).is_zero(), where);
    c.expect("ef_plus_fe", E(F(v)) + F(E(v)) == eps * v, where);
    c.expect("h1_e", H1(E(v)) - E(H1(v)) == E(v), where);
    c.expect("h1_f", H1(F(v)) - F(H1(v)) == Rational(-1) * F(v), where);
    c.expect("h2_e", H2(E(v)) - E(H2(v)) == Rational(-1) * E(v), where);
    c.expect("h2_f", H2(F(v)) - F(H2(v)) == F(v), where);
  }
  return c.take();
}

std::vector<CheckResult> chain_checks(const BigradedComplex& cx, const std::vector<ChainMap>& maps,
                                      const Rational& eps) {
  Collector c;
  const DSquaredReport dd = check_d_squared(cx);
  c.expect("d_squared", dd.ok, [&] { return dd.describe(cx); });
  const ChainMap* e = nullptr;
  const ChainMap* f = nullptr;
  for (const auto& m : maps) {
    if (m.name == "e") e = &m;
    if (m.name == "f") f = &m;
    c.expect("chain_map_" + m.name, is_chain_map(cx, m), [&] { return m.name + " does not commute with d"; });
  }
  auto first_entry = [](const RatMatrix& m) {
    const auto p = m.first_nonzero();
    return "entry (" + std::to_string(p->first) + "," + std::to_string(p->second) + ") = " +
           to_string(m.at(p->first, p->second));
  };
  if (e) {
    const RatMatrix ee = e->m * e->m;
    c.expect("chain_e_square", ee.is_zero(), [&] { return first_entry(ee); });
  }
  if (f) {
    const RatMatrix ff = f->m * f->m;
    c.expect("chain_f_square", ff.is_zero(), [&] { return first_entry(ff); });
  }
  if (e && f) {
    const RatMatrix r = e->m * f->m + f->m * e->m - RatMatrix::identity(cx.size()).scaled(eps);
    c.expect("chain_ef_plus_fe", r.is_zero(), [&] { return first_entry(r); });
  }
  return c.take();
}

std::vector<CheckResult> diagram_checks(const MarkedDiagram& d, Flavor flavor, int corrupt_edge) {
  Collector c;
  const StateCube cube = build_hypercube(d);
  EdgeSigns es = solve_edge_signs(cube, flavor);
  if (corrupt_edge >= 0 && corrupt_edge < cube.edge_count()) es.sign[corrupt_edge] *= -1;
  const BigradedComplex cx = assemble_complex(cube, es);
  std::vector<ChainMap> maps;
  std::string sigma_error;
  try {
    const auto sigma = fix_action_signs(cube);
    for (auto g : {ActionGenerator::E, ActionGenerator::F, ActionGenerator::H1, ActionGenerator::H2}) {
      maps.push_back(assemble_action(cx, cube, g, sigma));
    }
  } catch (const std::logic_error& ex) {
    sigma_error = ex.what();
  }
  c.expect("action_signs", sigma_error.empty(), [&] { return sigma_error; });
  c.merge(chain_checks(cx, maps, cube.epsilon_f()));

  std::set<int> sizes;
  for (const auto& v : cube.vertices()) {
    sizes.insert(v.circles);
    c.merge(gl11_checks(v.rep()));
  }
  for (int n : sizes) c.merge(inner_product_checks(n));
  return c.take();
}

}  // namespace okh
