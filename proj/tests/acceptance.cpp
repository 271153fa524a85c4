// Acceptance suite: one line per criterion. Run with criterion numbers as
// arguments to select a subset.

#include "oracles.hpp"

#include "horoaut/bundles.hpp"
#include "horoaut/error.hpp"
#include "horoaut/fan.hpp"
#include "horoaut/horospherical.hpp"
#include "horoaut/root_system.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace horoaut;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) {
      std::ostringstream s;
      s << what << ": got " << actual << ", expected " << expected;
      failures_.push_back(s.str());
    }
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string out;
    for (std::size_t i = 0; i < failures_.size() && i < 6; ++i) out += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 6) out += "; ... (" + std::to_string(failures_.size()) + " failures)";
    return out;
  }

 private:
  std::vector<std::string> failures_;
};

const SimpleFactor A1{DynkinType::A, 1};
const SimpleFactor C2{DynkinType::C, 2};

std::vector<Fan> refined_fans() {
  std::mt19937_64 rng(0xC0FFEE);
  std::vector<Fan> fans;
  for (int i = 0; i < 60; ++i) fans.push_back(oracle::random_star_fan(rng, 1 + i % 10));
  return fans;
}

std::set<IntVector> as_set(const std::vector<DemazureRoot>& roots) {
  std::set<IntVector> out;
  for (const auto& r : roots) out.insert(r.m);
  return out;
}

void toric_baseline(Check& c) {
  auto check_oracle = [&](const ValidatedFan& vf, const std::string& name) {
    const Int radius = oracle_safe_radius(vf);
    c.expect(demazure_roots(vf) == demazure_roots_bruteforce(vf, radius), name + ": oracle mismatch");
  };
  const auto p2 = validate_fan(projective_space_fan(2));
  const auto rp2 = toric_aut_report(p2);
  c.equal(rp2.dim_aut, 8, "P2 dim");
  c.equal(rp2.n_semisimple, 6u, "P2 semisimple roots");
  check_oracle(p2, "P2");
  const auto p1p1 = validate_fan(product_fan(projective_space_fan(1), projective_space_fan(1)));
  c.equal(toric_aut_report(p1p1).dim_aut, 6, "P1xP1 dim");
  check_oracle(p1p1, "P1xP1");
  for (Int a = 0; a <= 5; ++a) {
    const std::string name = "F_" + std::to_string(a);
    const auto fa = validate_fan(hirzebruch_fan(a));
    const auto r = toric_aut_report(fa);
    c.equal(r.dim_aut, a == 0 ? 6 : a + 5, name + " dim");
    if (a >= 1) c.equal(r.n_unipotent, 2u, name + " unipotent roots");
    check_oracle(fa, name);
  }
}

void oracle_equivalence(Check& c) {
  int n = 0;
  for (const Fan& fan : refined_fans()) {
    const auto vf = validate_fan(fan);
    const auto roots = demazure_roots(vf);
    c.expect(roots == demazure_roots_bruteforce(vf, oracle_safe_radius(vf)), "fan " + std::to_string(n) + ": oracle");
    const auto part = classify_roots(roots);
    std::vector<DemazureRoot> joined = part.semisimple;
    joined.insert(joined.end(), part.unipotent.begin(), part.unipotent.end());
    std::sort(joined.begin(), joined.end());
    c.expect(joined == roots, "fan " + std::to_string(n) + ": partition");
    const auto ss = as_set(part.semisimple);
    for (const auto& m : ss) {
      IntVector neg = m;
      for (Int& x : neg) x = -x;
      c.expect(ss.contains(neg), "fan " + std::to_string(n) + ": semisimple not closed under negation");
    }
    ++n;
  }
  c.expect(n >= 50, "fewer than 50 fans");
}

void degeneration(Check& c) {
  int n = 0;
  for (const Fan& fan : refined_fans()) {
    const auto toric = toric_aut_report(validate_fan(fan));
    const auto horo = aut_report(validate_datum(torus_only_datum(fan)));
    const std::string name = "fan " + std::to_string(n++);
    c.equal(horo.dim_aut_total, toric.dim_aut, name + " dim");
    c.equal(static_cast<std::size_t>(horo.n_semisimple), toric.n_semisimple, name + " semisimple");
    c.equal(horo.unipotent_dims.size(), toric.n_unipotent, name + " unipotent");
    c.equal(horo.reductive, toric.reductive, name + " reductive");
    std::set<IntVector> fiber;
    for (const auto& b : horo.roots) fiber.insert(b.m_fiber);
    c.expect(fiber == as_set(toric.roots), name + " root sets differ");
  }
}

void f1_cross_path(Check& c) {
  const BundleSpec spec{{A1}, {{0, 1}}, {{0}, {1}}};
  const auto vb = validate_bundle(spec);
  const auto direct = bundle_roots(vb);
  const auto general = aut_report(validate_datum(to_horospherical_datum(spec)));
  const auto toric = toric_aut_report(validate_fan(hirzebruch_fan(1)));
  Int radical = 0;
  for (const auto& p : direct.pair_roots)
    if (p.nef && !p.iso) radical += *p.v_dim;
  c.equal(direct.dim_aut_total, 6, "bundle dim");
  c.equal(direct.dim_aut_base, 3, "bundle dim Aut(Y)");
  c.expect(!direct.reductive, "bundle reductive");
  c.equal(radical, 2, "bundle radical");
  c.equal(general.dim_aut_total, 6, "datum dim");
  c.equal(general.dim_aut_gp, 3, "datum dim Aut(G/P)");
  c.equal(general.dim_s, 1, "datum dim S");
  c.equal(general.n_semisimple, 0, "datum |S+|");
  c.equal(general.dim_unipotent_radical, 2, "datum radical");
  c.expect(!general.reductive, "datum reductive");
  c.equal(toric.dim_aut, 6, "toric dim");
  c.equal(static_cast<Int>(toric.n_unipotent), general.dim_unipotent_radical, "toric radical");
  c.expect(check_against_pipeline(vb).agree, "cross-path comparison");
}

void p1p1_grid(Check& c) {
  for (Int a1 = -2; a1 <= 2; ++a1)
    for (Int a2 = -2; a2 <= 2; ++a2) {
      const auto r = bundle_report(validate_bundle({{A1, A1}, {{0, 1}, {1, 1}}, {{0, 0}, {a1, a2}}}));
      const std::string name = "(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
      c.equal(r.roots.reductive, (a1 == 0 && a2 == 0) || a1 * a2 < 0, name + " reductive");
      const bool small = std::abs(a1) <= 1 && std::abs(a2) <= 1;
      c.equal(fano_status_name(r.fano), small ? "certified_fano" : "certified_not_fano", name + " fano");
    }
}

void picard_rank_one(Check& c) {
  std::vector<std::pair<std::string, std::vector<SimpleFactor>>> bases = {{"P2", {{DynkinType::A, 2}}}, {"Q3", {C2}}};
  for (int n = 1; n <= 6; ++n) bases.push_back({"P" + std::to_string(n) + " (A" + std::to_string(n) + ")", {{DynkinType::A, n}}});
  for (const auto& [name, factors] : bases) {
    const NodeRef node{0, factors[0].type == DynkinType::C ? 2 : 1};
    for (Int d = -3; d <= 3; ++d) {
      const auto vb = validate_bundle({factors, {node}, {{0}, {d}}});
      const bool reductive = bundle_roots(vb).reductive;
      const std::string label = name + " d=" + std::to_string(d);
      c.equal(reductive, d == 0, label + " reductive");
      c.equal(picard_rank_one_rule(vb), reductive, label + " rule");
    }
  }
}

void p1_q3_bundle(Check& c) {
  const auto vb = validate_bundle({{A1, C2}, {{0, 1}, {1, 2}}, {{0, 0}, {-1, -1}}});
  const auto r = bundle_report(vb);
  c.equal(k_unstability_name(k_unstability_certificate(vb)), "certified", "k_unstable");
  c.equal(fano_status_name(r.fano), "certified_fano", "fano");
  c.equal(r.roots.dim_aut_total, 24, "dim");
  c.equal(r.roots.dim_aut_base, 13, "dim Aut(Y)");
  Int iso = 0, sigma = 0;
  for (const auto& p : r.roots.pair_roots) {
    if (p.iso) ++iso;
    else if (p.nef) sigma += *p.v_dim;
  }
  c.equal(iso, 0, "|S+|");
  c.equal(sigma, 10, "sum dim V");
  c.expect(r.base_anticanonical == IntVector{2, 3}, "K_Y dual coefficients");
  c.equal(r.base_fano_index, 1, "Fano index");
  c.expect(check_against_pipeline(vb).agree, "cross-path comparison");
}

void exception_table(Check& c) {
  struct Row {
    SimpleFactor f;
    int node;
    Int dim;
  };
  const std::vector<Row> exceptions = {{{DynkinType::B, 3}, 3, 28},
                                       {{DynkinType::B, 4}, 4, 45},
                                       {{DynkinType::C, 2}, 1, 15},
                                       {{DynkinType::C, 3}, 1, 35},
                                       {{DynkinType::G, 2}, 1, 21}};
  for (const auto& row : exceptions) {
    const auto t = build_root_system({{row.f}, 0});
    for (int node = 1; node <= row.f.rank; ++node) {
      const auto got = aut_dim_homogeneous(t, t.marking(std::vector<NodeRef>{{0, node}}));
      const HomogeneousAut expected =
          node == row.node ? HomogeneousAut{row.dim, false} : HomogeneousAut{t.factors()[0].dimension(), true};
      const std::string name = factor_name(row.f) + " node " + std::to_string(node);
      c.equal(got.dim, expected.dim, name + " dim");
      c.equal(got.g_surjects, expected.g_surjects, name + " surjects");
    }
  }
}

void weyl_spot_checks(Check& c) {
  auto dim = [](SimpleFactor f, IntVector fw) {
    const auto t = build_root_system({{f}, 0});
    return weyl_dim(t, t.weight(std::move(fw), {}));
  };
  c.equal(dim({DynkinType::A, 2}, {1, 1}), 8, "A2 adjoint");
  c.equal(dim(C2, {1, 0}), 4, "C2 w1");
  c.equal(dim(C2, {0, 1}), 5, "C2 w2");
  c.equal(dim({DynkinType::B, 3}, {1, 0, 0}), 7, "B3 w1");

  std::mt19937_64 rng(0xD1CE);
  const std::vector<SimpleFactor> types = {{DynkinType::A, 3}, {DynkinType::B, 3}, C2, {DynkinType::D, 4},
                                           {DynkinType::G, 2}, {DynkinType::F, 4}, {DynkinType::E, 6}};
  for (int trial = 0; trial < 300; ++trial) {
    const auto& f = types[static_cast<std::size_t>(trial) % types.size()];
    const auto t = build_root_system({{A1, f}, 1});
    IntVector fw(1 + static_cast<std::size_t>(f.rank));
    for (Int& x : fw) x = std::bernoulli_distribution(0.7)(rng) ? 0 : std::uniform_int_distribution<Int>(1, 2)(rng);
    const Weight w = t.weight(fw, {std::uniform_int_distribution<Int>(-5, 5)(rng)});
    c.expect((weyl_dim(t, w) == 1) == is_zero(w.fw), "dim V = 1 iff fw = 0 fails for " + format_vector(fw));
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> run;
};

const std::vector<Criterion> kCriteria = {
    {1, "toric baseline: P2, P1xP1, Hirzebruch F_0..F_5", toric_baseline},
    {2, "oracle equivalence on refined 2D fans", oracle_equivalence},
    {3, "degeneration law: torus-only data reproduce the toric report", degeneration},
    {4, "F_1 cross-path: bundle, datum and fan agree", f1_cross_path},
    {5, "(P1)^2 grid: reductivity and Fano status", p1p1_grid},
    {6, "Picard rank one: reductive iff trivial twist", picard_rank_one},
    {7, "P1 x Q3 with O(1,1): K-unstable Fano, 24 = 13 + 1 + 0 + 10", p1_q3_bundle},
    {8, "exceptional Aut(G/P) table", exception_table},
    {9, "Weyl dimension spot checks", weyl_spot_checks},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  bool all_ok = true;
  for (const auto& crit : kCriteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), crit.id) == selected.end()) continue;
    Check c;
    try {
      crit.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  criterion " << crit.id << "  " << crit.title;
    if (!c.ok()) std::cout << "  [" << c.summary() << "]";
    std::cout << std::endl;
    all_ok = all_ok && c.ok();
  }
  return all_ok ? 0 : 1;
}
