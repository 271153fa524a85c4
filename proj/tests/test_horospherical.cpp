#include "oracles.hpp"

#include "horoaut/bundles.hpp"
#include "horoaut/error.hpp"
#include "horoaut/horospherical.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace horoaut;

namespace {

HorosphericalDatum f1_datum() {
  HorosphericalDatum d;
  d.group = {{{DynkinType::A, 1}}, 1};
  d.marking = {{0, 1}};
  d.fiber_fan = projective_space_fan(1);
  d.embedding = {{{1}, {1}}};
  return d;
}

std::set<IntVector> fiber_roots(const std::vector<BRoot>& roots) {
  std::set<IntVector> out;
  for (const auto& b : roots) out.insert(b.m_fiber);
  return out;
}

void check_consistent(const AutReport& r) {
  CHECK(r.dim_aut_total == r.dim_aut_gp + r.dim_s + r.n_semisimple + std::accumulate(r.unipotent_dims.begin(), r.unipotent_dims.end(), Int{0}));
  CHECK(r.dim_levi + r.dim_unipotent_radical == r.dim_aut_total);
  CHECK(r.reductive == r.unipotent_dims.empty());
  CHECK(r.levi_generators.size() == static_cast<std::size_t>(r.n_semisimple));
  CHECK(r.radical_generators.size() == r.unipotent_dims.size());
  for (const auto& b : r.roots) {
    if (b.kind == RootKind::semisimple) {
      CHECK(is_zero(b.m_ambient.fw));
      CHECK(b.v_dim == 1);
    }
  }
}

}  // namespace

TEST_SUITE("horospherical") {
  TEST_CASE("F_1 as a horospherical variety") {
    const auto vd = validate_datum(f1_datum());
    const auto r = aut_report(vd);
    CHECK(r.dim_aut_gp == 3);
    CHECK(r.dim_s == 1);
    CHECK(r.n_semisimple == 0);
    CHECK(r.unipotent_dims == std::vector<Int>{2});
    CHECK(r.dim_aut_total == 6);
    CHECK(r.dim_unipotent_radical == 2);
    CHECK_FALSE(r.reductive);
    check_consistent(r);
    const auto ext = extendable_fiber_roots(vd);
    REQUIRE(ext.extends.size() == 1);
    CHECK(ext.extends[0].m_fiber == IntVector{1});
    CHECK_FALSE(ext.extends[0].g_normalized);
    CHECK(ext.does_not_extend == std::vector<IntVector>{{-1}});
  }

  TEST_CASE("degeneration to toric varieties") {
    std::mt19937_64 rng(31337);
    std::vector<Fan> fans = {projective_space_fan(3), product_fan(hirzebruch_fan(2), projective_space_fan(1))};
    for (int i = 0; i < 40; ++i) fans.push_back(oracle::random_star_fan(rng, i % 8));
    for (const Fan& fan : fans) {
      const auto toric = toric_aut_report(validate_fan(fan));
      const auto r = aut_report(validate_datum(torus_only_datum(fan)));
      CHECK(r.dim_aut_gp == 0);
      CHECK(r.dim_aut_total == toric.dim_aut);
      CHECK(static_cast<std::size_t>(r.n_semisimple) == toric.n_semisimple);
      CHECK(r.unipotent_dims.size() == toric.n_unipotent);
      CHECK(r.reductive == toric.reductive);
      std::set<IntVector> roots;
      for (const auto& d : toric.roots) roots.insert(d.m);
      CHECK(fiber_roots(r.roots) == roots);
      check_consistent(r);
    }
  }

  TEST_CASE("validation errors") {
    auto d = f1_datum();
    d.fiber_fan = Fan{1, {{1}, {-2}}, {{0}, {1}}};
    CHECK_THROWS_WITH_AS(validate_datum(d), doctest::Contains("FanInvalid"), Error);
    CHECK_THROWS_WITH_AS(validate_datum(d), doctest::Contains("NotPrimitiveRay"), Error);

    d = f1_datum();
    d.fiber_fan = Fan{2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}};
    d.group.torus_rank = 2;
    d.embedding = {{{0}, {1, 0}}, {{0}, {0, 1}}};
    CHECK_THROWS_WITH_AS(validate_datum(d), doctest::Contains("NotSmooth"), Error);

    d = f1_datum();
    d.group = {{{DynkinType::A, 2}}, 1};
    d.embedding = {{{1, 1}, {1}}};
    CHECK_THROWS_WITH_AS(validate_datum(d), doctest::Contains("EmbeddingNotCharacterOfP"), Error);
    CHECK_THROWS_WITH_AS(validate_datum(d), doctest::Contains("basis vector 0"), Error);

    d = f1_datum();
    d.fiber_fan = projective_space_fan(2);
    d.embedding = {{{1}, {1}}, {{2}, {2}}};
    CHECK_THROWS_WITH_AS(validate_datum(d), doctest::Contains("EmbeddingNotInjective"), Error);

    d = f1_datum();
    d.embedding.clear();
    CHECK_THROWS_WITH_AS(validate_datum(d), doctest::Contains("DimensionMismatch"), Error);

    d = f1_datum();
    d.embedding = {{{0}, {0}}};
    CHECK_THROWS_WITH_AS(validate_datum(d), doctest::Contains("EmbeddingNotInjective"), Error);
  }

  TEST_CASE("G/P itself: point fiber") {
    HorosphericalDatum d;
    d.group = {{{DynkinType::C, 3}}, 0};
    d.marking = {{0, 1}};
    d.fiber_fan = Fan{0, {}, {}};
    const auto r = aut_report(validate_datum(d));
    CHECK(r.dim_aut_total == 35);
    CHECK_FALSE(r.g_surjects);
    CHECK_FALSE(r.levi_generated_by_g);
    CHECK(r.reductive);
  }

  TEST_CASE("change of basis of the fiber lattice") {
    std::mt19937_64 rng(5);
    const std::vector<IntMatrix> us = {{{1, 1}, {0, 1}}, {{0, 1}, {1, 0}}, {{2, 1}, {1, 1}}, {{1, 0}, {-3, 1}}};
    const std::vector<BundleSpec> specs = {
        {{{DynkinType::A, 1}}, {{0, 1}}, {{0}, {1}, {3}}},
        {{{DynkinType::A, 2}}, {{0, 1}, {0, 2}}, {{0, 0}, {1, -1}, {1, 1}}},
        {{{DynkinType::C, 2}}, {{0, 2}}, {{0}, {0}, {-1}}},
    };
    for (const auto& spec : specs) {
      const HorosphericalDatum base = to_horospherical_datum(spec);
      const auto before = aut_report(validate_datum(base));
      for (const IntMatrix& u : us) {
        HorosphericalDatum d = base;
        d.fiber_fan = transform_fan(base.fiber_fan, u);
        for (std::size_t i = 0; i < 2; ++i) {
          Weight w{IntVector(base.embedding[0].fw.size(), 0), IntVector(base.embedding[0].torus.size(), 0)};
          for (std::size_t j = 0; j < 2; ++j) w = w + u[i][j] * base.embedding[j];
          d.embedding[i] = w;
        }
        const auto after = aut_report(validate_datum(d));
        CHECK(after.dim_aut_total == before.dim_aut_total);
        CHECK(after.n_semisimple == before.n_semisimple);
        CHECK(after.unipotent_dims.size() == before.unipotent_dims.size());
        std::multiset<Weight> a, b;
        for (const auto& r : before.roots) a.insert(r.m_ambient);
        for (const auto& r : after.roots) b.insert(r.m_ambient);
        CHECK(a == b);
      }
    }
  }

  TEST_CASE("marking monotonicity") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      HorosphericalDatum d;
      d.group = {{{DynkinType::A, 3}}, 2};
      d.marking = {{0, 1}};
      d.fiber_fan = oracle::random_star_fan(rng, trial % 5);
      std::uniform_int_distribution<Int> c(-2, 2);
      d.embedding = {{{c(rng), 0, 0}, {1, 0}}, {{c(rng), 0, 0}, {0, 1}}};
      const auto small = fiber_roots(b_plus_roots(validate_datum(d)));
      for (std::vector<NodeRef> extra : {std::vector<NodeRef>{{0, 2}}, std::vector<NodeRef>{{0, 2}, {0, 3}}}) {
        HorosphericalDatum bigger = d;
        bigger.marking.insert(bigger.marking.end(), extra.begin(), extra.end());
        const auto large = fiber_roots(b_plus_roots(validate_datum(bigger)));
        CHECK(std::includes(small.begin(), small.end(), large.begin(), large.end()));
      }
      HorosphericalDatum other = d;
      other.marking = {{0, 1}, {0, 3}};
      other.embedding[0].fw[2] = c(rng);
      const auto with3 = fiber_roots(b_plus_roots(validate_datum(other)));
      other.marking = {{0, 1}, {0, 2}, {0, 3}};
      const auto with23 = fiber_roots(b_plus_roots(validate_datum(other)));
      CHECK(std::includes(with3.begin(), with3.end(), with23.begin(), with23.end()));
    }
  }

  TEST_CASE("extendability partitions the fiber roots") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      HorosphericalDatum d;
      d.group = {{{DynkinType::A, 1}, {DynkinType::G, 2}}, 2};
      d.marking = {{0, 1}, {1, 2}};
      d.fiber_fan = oracle::random_star_fan(rng, trial % 6);
      std::uniform_int_distribution<Int> c(-1, 1);
      d.embedding = {{{c(rng), 0, c(rng)}, {1, 0}}, {{c(rng), 0, c(rng)}, {0, 1}}};
      const auto vd = validate_datum(d);
      const auto ext = extendable_fiber_roots(vd);
      std::set<IntVector> all;
      for (const auto& r : demazure_roots(vd.fan())) all.insert(r.m);
      std::set<IntVector> joined(ext.does_not_extend.begin(), ext.does_not_extend.end());
      for (const auto& e : ext.extends) CHECK(joined.insert(e.m_fiber).second);
      CHECK(joined == all);
      check_consistent(aut_report(vd));
    }
  }
}
