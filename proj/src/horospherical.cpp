#include "horoaut/horospherical.hpp"

#include "horoaut/error.hpp"

#include <algorithm>
#include <set>

namespace horoaut {

std::string_view root_kind_name(RootKind k) { return k == RootKind::semisimple ? "semisimple" : "unipotent"; }

std::string root_label(std::span<const Int> m_fiber) { return "m=" + format_vector(m_fiber); }

Weight ValidatedDatum::ambient(std::span<const Int> m_fiber) const {
  if (m_fiber.size() != embedding_.size())
    throw Error(ErrorKind::DimensionMismatch, "fiber character has the wrong length");
  Weight w = tables_.zero_weight();
  for (std::size_t i = 0; i < m_fiber.size(); ++i) w = w + m_fiber[i] * embedding_[i];
  return w;
}

ValidatedDatum validate_datum(const HorosphericalDatum& datum) {
  RootSystemTables tables = build_root_system(datum.group);
  ParabolicMarking marking = tables.marking(datum.marking);

  std::optional<ValidatedFan> fan;
  try {
    fan.emplace(validate_fan(datum.fiber_fan));
  } catch (const Error& e) {
    throw Error(ErrorKind::FanInvalid, e.what());
  }

  const std::size_t n = static_cast<std::size_t>(fan->dim());
  if (datum.embedding.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "embedding lists " + std::to_string(datum.embedding.size()) +
                                                  " weights for a fiber of dimension " + std::to_string(n));
  }
  std::vector<Weight> embedding;
  IntMatrix rows;
  for (std::size_t i = 0; i < n; ++i) {
    Weight w = tables.weight(datum.embedding[i].fw, datum.embedding[i].torus);
    for (std::size_t g = 0; g < w.fw.size(); ++g) {
      if (!marking.is_marked(g) && w.fw[g] != 0) {
        const NodeRef node = tables.node_of(g);
        throw Error(ErrorKind::EmbeddingNotCharacterOfP,
                    "basis vector " + std::to_string(i) + " has coefficient " + std::to_string(w.fw[g]) +
                        " on unmarked node [" + std::to_string(node.factor) + "," + std::to_string(node.node) + "]");
      }
    }
    IntVector row = w.fw;
    row.insert(row.end(), w.torus.begin(), w.torus.end());
    rows.push_back(std::move(row));
    embedding.push_back(std::move(w));
  }
  if (rank(rows) != n) {
    throw Error(ErrorKind::EmbeddingNotInjective, "the " + std::to_string(n) + " embedding weights are linearly dependent");
  }
  return ValidatedDatum(std::move(tables), std::move(marking), std::move(*fan), std::move(embedding));
}

std::vector<BRoot> b_plus_roots(const ValidatedDatum& datum) {
  std::vector<BRoot> out;
  for (const DemazureRoot& r : demazure_roots(datum.fan())) {
    Weight w = datum.ambient(r.m);
    if (!is_dominant(w, datum.marking()).dominant_on_marked) continue;
    BRoot b;
    b.m_fiber = r.m;
    b.ray_index = r.ray_index;
    b.m_ambient = std::move(w);
    out.push_back(std::move(b));
  }
  std::set<IntVector> present;
  for (const auto& b : out) present.insert(b.m_fiber);
  for (auto& b : out) {
    IntVector neg = b.m_fiber;
    for (Int& x : neg) x = -x;
    b.kind = present.contains(neg) ? RootKind::semisimple : RootKind::unipotent;
    b.v_dim = weyl_dim(datum.tables(), b.m_ambient);
  }
  return out;
}

AutReport aut_report(const ValidatedDatum& datum) {
  AutReport rep;
  const HomogeneousAut base = aut_dim_homogeneous(datum.tables(), datum.marking());
  rep.dim_aut_gp = base.dim;
  rep.g_surjects = base.g_surjects;
  rep.levi_generated_by_g = base.g_surjects;
  rep.dim_s = datum.fan().dim();
  rep.roots = b_plus_roots(datum);
  for (const auto& b : rep.roots) {
    if (b.kind == RootKind::semisimple) {
      ++rep.n_semisimple;
      rep.levi_generators.push_back(root_label(b.m_fiber));
    } else {
      rep.unipotent_dims.push_back(b.v_dim);
      rep.dim_unipotent_radical = checked_add(rep.dim_unipotent_radical, b.v_dim);
      rep.radical_generators.push_back(root_label(b.m_fiber));
    }
  }
  rep.dim_aut_total = checked_add(checked_add(rep.dim_aut_gp, rep.dim_s),
                                  checked_add(rep.n_semisimple, rep.dim_unipotent_radical));
  rep.dim_levi = rep.dim_aut_total - rep.dim_unipotent_radical;
  rep.reductive = rep.unipotent_dims.empty();
  return rep;
}

Extendability extendable_fiber_roots(const ValidatedDatum& datum) {
  Extendability out;
  const auto broots = b_plus_roots(datum);
  std::set<IntVector> extending;
  for (const auto& b : broots) {
    extending.insert(b.m_fiber);
    out.extends.push_back({b.m_fiber, is_zero(b.m_ambient.fw)});
  }
  for (const DemazureRoot& r : demazure_roots(datum.fan()))
    if (!extending.contains(r.m)) out.does_not_extend.push_back(r.m);
  return out;
}

HorosphericalDatum torus_only_datum(const Fan& fan) {
  HorosphericalDatum d;
  d.group.torus_rank = fan.dim;
  d.fiber_fan = fan;
  for (int i = 0; i < fan.dim; ++i) {
    Weight w{{}, IntVector(static_cast<std::size_t>(fan.dim), 0)};
    w.torus[static_cast<std::size_t>(i)] = 1;
    d.embedding.push_back(std::move(w));
  }
  return d;
}

}  // namespace horoaut
