#include "horoaut/bundles.hpp"

#include "horoaut/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace horoaut {

std::string_view fano_status_name(FanoStatus s) {
  switch (s) {
    case FanoStatus::certified_fano: return "certified_fano";
    case FanoStatus::certified_not_fano: return "certified_not_fano";
    case FanoStatus::unknown: return "unknown";
  }
  return "?";
}

std::string_view k_unstability_name(KUnstability s) {
  switch (s) {
    case KUnstability::certified: return "certified";
    case KUnstability::not_applicable: return "not_applicable";
    case KUnstability::unknown: return "unknown";
  }
  return "?";
}

ValidatedBundle validate_bundle(const BundleSpec& spec) {
  RootSystemTables tables = build_root_system(RootSystemSpec{spec.base, 0});
  ParabolicMarking marking = tables.marking(spec.marking);
  for (std::size_t f = 0; f < tables.factors().size(); ++f) {
    const auto& ft = tables.factors()[f];
    bool any = false;
    for (int i = 0; i < ft.rank(); ++i) any = any || marking.is_marked(ft.offset + static_cast<std::size_t>(i));
    if (!any) {
      throw Error(ErrorKind::InvalidBundle,
                  "factor " + std::to_string(f) + " (" + factor_name(ft.input) + ") has no marked node");
    }
  }
  if (spec.line_bundles.size() < 2) {
    throw Error(ErrorKind::InvalidBundle, "need at least two line bundles, got " + std::to_string(spec.line_bundles.size()));
  }
  std::vector<Weight> chars;
  for (std::size_t i = 0; i < spec.line_bundles.size(); ++i) {
    const IntVector& l = spec.line_bundles[i];
    if (l.size() != marking.size()) {
      throw Error(ErrorKind::InvalidBundle, "line bundle " + std::to_string(i) + " has " + std::to_string(l.size()) +
                                                " coefficients but " + std::to_string(marking.size()) +
                                                " nodes are marked");
    }
    Weight w = tables.zero_weight();
    for (std::size_t m = 0; m < l.size(); ++m) w.fw[marking.ordered()[m]] = l[m];
    chars.push_back(std::move(w));
  }
  return ValidatedBundle(spec, std::move(tables), std::move(marking), std::move(chars));
}

BundleRoots bundle_roots(const ValidatedBundle& bundle) {
  BundleRoots out;
  const HomogeneousAut base = aut_dim_homogeneous(bundle.tables(), bundle.marking());
  out.dim_aut_base = base.dim;
  out.g_surjects = base.g_surjects;
  const auto& chars = bundle.characters();
  const std::size_t k = chars.size();
  Int iso_pairs = 0, unipotent_dim = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const Weight diff = chars[i] - chars[j];
      PairRoot p{i, j, false, chars[i] == chars[j], std::nullopt};
      p.nef = line_bundle_positivity(diff, bundle.marking()) != Positivity::not_nef;
      if (p.nef) {
        p.v_dim = weyl_dim(bundle.tables(), diff);
        if (p.iso) {
          ++iso_pairs;
        } else {
          unipotent_dim = checked_add(unipotent_dim, *p.v_dim);
          out.reductive = false;
        }
      }
      out.pair_roots.push_back(p);
    }
  }
  out.dim_aut_total = checked_add(checked_add(out.dim_aut_base, static_cast<Int>(k) - 1),
                                  checked_add(iso_pairs, unipotent_dim));
  return out;
}

namespace {

bool is_product_of_lines(const ValidatedBundle& bundle) {
  for (const auto& f : bundle.tables().factors())
    if (f.normalized != SimpleFactor{DynkinType::A, 1}) return false;
  return true;
}

bool ample_on_marked(const Weight& w, const ParabolicMarking& marking) {
  for (std::size_t g : marking.ordered())
    if (w.fw[g] <= 0) return false;
  return true;
}

}  // namespace

FanoStatus fano_certificate(const ValidatedBundle& bundle) {
  const auto& chars = bundle.characters();
  const auto& marking = bundle.marking();

  if (is_product_of_lines(bundle) && chars.size() == 2) {
    const Weight a = chars[1] - chars[0];
    const bool small = std::all_of(a.fw.begin(), a.fw.end(), [](Int x) { return x >= -1 && x <= 1; });
    return small ? FanoStatus::certified_fano : FanoStatus::certified_not_fano;
  }

  // P(L_1 + ... + L_k) = P(N_1^dual + ... + N_k^dual) with N_i = L_j - L_i.
  // It is Fano when every N_i is nef and K_Y^dual - sum N_i is ample.
  const Weight anticanonical = anticanonical_character(bundle.tables(), marking);
  for (std::size_t j = 0; j < chars.size(); ++j) {
    Weight sum = bundle.tables().zero_weight();
    bool all_nef = true;
    for (const Weight& l : chars) {
      const Weight n = chars[j] - l;
      if (!is_dominant(n, marking).dominant_on_marked) {
        all_nef = false;
        break;
      }
      sum = sum + n;
    }
    if (all_nef && ample_on_marked(anticanonical - sum, marking)) return FanoStatus::certified_fano;
  }
  return FanoStatus::unknown;
}

KUnstability k_unstability_certificate(const ValidatedBundle& bundle) {
  if (bundle_roots(bundle).reductive) return KUnstability::not_applicable;
  return fano_certificate(bundle) == FanoStatus::certified_fano ? KUnstability::certified : KUnstability::unknown;
}

bool picard_rank_one_rule(const ValidatedBundle& bundle) {
  if (bundle.marking().size() != 1 || bundle.k() != 2) {
    throw Error(ErrorKind::PreconditionViolated,
                "needs exactly one marked node and k = 2 (got " + std::to_string(bundle.marking().size()) +
                    " marked nodes, k = " + std::to_string(bundle.k()) + ")");
  }
  return bundle.characters()[0] == bundle.characters()[1];
}

Int base_fano_index(const ValidatedBundle& bundle) {
  const Weight anticanonical = anticanonical_character(bundle.tables(), bundle.marking());
  Int g = 0;
  for (std::size_t idx : bundle.marking().ordered()) g = std::gcd(g, anticanonical.fw[idx]);
  return g;
}

BundleReport bundle_report(const ValidatedBundle& bundle) {
  BundleReport rep;
  rep.roots = bundle_roots(bundle);
  rep.fano = fano_certificate(bundle);
  if (rep.roots.reductive) {
    rep.k_unstable = KUnstability::not_applicable;
  } else {
    rep.k_unstable = rep.fano == FanoStatus::certified_fano ? KUnstability::certified : KUnstability::unknown;
  }
  const Weight anticanonical = anticanonical_character(bundle.tables(), bundle.marking());
  for (std::size_t idx : bundle.marking().ordered()) rep.base_anticanonical.push_back(anticanonical.fw[idx]);
  rep.base_fano_index = base_fano_index(bundle);
  return rep;
}

HorosphericalDatum to_horospherical_datum(const BundleSpec& spec) {
  const std::size_t k = spec.line_bundles.size();
  if (k < 2) throw Error(ErrorKind::InvalidBundle, "need at least two line bundles");
  HorosphericalDatum d;
  d.group.simple_factors = spec.base;
  d.group.torus_rank = static_cast<int>(k);
  d.marking = spec.marking;
  d.fiber_fan = projective_space_fan(static_cast<int>(k) - 1);

  std::vector<std::size_t> offsets;
  std::size_t fw_count = 0;
  for (const auto& f : spec.base) {
    offsets.push_back(fw_count);
    fw_count += static_cast<std::size_t>(f.rank);
  }
  for (std::size_t i = 1; i < k; ++i) {
    Weight w{IntVector(fw_count, 0), IntVector(k, 0)};
    for (std::size_t m = 0; m < spec.marking.size(); ++m) {
      const NodeRef& node = spec.marking[m];
      if (node.factor >= offsets.size() || node.node < 1 || node.node > spec.base[node.factor].rank) {
        throw Error(ErrorKind::InvalidMarking, "marked node out of range");
      }
      const std::size_t pos = offsets[node.factor] + static_cast<std::size_t>(node.node - 1);
      if (spec.line_bundles[i].size() != spec.marking.size() || spec.line_bundles[0].size() != spec.marking.size()) {
        throw Error(ErrorKind::InvalidBundle, "line bundle length differs from the marking size");
      }
      w.fw[pos] = checked_sub(spec.line_bundles[i][m], spec.line_bundles[0][m]);
    }
    w.torus[i] = 1;
    w.torus[0] = -1;
    d.embedding.push_back(std::move(w));
  }
  return d;
}

PipelineComparison check_against_pipeline(const ValidatedBundle& bundle) {
  PipelineComparison cmp;
  auto differ = [&](std::string msg) {
    cmp.agree = false;
    cmp.differences.push_back(std::move(msg));
  };
  const BundleRoots direct = bundle_roots(bundle);
  const ValidatedDatum datum = validate_datum(to_horospherical_datum(bundle.spec()));
  const AutReport general = aut_report(datum);

  // (i, j) -> (semisimple, v_dim) from the general pipeline, read off the
  // torus part e_i - e_j of each ambient weight.
  std::map<std::pair<std::size_t, std::size_t>, std::pair<bool, Int>> from_pipeline;
  for (const BRoot& b : general.roots) {
    std::optional<std::size_t> plus, minus;
    for (std::size_t t = 0; t < b.m_ambient.torus.size(); ++t) {
      if (b.m_ambient.torus[t] == 1 && !plus) plus = t;
      else if (b.m_ambient.torus[t] == -1 && !minus) minus = t;
      else if (b.m_ambient.torus[t] != 0) plus.reset(), minus.reset();
    }
    if (!plus || !minus) {
      differ("pipeline root " + root_label(b.m_fiber) + " is not of the form chi_i - chi_j");
      continue;
    }
    from_pipeline[{*plus, *minus}] = {b.kind == RootKind::semisimple, b.v_dim};
  }
  std::size_t nef_pairs = 0;
  for (const PairRoot& p : direct.pair_roots) {
    if (!p.nef) {
      if (from_pipeline.contains({p.i, p.j}))
        differ("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") is a root only in the pipeline");
      continue;
    }
    ++nef_pairs;
    auto it = from_pipeline.find({p.i, p.j});
    if (it == from_pipeline.end()) {
      differ("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") is missing from the pipeline");
      continue;
    }
    if (it->second.first != p.iso)
      differ("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") has a different kind");
    if (it->second.second != p.v_dim.value_or(0))
      differ("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") has a different dim V(m)");
  }
  if (nef_pairs != general.roots.size()) differ("root counts differ");
  if (direct.reductive != general.reductive) differ("reductivity differs");
  if (direct.dim_aut_total != general.dim_aut_total) {
    differ("dim Aut differs: " + std::to_string(direct.dim_aut_total) + " vs " + std::to_string(general.dim_aut_total));
  }
  return cmp;
}

}  // namespace horoaut
