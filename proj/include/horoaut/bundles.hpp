#pragma once

// Projectivizations X = P(L_1 + ... + L_k) of split vector bundles over a
// rational homogeneous space Y = G/P. A point of X over y is a line
// [l_1 : ... : l_k] with l_i in the fiber of L_i at y.

#include "horoaut/horospherical.hpp"
#include "horoaut/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace horoaut {

struct BundleSpec {
  std::vector<SimpleFactor> base;
  std::vector<NodeRef> marking;
  /// Coefficients of each L_i over the marked fundamental weights, in
  /// marking order.
  std::vector<IntVector> line_bundles;
};

class ValidatedBundle {
 public:
  const BundleSpec& spec() const { return spec_; }
  const RootSystemTables& tables() const { return tables_; }
  const ParabolicMarking& marking() const { return marking_; }
  /// L_i as characters of P (internal coordinates, no torus part).
  const std::vector<Weight>& characters() const { return characters_; }
  std::size_t k() const { return characters_.size(); }

 private:
  friend ValidatedBundle validate_bundle(const BundleSpec& spec);
  ValidatedBundle(BundleSpec s, RootSystemTables t, ParabolicMarking m, std::vector<Weight> c)
      : spec_(std::move(s)), tables_(std::move(t)), marking_(std::move(m)), characters_(std::move(c)) {}
  BundleSpec spec_;
  RootSystemTables tables_;
  ParabolicMarking marking_;
  std::vector<Weight> characters_;
};

/// Throws InvalidBundle, InvalidRank, InvalidMarking.
ValidatedBundle validate_bundle(const BundleSpec& spec);

struct PairRoot {
  std::size_t i;
  std::size_t j;
  bool nef;                  // L_i - L_j nef
  bool iso;                  // L_i == L_j
  std::optional<Int> v_dim;  // dim V(chi_i - chi_j), present when nef
  friend bool operator==(const PairRoot&, const PairRoot&) = default;
};

struct BundleRoots {
  std::vector<PairRoot> pair_roots;  // all ordered pairs i != j, row-major
  bool reductive = true;
  Int dim_aut_base = 0;
  bool g_surjects = true;
  Int dim_aut_total = 0;
};

BundleRoots bundle_roots(const ValidatedBundle& bundle);

enum class FanoStatus { certified_fano, certified_not_fano, unknown };
enum class KUnstability { certified, not_applicable, unknown };
std::string_view fano_status_name(FanoStatus s);
std::string_view k_unstability_name(KUnstability s);

FanoStatus fano_certificate(const ValidatedBundle& bundle);
KUnstability k_unstability_certificate(const ValidatedBundle& bundle);

/// Y of Picard rank one, k = 2: reductive iff L_1 == L_2.
/// Throws PreconditionViolated.
bool picard_rank_one_rule(const ValidatedBundle& bundle);

/// Largest r with K_Y^dual = r * (something) in Pic(Y) = Z^marked.
Int base_fano_index(const ValidatedBundle& bundle);

struct BundleReport {
  BundleRoots roots;
  FanoStatus fano = FanoStatus::unknown;
  KUnstability k_unstable = KUnstability::unknown;
  IntVector base_anticanonical;  // over marked nodes, marking order
  Int base_fano_index = 0;
};

BundleReport bundle_report(const ValidatedBundle& bundle);

/// The same variety as a horospherical datum for G x (C^*)^k with fiber
/// P^{k-1}; e_i maps to chi_{i+1} - chi_1.
HorosphericalDatum to_horospherical_datum(const BundleSpec& spec);

struct PipelineComparison {
  bool agree = true;
  std::vector<std::string> differences;
};

/// Runs the general horospherical pipeline on to_horospherical_datum and
/// compares roots, kinds, dimensions and reductivity.
PipelineComparison check_against_pipeline(const ValidatedBundle& bundle);

}  // namespace horoaut
