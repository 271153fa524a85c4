#pragma once

// Smooth complete toroidal horospherical varieties X = G x^P F, described by
// the group, the parabolic marking, the fan of the toric fiber F and the
// embedding of the fiber character lattice M_S into the weight lattice M_T.

#include "horoaut/fan.hpp"
#include "horoaut/root_system.hpp"

#include <string>
#include <vector>

namespace horoaut {

/// Raw input, with Dynkin nodes and weights in the input numbering.
struct HorosphericalDatum {
  RootSystemSpec group;
  std::vector<NodeRef> marking;
  Fan fiber_fan;
  std::vector<Weight> embedding;  // image of the i-th basis vector of M_S
};

class ValidatedDatum {
 public:
  const RootSystemTables& tables() const { return tables_; }
  const ParabolicMarking& marking() const { return marking_; }
  const ValidatedFan& fan() const { return fan_; }
  /// Embedding weights in internal (normalized) coordinates.
  const std::vector<Weight>& embedding() const { return embedding_; }

  Weight ambient(std::span<const Int> m_fiber) const;

 private:
  friend ValidatedDatum validate_datum(const HorosphericalDatum& datum);
  ValidatedDatum(RootSystemTables t, ParabolicMarking m, ValidatedFan f, std::vector<Weight> e)
      : tables_(std::move(t)), marking_(std::move(m)), fan_(std::move(f)), embedding_(std::move(e)) {}
  RootSystemTables tables_;
  ParabolicMarking marking_;
  ValidatedFan fan_;
  std::vector<Weight> embedding_;
};

/// Throws FanInvalid (wrapping the fan error), EmbeddingNotInjective,
/// EmbeddingNotCharacterOfP, DimensionMismatch, InvalidRank, InvalidMarking.
ValidatedDatum validate_datum(const HorosphericalDatum& datum);

enum class RootKind { semisimple, unipotent };
std::string_view root_kind_name(RootKind k);

struct BRoot {
  IntVector m_fiber;
  std::size_t ray_index = 0;
  Weight m_ambient;  // internal coordinates
  RootKind kind = RootKind::unipotent;
  Int v_dim = 1;
};

/// Fiber Demazure roots whose ambient weight is dominant, in the fiber
/// root order.
std::vector<BRoot> b_plus_roots(const ValidatedDatum& datum);

struct AutReport {
  Int dim_aut_gp = 0;
  bool g_surjects = true;
  Int dim_s = 0;
  std::vector<BRoot> roots;
  Int n_semisimple = 0;
  std::vector<Int> unipotent_dims;
  Int dim_aut_total = 0;
  Int dim_unipotent_radical = 0;
  Int dim_levi = 0;
  bool reductive = true;
  /// Roots whose root subgroups, together with G and Aut_G(X), generate a
  /// Levi subgroup. Only meaningful when levi_generated_by_g holds.
  std::vector<std::string> levi_generators;
  /// Roots whose subgroups and their G-conjugates generate the unipotent
  /// radical.
  std::vector<std::string> radical_generators;
  /// False when G -> Aut^0(G/P) is not onto: the Levi generation statement
  /// then needs Aut^0(X, boundary) instead of G.
  bool levi_generated_by_g = true;
};

AutReport aut_report(const ValidatedDatum& datum);

struct ExtendingRoot {
  IntVector m_fiber;
  bool g_normalized;
};

struct Extendability {
  std::vector<ExtendingRoot> extends;
  std::vector<IntVector> does_not_extend;
};

Extendability extendable_fiber_roots(const ValidatedDatum& datum);

std::string root_label(std::span<const Int> m_fiber);

/// Datum with no simple factors, torus rank n and the identity embedding.
HorosphericalDatum torus_only_datum(const Fan& fan);

}  // namespace horoaut
