#pragma once

// Root data of connected reductive groups: simple Dynkin factors with
// Bourbaki numbering plus a central torus.
//
// Conventions:
//   * cartan[i][j] = <alpha_i, coroot_j>, so row i is alpha_i written over
//     the fundamental weights.
//   * B_l: alpha_l short.  C_l: alpha_1..alpha_{l-1} short.  F_4: alpha_3,
//     alpha_4 short.  G_2: alpha_1 short.
//   * B_2 is stored as C_2 with nodes 1 and 2 exchanged. Input node indices
//     and weights are translated on the way in (see RootSystemTables::
//     internal_node and RootSystemTables::weight).

#include "horoaut/arith.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace horoaut {

enum class DynkinType { A, B, C, D, E, F, G };

char type_letter(DynkinType t);
DynkinType parse_type_letter(char c);

struct SimpleFactor {
  DynkinType type;
  int rank;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

std::string factor_name(const SimpleFactor& f);

struct RootSystemSpec {
  std::vector<SimpleFactor> simple_factors;
  int torus_rank = 0;
};

/// A character of the maximal torus: coefficients over the fundamental
/// weights of the semisimple part (factor-blocked) and over the central
/// torus.
struct Weight {
  IntVector fw;
  IntVector torus;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(Int k, const Weight& w);

/// A Dynkin node as given by the user: factor index (0-based) and Bourbaki
/// node number (1-based) of the factor as written in the input.
struct NodeRef {
  std::size_t factor;
  int node;
  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

struct FactorTables {
  SimpleFactor input;       // as requested
  SimpleFactor normalized;  // B_2 becomes C_2
  std::size_t offset = 0;   // first fundamental-weight coordinate
  IntMatrix cartan;
  std::vector<IntVector> positive_roots;    // simple-root coordinates
  std::vector<IntVector> positive_coroots;  // simple-coroot coordinates
  std::vector<bool> simple_is_short;
  std::vector<bool> root_is_long;           // parallel to positive_roots
  std::vector<Int> squared_length2;         // 2*(alpha_i, alpha_i), per simple root

  int rank() const { return normalized.rank; }
  Int dimension() const;
  /// Nodes adjacent to `node` (0-based) in the Dynkin diagram.
  std::size_t degree(std::size_t node) const;
  /// Input node (1-based) to internal 0-based node.
  std::size_t internal_node(int input_node) const;
  int input_node(std::size_t internal) const;
};

/// Marked simple roots, stored as global fundamental-weight indices
/// together with the order in which they were supplied.
class ParabolicMarking {
 public:
  const std::vector<std::size_t>& ordered() const { return ordered_; }
  bool is_marked(std::size_t global_index) const { return mask_.at(global_index); }
  std::size_t size() const { return ordered_.size(); }
  bool empty() const { return ordered_.empty(); }
  std::size_t coordinate_count() const { return mask_.size(); }

 private:
  friend class RootSystemTables;
  std::vector<std::size_t> ordered_;
  std::vector<bool> mask_;
};

struct CorootRef {
  std::size_t factor;
  std::size_t index;  // into FactorTables::positive_coroots
};

class RootSystemTables {
 public:
  const std::vector<FactorTables>& factors() const { return factors_; }
  int torus_rank() const { return torus_rank_; }
  std::size_t fw_count() const { return fw_count_; }
  const RootSystemSpec& spec() const { return spec_; }

  /// Validates and normalizes user nodes. Throws InvalidMarking.
  ParabolicMarking marking(std::span<const NodeRef> nodes) const;
  /// Weight from input-numbered fundamental coordinates. Throws
  /// DimensionMismatch.
  Weight weight(IntVector fw_input, IntVector torus) const;
  /// Inverse of weight(): fundamental coordinates in input numbering.
  IntVector input_fw(const Weight& w) const;
  Weight zero_weight() const;
  Weight rho() const;
  NodeRef node_of(std::size_t global_index) const;
  std::size_t factor_of(std::size_t global_index) const;

  void check(const Weight& w) const;

 private:
  friend RootSystemTables build_root_system(const RootSystemSpec& spec);
  RootSystemSpec spec_;
  std::vector<FactorTables> factors_;
  int torus_rank_ = 0;
  std::size_t fw_count_ = 0;
};

/// Throws InvalidRank.
RootSystemTables build_root_system(const RootSystemSpec& spec);

/// Positive roots of an indecomposable Cartan matrix (row i = alpha_i over
/// fundamental weights), by height induction with root strings.
std::vector<IntVector> enumerate_positive_roots(const IntMatrix& cartan);
IntMatrix cartan_matrix(DynkinType type, int rank);

Int coroot_pairing(const RootSystemTables& tables, const Weight& w, CorootRef coroot);

struct DominanceCheck {
  bool dominant_on_marked;
  bool zero_on_unmarked;
  bool strictly_dominant_on_marked;
  friend bool operator==(const DominanceCheck&, const DominanceCheck&) = default;
};
DominanceCheck is_dominant(const Weight& w, const ParabolicMarking& marking);

/// Weyl dimension formula. Throws NotDominant, Overflow.
Int weyl_dim(const RootSystemTables& tables, const Weight& w);

struct HomogeneousAut {
  Int dim;
  bool g_surjects;
  friend bool operator==(const HomogeneousAut&, const HomogeneousAut&) = default;
};
HomogeneousAut aut_dim_homogeneous(const RootSystemTables& tables, const ParabolicMarking& marking);

/// Sum of the positive roots not in the Levi of P, over fundamental weights.
Weight anticanonical_character(const RootSystemTables& tables, const ParabolicMarking& marking);

enum class Positivity { ample, nef_not_ample, not_nef };
std::string_view positivity_name(Positivity p);
/// Throws NotACharacterOfP.
Positivity line_bundle_positivity(const Weight& w, const ParabolicMarking& marking);

}  // namespace horoaut
