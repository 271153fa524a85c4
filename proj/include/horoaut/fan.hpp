#pragma once

#include "horoaut/arith.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace horoaut {

/// Raw fan data: primitive ray generators in Z^dim and maximal cones as
/// 0-based ray index lists.
struct Fan {
  int dim = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> maximal_cones;
};

/// A fan that passed validate_fan: smooth, complete, with a proper face
/// structure. Cones are stored with sorted ray indices.
class ValidatedFan {
 public:
  const Fan& fan() const { return fan_; }
  int dim() const { return fan_.dim; }
  const std::vector<IntVector>& rays() const { return fan_.rays; }
  const std::vector<std::vector<std::size_t>>& cones() const { return fan_.maximal_cones; }

 private:
  friend ValidatedFan validate_fan(Fan fan);
  explicit ValidatedFan(Fan fan) : fan_(std::move(fan)) {}
  Fan fan_;
};

/// Throws NotPrimitiveRay, NotSmooth, NotComplete, BadFaceStructure,
/// DimensionMismatch.
ValidatedFan validate_fan(Fan fan);

struct DemazureRoot {
  IntVector m;
  std::size_t ray_index;
  friend bool operator==(const DemazureRoot&, const DemazureRoot&) = default;
  friend auto operator<=>(const DemazureRoot&, const DemazureRoot&) = default;
};

/// All Demazure roots, sorted lexicographically by m.
std::vector<DemazureRoot> demazure_roots(const ValidatedFan& fan);

/// Literal scan of the box |m|_inf <= radius.
std::vector<DemazureRoot> demazure_roots_bruteforce(const ValidatedFan& fan, Int radius);

/// Smallest box radius that contains every per-ray root polytope.
Int oracle_safe_radius(const ValidatedFan& fan);

struct RootPartition {
  std::vector<DemazureRoot> semisimple;
  std::vector<DemazureRoot> unipotent;
};

/// semisimple = roots whose negation is also in the list.
RootPartition classify_roots(std::span<const DemazureRoot> roots);

struct ToricAutReport {
  Int dim_aut = 0;
  std::size_t n_semisimple = 0;
  std::size_t n_unipotent = 0;
  bool reductive = true;
  std::vector<DemazureRoot> roots;
  RootPartition partition;
};

ToricAutReport toric_aut_report(const ValidatedFan& fan);

/// Standard fan of P^n: rays e_1..e_n and -(e_1+...+e_n).
Fan projective_space_fan(int n);
/// Hirzebruch surface F_a: rays (1,0), (0,1), (-1,a), (0,-1).
Fan hirzebruch_fan(Int a);
Fan product_fan(const Fan& a, const Fan& b);
/// Rays transformed by the unimodular matrix u (acting on N).
Fan transform_fan(const Fan& fan, const IntMatrix& u);

}  // namespace horoaut
