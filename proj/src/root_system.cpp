#include "horoaut/root_system.hpp"

#include "horoaut/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace horoaut {

char type_letter(DynkinType t) { return "ABCDEFG"[static_cast<int>(t)]; }

DynkinType parse_type_letter(char c) {
  switch (c) {
    case 'A': return DynkinType::A;
    case 'B': return DynkinType::B;
    case 'C': return DynkinType::C;
    case 'D': return DynkinType::D;
    case 'E': return DynkinType::E;
    case 'F': return DynkinType::F;
    case 'G': return DynkinType::G;
    default: throw Error(ErrorKind::InvalidRank, std::string("unknown Dynkin type '") + c + "'");
  }
}

std::string factor_name(const SimpleFactor& f) { return type_letter(f.type) + std::to_string(f.rank); }

Weight operator+(const Weight& a, const Weight& b) {
  if (a.fw.size() != b.fw.size() || a.torus.size() != b.torus.size())
    throw Error(ErrorKind::DimensionMismatch, "adding weights of different shapes");
  Weight r = a;
  for (std::size_t i = 0; i < r.fw.size(); ++i) r.fw[i] = checked_add(r.fw[i], b.fw[i]);
  for (std::size_t i = 0; i < r.torus.size(); ++i) r.torus[i] = checked_add(r.torus[i], b.torus[i]);
  return r;
}

Weight operator*(Int k, const Weight& w) {
  Weight r = w;
  for (Int& x : r.fw) x = checked_mul(k, x);
  for (Int& x : r.torus) x = checked_mul(k, x);
  return r;
}

Weight operator-(const Weight& a, const Weight& b) { return a + (-1) * b; }

namespace {

void check_rank(const SimpleFactor& f) {
  const int l = f.rank;
  bool ok = false;
  switch (f.type) {
    case DynkinType::A: ok = l >= 1; break;
    case DynkinType::B: ok = l >= 2; break;
    case DynkinType::C: ok = l >= 2; break;
    case DynkinType::D: ok = l >= 4; break;
    case DynkinType::E: ok = l >= 6 && l <= 8; break;
    case DynkinType::F: ok = l == 4; break;
    case DynkinType::G: ok = l == 2; break;
  }
  if (!ok) throw Error(ErrorKind::InvalidRank, factor_name(f) + " is not a valid simple type");
}

void link(IntMatrix& c, std::size_t i, std::size_t j) {
  c[i][j] = -1;
  c[j][i] = -1;
}

// (alpha_i, alpha_i) with the short roots normalized to 1.
std::vector<Int> simple_squared_lengths(DynkinType type, int l) {
  std::vector<Int> d(l, 1);
  switch (type) {
    case DynkinType::B:
      std::fill(d.begin(), d.end() - 1, 2);
      break;
    case DynkinType::C:
      d[l - 1] = 2;
      break;
    case DynkinType::F:
      d = {2, 2, 1, 1};
      break;
    case DynkinType::G:
      d = {1, 3};
      break;
    default:
      break;
  }
  return d;
}

}  // namespace

IntMatrix cartan_matrix(DynkinType type, int l) {
  check_rank({type, l});
  IntMatrix c(l, IntVector(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  switch (type) {
    case DynkinType::A:
      for (int i = 0; i + 1 < l; ++i) link(c, i, i + 1);
      break;
    case DynkinType::B:
      for (int i = 0; i + 1 < l; ++i) link(c, i, i + 1);
      c[l - 2][l - 1] = -2;
      break;
    case DynkinType::C:
      for (int i = 0; i + 1 < l; ++i) link(c, i, i + 1);
      c[l - 1][l - 2] = -2;
      break;
    case DynkinType::D:
      for (int i = 0; i + 2 < l; ++i) link(c, i, i + 1);
      link(c, l - 3, l - 1);
      break;
    case DynkinType::E:
      link(c, 0, 2);
      link(c, 1, 3);
      for (int i = 2; i + 1 < l; ++i) link(c, i, i + 1);
      break;
    case DynkinType::F:
      link(c, 0, 1);
      link(c, 1, 2);
      link(c, 2, 3);
      c[1][2] = -2;
      break;
    case DynkinType::G:
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

std::vector<IntVector> enumerate_positive_roots(const IntMatrix& cartan) {
  const std::size_t l = cartan.size();
  std::vector<IntVector> roots;
  std::set<IntVector> known;
  std::vector<IntVector> layer;
  for (std::size_t i = 0; i < l; ++i) {
    IntVector e(l, 0);
    e[i] = 1;
    layer.push_back(e);
  }
  std::sort(layer.begin(), layer.end());
  while (!layer.empty()) {
    for (const auto& r : layer) {
      roots.push_back(r);
      known.insert(r);
    }
    std::set<IntVector> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < l; ++i) {
        Int pairing = 0;  // <beta, coroot_i>
        for (std::size_t j = 0; j < l; ++j) pairing += beta[j] * cartan[j][i];
        // p = length of the alpha_i-string below beta
        Int p = 0;
        IntVector down = beta;
        while (down[i] > 0) {
          --down[i];
          if (!known.contains(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          IntVector up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
  }
  return roots;
}

Int FactorTables::dimension() const {
  return 2 * static_cast<Int>(positive_roots.size()) + rank();
}

std::size_t FactorTables::degree(std::size_t node) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < cartan.size(); ++j)
    if (j != node && cartan[node][j] != 0) ++d;
  return d;
}

std::size_t FactorTables::internal_node(int input_node) const {
  if (input_node < 1 || input_node > input.rank) {
    throw Error(ErrorKind::InvalidMarking,
                "node " + std::to_string(input_node) + " does not exist in " + factor_name(input));
  }
  if (input.type == DynkinType::B && input.rank == 2) return input_node == 1 ? 1 : 0;
  return static_cast<std::size_t>(input_node - 1);
}

int FactorTables::input_node(std::size_t internal) const {
  if (input.type == DynkinType::B && input.rank == 2) return internal == 0 ? 2 : 1;
  return static_cast<int>(internal) + 1;
}

RootSystemTables build_root_system(const RootSystemSpec& spec) {
  if (spec.torus_rank < 0) throw Error(ErrorKind::InvalidRank, "negative torus rank");
  RootSystemTables t;
  t.spec_ = spec;
  t.torus_rank_ = spec.torus_rank;
  std::size_t offset = 0;
  for (const SimpleFactor& input : spec.simple_factors) {
    check_rank(input);
    FactorTables f;
    f.input = input;
    f.normalized = (input.type == DynkinType::B && input.rank == 2) ? SimpleFactor{DynkinType::C, 2} : input;
    f.offset = offset;
    const auto type = f.normalized.type;
    const int l = f.normalized.rank;
    f.cartan = cartan_matrix(type, l);
    f.positive_roots = enumerate_positive_roots(f.cartan);
    f.positive_coroots = enumerate_positive_roots(transpose(f.cartan));

    const std::vector<Int> d = simple_squared_lengths(type, l);
    const Int longest = *std::max_element(d.begin(), d.end());
    for (int i = 0; i < l; ++i) {
      f.simple_is_short.push_back(d[i] < longest);
      f.squared_length2.push_back(2 * d[i]);
    }
    for (const auto& beta : f.positive_roots) {
      // 2 (beta, beta) = sum_ij beta_i beta_j cartan[i][j] (alpha_j, alpha_j)
      Int len = 0;
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) len += beta[i] * beta[j] * f.cartan[i][j] * d[j];
      f.root_is_long.push_back(len == 2 * longest);
    }
    offset += static_cast<std::size_t>(l);
    t.factors_.push_back(std::move(f));
  }
  t.fw_count_ = offset;
  return t;
}

ParabolicMarking RootSystemTables::marking(std::span<const NodeRef> nodes) const {
  ParabolicMarking m;
  m.mask_.assign(fw_count_, false);
  for (const NodeRef& n : nodes) {
    if (n.factor >= factors_.size()) {
      throw Error(ErrorKind::InvalidMarking, "factor index " + std::to_string(n.factor) + " out of range");
    }
    const FactorTables& f = factors_[n.factor];
    const std::size_t g = f.offset + f.internal_node(n.node);
    if (m.mask_[g]) {
      throw Error(ErrorKind::InvalidMarking, "node [" + std::to_string(n.factor) + "," +
                                                 std::to_string(n.node) + "] marked twice");
    }
    m.mask_[g] = true;
    m.ordered_.push_back(g);
  }
  return m;
}

Weight RootSystemTables::weight(IntVector fw_input, IntVector torus) const {
  if (fw_input.size() != fw_count_ || torus.size() != static_cast<std::size_t>(torus_rank_)) {
    throw Error(ErrorKind::DimensionMismatch,
                "weight has " + std::to_string(fw_input.size()) + "+" + std::to_string(torus.size()) +
                    " coordinates, expected " + std::to_string(fw_count_) + "+" + std::to_string(torus_rank_));
  }
  Weight w{IntVector(fw_count_), std::move(torus)};
  for (const auto& f : factors_)
    for (int k = 1; k <= f.input.rank; ++k)
      w.fw[f.offset + f.internal_node(k)] = fw_input[f.offset + static_cast<std::size_t>(k - 1)];
  return w;
}

IntVector RootSystemTables::input_fw(const Weight& w) const {
  check(w);
  IntVector out(fw_count_);
  for (const auto& f : factors_)
    for (int k = 1; k <= f.input.rank; ++k)
      out[f.offset + static_cast<std::size_t>(k - 1)] = w.fw[f.offset + f.internal_node(k)];
  return out;
}

Weight RootSystemTables::zero_weight() const {
  return Weight{IntVector(fw_count_, 0), IntVector(static_cast<std::size_t>(torus_rank_), 0)};
}

Weight RootSystemTables::rho() const {
  return Weight{IntVector(fw_count_, 1), IntVector(static_cast<std::size_t>(torus_rank_), 0)};
}

std::size_t RootSystemTables::factor_of(std::size_t global_index) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (global_index >= f.offset && global_index < f.offset + static_cast<std::size_t>(f.rank())) return i;
  }
  throw Error(ErrorKind::DimensionMismatch, "coordinate " + std::to_string(global_index) + " out of range");
}

NodeRef RootSystemTables::node_of(std::size_t global_index) const {
  const std::size_t fi = factor_of(global_index);
  const auto& f = factors_[fi];
  return {fi, f.input_node(global_index - f.offset)};
}

void RootSystemTables::check(const Weight& w) const {
  if (w.fw.size() != fw_count_ || w.torus.size() != static_cast<std::size_t>(torus_rank_)) {
    throw Error(ErrorKind::DimensionMismatch, "weight shape does not match the root system");
  }
}

Int coroot_pairing(const RootSystemTables& tables, const Weight& w, CorootRef coroot) {
  tables.check(w);
  if (coroot.factor >= tables.factors().size())
    throw Error(ErrorKind::DimensionMismatch, "coroot factor out of range");
  const auto& f = tables.factors()[coroot.factor];
  if (coroot.index >= f.positive_coroots.size())
    throw Error(ErrorKind::DimensionMismatch, "coroot index out of range");
  const auto block = std::span<const Int>(w.fw).subspan(f.offset, static_cast<std::size_t>(f.rank()));
  return dot(block, f.positive_coroots[coroot.index]);
}

DominanceCheck is_dominant(const Weight& w, const ParabolicMarking& marking) {
  if (w.fw.size() != marking.coordinate_count())
    throw Error(ErrorKind::DimensionMismatch, "weight and marking have different ranks");
  DominanceCheck c{true, true, true};
  for (std::size_t i = 0; i < w.fw.size(); ++i) {
    if (marking.is_marked(i)) {
      c.dominant_on_marked = c.dominant_on_marked && w.fw[i] >= 0;
      c.strictly_dominant_on_marked = c.strictly_dominant_on_marked && w.fw[i] > 0;
    } else {
      c.zero_on_unmarked = c.zero_on_unmarked && w.fw[i] == 0;
    }
  }
  return c;
}

Int weyl_dim(const RootSystemTables& tables, const Weight& w) {
  tables.check(w);
  for (std::size_t i = 0; i < w.fw.size(); ++i) {
    if (w.fw[i] < 0) {
      throw Error(ErrorKind::NotDominant,
                  "weight " + format_vector(w.fw) + " is negative at coordinate " + std::to_string(i));
    }
  }
  BigInt numerator = 1, denominator = 1;
  for (const auto& f : tables.factors()) {
    for (const auto& c : f.positive_coroots) {
      BigInt shifted = 0, height = 0;
      for (std::size_t i = 0; i < c.size(); ++i) {
        shifted += BigInt(c[i]) * (BigInt(w.fw[f.offset + i]) + 1);
        height += c[i];
      }
      numerator *= shifted;
      denominator *= height;
    }
  }
  if (numerator % denominator != 0)
    throw Error(ErrorKind::Overflow, "Weyl dimension is not integral (corrupt tables)");
  return to_int(numerator / denominator);
}

namespace {

// Dimension of Aut^0(L/Q) for a simple factor with the given (non-empty)
// marked internal nodes; the bool is whether L itself surjects onto it.
HomogeneousAut factor_aut(const FactorTables& f, const std::vector<std::size_t>& marked) {
  const Int l = f.rank();
  if (marked.size() == 1) {
    const std::size_t node = marked.front();
    const bool is_short = f.simple_is_short[node];
    const auto short_count = std::count(f.simple_is_short.begin(), f.simple_is_short.end(), true);
    switch (f.normalized.type) {
      case DynkinType::B:
        // unique short simple root, l >= 3: Aut^0 is adjoint D_{l+1}
        if (l >= 3 && is_short && short_count == 1) return {(l + 1) * (2 * l + 1), false};
        break;
      case DynkinType::C:
        // short simple root at an end of the diagram: Aut^0 is adjoint A_{2l-1}
        if (is_short && f.degree(node) == 1) return {4 * l * l - 1, false};
        break;
      case DynkinType::G:
        // short simple root: Aut^0 is adjoint B_3
        if (is_short) return {21, false};
        break;
      default:
        break;
    }
  }
  return {f.dimension(), true};
}

}  // namespace

HomogeneousAut aut_dim_homogeneous(const RootSystemTables& tables, const ParabolicMarking& marking) {
  if (marking.coordinate_count() != tables.fw_count())
    throw Error(ErrorKind::DimensionMismatch, "marking does not belong to this root system");
  HomogeneousAut total{0, true};
  for (const auto& f : tables.factors()) {
    std::vector<std::size_t> marked;
    for (int i = 0; i < f.rank(); ++i)
      if (marking.is_marked(f.offset + static_cast<std::size_t>(i))) marked.push_back(static_cast<std::size_t>(i));
    if (marked.empty()) continue;
    const HomogeneousAut part = factor_aut(f, marked);
    total.dim = checked_add(total.dim, part.dim);
    total.g_surjects = total.g_surjects && part.g_surjects;
  }
  return total;
}

Weight anticanonical_character(const RootSystemTables& tables, const ParabolicMarking& marking) {
  if (marking.coordinate_count() != tables.fw_count())
    throw Error(ErrorKind::DimensionMismatch, "marking does not belong to this root system");
  Weight w = tables.zero_weight();
  for (const auto& f : tables.factors()) {
    const std::size_t l = static_cast<std::size_t>(f.rank());
    IntVector sum(l, 0);  // simple-root coordinates
    for (const auto& beta : f.positive_roots) {
      bool outside_levi = false;
      for (std::size_t i = 0; i < l; ++i)
        if (beta[i] > 0 && marking.is_marked(f.offset + i)) outside_levi = true;
      if (!outside_levi) continue;
      for (std::size_t i = 0; i < l; ++i) sum[i] = checked_add(sum[i], beta[i]);
    }
    for (std::size_t j = 0; j < l; ++j) {
      Int coeff = 0;
      for (std::size_t i = 0; i < l; ++i) coeff = checked_add(coeff, checked_mul(sum[i], f.cartan[i][j]));
      w.fw[f.offset + j] = coeff;
    }
  }
  return w;
}

std::string_view positivity_name(Positivity p) {
  switch (p) {
    case Positivity::ample: return "ample";
    case Positivity::nef_not_ample: return "nef_not_ample";
    case Positivity::not_nef: return "not_nef";
  }
  return "?";
}

Positivity line_bundle_positivity(const Weight& w, const ParabolicMarking& marking) {
  const DominanceCheck c = is_dominant(w, marking);
  if (!c.zero_on_unmarked) {
    throw Error(ErrorKind::NotACharacterOfP,
                "weight " + format_vector(w.fw) + " has a nonzero coefficient on an unmarked node");
  }
  if (c.strictly_dominant_on_marked) return Positivity::ample;
  if (c.dominant_on_marked) return Positivity::nef_not_ample;
  return Positivity::not_nef;
}

}  // namespace horoaut
