#include "horoaut/fan.hpp"

#include "horoaut/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

namespace horoaut {

namespace {

std::string cone_label(const std::vector<std::size_t>& cone) {
  std::string s = "{";
  for (std::size_t i = 0; i < cone.size(); ++i) s += (i ? "," : "") + std::to_string(cone[i]);
  return s + "}";
}

// Columns are the cone's rays.
IntMatrix cone_matrix(const Fan& fan, const std::vector<std::size_t>& cone) {
  const std::size_t n = static_cast<std::size_t>(fan.dim);
  IntMatrix m(n, IntVector(cone.size()));
  for (std::size_t j = 0; j < cone.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m[i][j] = fan.rays[cone[j]][i];
  return m;
}

void check_rays(const Fan& fan) {
  std::set<IntVector> seen;
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    const IntVector& ray = fan.rays[r];
    if (ray.size() != static_cast<std::size_t>(fan.dim)) {
      throw Error(ErrorKind::DimensionMismatch,
                  "ray " + std::to_string(r) + " has " + std::to_string(ray.size()) + " entries in a fan of dimension " +
                      std::to_string(fan.dim));
    }
    if (gcd_of(ray) != 1) {
      throw Error(ErrorKind::NotPrimitiveRay, "ray " + std::to_string(r) + " = " + format_vector(ray) +
                                                  " is zero or not primitive");
    }
    if (!seen.insert(ray).second) {
      throw Error(ErrorKind::BadFaceStructure, "ray " + format_vector(ray) + " is listed twice");
    }
  }
}

void check_cone_shapes(Fan& fan) {
  const std::size_t n = static_cast<std::size_t>(fan.dim);
  std::set<std::vector<std::size_t>> seen;
  std::vector<bool> used(fan.rays.size(), false);
  for (auto& cone : fan.maximal_cones) {
    for (std::size_t idx : cone) {
      if (idx >= fan.rays.size()) {
        throw Error(ErrorKind::BadFaceStructure, "cone " + cone_label(cone) + " references a missing ray");
      }
      used[idx] = true;
    }
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) {
      throw Error(ErrorKind::BadFaceStructure, "cone " + cone_label(cone) + " repeats a ray");
    }
    if (!seen.insert(cone).second) {
      throw Error(ErrorKind::BadFaceStructure, "cone " + cone_label(cone) + " is listed twice");
    }
    if (cone.size() > n) {
      throw Error(ErrorKind::NotSmooth, "cone " + cone_label(cone) + " has more than " + std::to_string(n) +
                                            " rays and is not simplicial");
    }
    if (rank(transpose(cone_matrix(fan, cone))) != cone.size()) {
      throw Error(ErrorKind::BadFaceStructure, "rays of cone " + cone_label(cone) + " are linearly dependent");
    }
    if (cone.size() == n) {
      const BigInt det = determinant(cone_matrix(fan, cone));
      if (det != 1 && det != -1) {
        throw Error(ErrorKind::NotSmooth, "cone " + cone_label(cone) + " has determinant " + det.str());
      }
    }
  }
  for (const auto& cone : fan.maximal_cones) {
    if (cone.size() < n) {
      throw Error(ErrorKind::NotComplete, "maximal cone " + cone_label(cone) + " is not full-dimensional");
    }
  }
  for (std::size_t r = 0; r < used.size(); ++r) {
    if (!used[r]) throw Error(ErrorKind::BadFaceStructure, "ray " + std::to_string(r) + " lies in no cone");
  }
}

// Every facet must be shared by exactly two maximal cones lying on opposite
// sides of it.
void check_facet_pairing(const Fan& fan, const std::vector<IntMatrix>& duals) {
  struct Side {
    std::size_t cone;
    std::size_t position;  // index of the dropped ray inside the cone
  };
  std::map<std::vector<std::size_t>, std::vector<Side>> facets;
  for (std::size_t c = 0; c < fan.maximal_cones.size(); ++c) {
    const auto& cone = fan.maximal_cones[c];
    for (std::size_t i = 0; i < cone.size(); ++i) {
      std::vector<std::size_t> facet;
      for (std::size_t j = 0; j < cone.size(); ++j)
        if (j != i) facet.push_back(cone[j]);
      facets[facet].push_back({c, i});
    }
  }
  for (const auto& [facet, sides] : facets) {
    if (sides.size() == 1) {
      throw Error(ErrorKind::NotComplete, "facet " + cone_label(facet) + " of cone " +
                                              cone_label(fan.maximal_cones[sides[0].cone]) +
                                              " is not shared by another maximal cone");
    }
    if (sides.size() > 2) {
      throw Error(ErrorKind::BadFaceStructure, "facet " + cone_label(facet) + " is shared by " +
                                                   std::to_string(sides.size()) + " maximal cones");
    }
    const Side& a = sides[0];
    const Side& b = sides[1];
    const std::size_t other_ray = fan.maximal_cones[b.cone][b.position];
    if (dot(duals[a.cone][a.position], fan.rays[other_ray]) >= 0) {
      throw Error(ErrorKind::BadFaceStructure, "cones " + cone_label(fan.maximal_cones[a.cone]) + " and " +
                                                   cone_label(fan.maximal_cones[b.cone]) +
                                                   " lie on the same side of their common facet");
    }
  }
}

// With consistent facet pairing the cones cover R^n some whole number of
// times; a generic interior point of one cone must lie in no other cone.
void check_single_covering(const Fan& fan, const std::vector<IntMatrix>& duals) {
  const std::size_t n = static_cast<std::size_t>(fan.dim);
  const auto& base = fan.maximal_cones.front();
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Int> weight(1, 997);
  for (int attempt = 0; attempt < 64; ++attempt) {
    IntVector p(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const Int c = weight(rng);
      for (std::size_t i = 0; i < n; ++i) p[i] = checked_add(p[i], checked_mul(c, fan.rays[base[j]][i]));
    }
    std::size_t covering = 0;
    bool generic = true;
    for (std::size_t c = 0; c < fan.maximal_cones.size() && generic; ++c) {
      bool inside = true, on_boundary = false;
      for (const IntVector& functional : duals[c]) {
        const Int v = dot(functional, p);
        if (v < 0) inside = false;
        if (v == 0) on_boundary = true;
      }
      if (inside && on_boundary) generic = false;
      if (inside && !on_boundary) ++covering;
    }
    if (!generic) continue;
    if (covering != 1) {
      throw Error(ErrorKind::BadFaceStructure,
                  "maximal cones overlap: a generic point is covered " + std::to_string(covering) + " times");
    }
    return;
  }
  throw Error(ErrorKind::BadFaceStructure, "could not find a generic point to test the covering");
}

void for_each_subset(std::size_t pool, std::size_t size, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (size > pool) return;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == pool - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Vertices of {<m, ray_k> = -1, <m, ray_j> >= 0 for j != k}.
std::vector<std::vector<Rational>> root_polytope_vertices(const ValidatedFan& fan, std::size_t k) {
  const auto& rays = fan.rays();
  const std::size_t n = static_cast<std::size_t>(fan.dim());
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < rays.size(); ++j)
    if (j != k) others.push_back(j);
  std::vector<std::vector<Rational>> vertices;
  IntVector rhs(n, 0);
  rhs[0] = -1;
  for_each_subset(others.size(), n - 1, [&](const std::vector<std::size_t>& pick) {
    IntMatrix a{rays[k]};
    for (std::size_t p : pick) a.push_back(rays[others[p]]);
    auto x = solve(a, rhs);
    if (!x) return;
    for (std::size_t j : others) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) s += (*x)[i] * rays[j][i];
      if (s < 0) return;
    }
    vertices.push_back(std::move(*x));
  });
  return vertices;
}

bool satisfies_root_inequalities(const std::vector<IntVector>& rays, const IntVector& m, std::size_t k) {
  for (std::size_t j = 0; j < rays.size(); ++j)
    if (j != k && dot(m, rays[j]) < 0) return false;
  return true;
}

std::vector<DemazureRoot> roots_for_ray(const ValidatedFan& fan, std::size_t k) {
  const auto& rays = fan.rays();
  const std::size_t n = static_cast<std::size_t>(fan.dim());
  const auto vertices = root_polytope_vertices(fan, k);
  if (vertices.empty()) return {};

  // m = V t with t_0 = -1 parametrizes the affine lattice <m, ray_k> = -1.
  const UnimodularCompletion v = complete_primitive(rays[k]);
  IntVector lo(n, 0), hi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::optional<Rational> mn, mx;
    for (const auto& vert : vertices) {
      Rational t = 0;
      for (std::size_t j = 0; j < n; ++j) t += vert[j] * v.inverse[i][j];
      if (!mn || t < *mn) mn = t;
      if (!mx || t > *mx) mx = t;
    }
    lo[i] = ceil_of(*mn);
    hi[i] = floor_of(*mx);
    if (lo[i] > hi[i]) return {};
  }

  std::vector<DemazureRoot> out;
  IntVector t = lo;
  t[0] = -1;
  while (true) {
    IntVector m = horoaut::apply(v.basis, t);
    if (satisfies_root_inequalities(rays, m, k)) out.push_back({std::move(m), k});
    std::size_t i = 1;
    while (i < n && t[i] == hi[i]) {
      t[i] = lo[i];
      ++i;
    }
    if (i >= n) break;
    ++t[i];
  }
  return out;
}

}  // namespace

ValidatedFan validate_fan(Fan fan) {
  if (fan.dim < 0) throw Error(ErrorKind::DimensionMismatch, "negative fan dimension");
  check_rays(fan);
  if (fan.dim == 0) {
    if (!fan.rays.empty()) throw Error(ErrorKind::DimensionMismatch, "a 0-dimensional fan has no rays");
    for (const auto& cone : fan.maximal_cones)
      if (!cone.empty()) throw Error(ErrorKind::BadFaceStructure, "a 0-dimensional fan has only the zero cone");
    if (fan.maximal_cones.size() > 1) throw Error(ErrorKind::BadFaceStructure, "zero cone listed twice");
    fan.maximal_cones.assign(1, {});
    return ValidatedFan(std::move(fan));
  }
  if (fan.maximal_cones.empty()) throw Error(ErrorKind::NotComplete, "fan has no maximal cones");
  check_cone_shapes(fan);
  std::vector<IntMatrix> duals;
  for (const auto& cone : fan.maximal_cones) duals.push_back(unimodular_inverse(cone_matrix(fan, cone)));
  check_facet_pairing(fan, duals);
  check_single_covering(fan, duals);
  return ValidatedFan(std::move(fan));
}

std::vector<DemazureRoot> demazure_roots(const ValidatedFan& fan) {
  std::vector<DemazureRoot> roots;
  for (std::size_t k = 0; k < fan.rays().size(); ++k) {
    auto part = roots_for_ray(fan, k);
    roots.insert(roots.end(), part.begin(), part.end());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<DemazureRoot> demazure_roots_bruteforce(const ValidatedFan& fan, Int radius) {
  const auto& rays = fan.rays();
  const std::size_t n = static_cast<std::size_t>(fan.dim());
  std::vector<DemazureRoot> roots;
  if (radius < 0) return roots;
  IntVector m(n, -radius);
  while (true) {
    std::size_t negative = 0, distinguished = 0;
    bool minus_one = false;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      const Int p = dot(m, rays[j]);
      if (p < 0) {
        ++negative;
        distinguished = j;
        minus_one = p == -1;
      }
    }
    if (negative == 1 && minus_one) roots.push_back({m, distinguished});
    std::size_t i = 0;
    while (i < n && m[i] == radius) {
      m[i] = -radius;
      ++i;
    }
    if (i >= n) break;
    ++m[i];
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Int oracle_safe_radius(const ValidatedFan& fan) {
  Int radius = 0;
  for (std::size_t k = 0; k < fan.rays().size(); ++k)
    for (const auto& vert : root_polytope_vertices(fan, k))
      for (const Rational& x : vert) radius = std::max(radius, ceil_of(abs(x)));
  return radius;
}

RootPartition classify_roots(std::span<const DemazureRoot> roots) {
  std::set<IntVector> present;
  for (const auto& r : roots) present.insert(r.m);
  RootPartition out;
  for (const auto& r : roots) {
    IntVector neg = r.m;
    for (Int& x : neg) x = -x;
    (present.contains(neg) ? out.semisimple : out.unipotent).push_back(r);
  }
  return out;
}

ToricAutReport toric_aut_report(const ValidatedFan& fan) {
  ToricAutReport rep;
  rep.roots = demazure_roots(fan);
  rep.partition = classify_roots(rep.roots);
  rep.n_semisimple = rep.partition.semisimple.size();
  rep.n_unipotent = rep.partition.unipotent.size();
  rep.dim_aut = fan.dim() + static_cast<Int>(rep.roots.size());
  rep.reductive = rep.n_unipotent == 0;
  return rep;
}

Fan projective_space_fan(int n) {
  Fan f;
  f.dim = n;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    f.rays.push_back(e);
  }
  if (n > 0) f.rays.push_back(IntVector(n, -1));
  for (int skip = 0; skip <= n && n > 0; ++skip) {
    std::vector<std::size_t> cone;
    for (int i = 0; i <= n; ++i)
      if (i != skip) cone.push_back(static_cast<std::size_t>(i));
    f.maximal_cones.push_back(cone);
  }
  if (n == 0) f.maximal_cones.push_back({});
  return f;
}

Fan hirzebruch_fan(Int a) {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
  f.maximal_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return f;
}

Fan product_fan(const Fan& a, const Fan& b) {
  Fan f;
  f.dim = a.dim + b.dim;
  for (const auto& r : a.rays) {
    IntVector v = r;
    v.resize(static_cast<std::size_t>(f.dim), 0);
    f.rays.push_back(v);
  }
  for (const auto& r : b.rays) {
    IntVector v(static_cast<std::size_t>(a.dim), 0);
    v.insert(v.end(), r.begin(), r.end());
    f.rays.push_back(v);
  }
  const auto a_cones = a.maximal_cones.empty() ? std::vector<std::vector<std::size_t>>{{}} : a.maximal_cones;
  const auto b_cones = b.maximal_cones.empty() ? std::vector<std::vector<std::size_t>>{{}} : b.maximal_cones;
  for (const auto& ca : a_cones) {
    for (const auto& cb : b_cones) {
      std::vector<std::size_t> cone = ca;
      for (std::size_t idx : cb) cone.push_back(idx + a.rays.size());
      f.maximal_cones.push_back(cone);
    }
  }
  return f;
}

Fan transform_fan(const Fan& fan, const IntMatrix& u) {
  Fan f = fan;
  for (auto& r : f.rays) r = horoaut::apply(u, r);
  return f;
}

}  // namespace horoaut
