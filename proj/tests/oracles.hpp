#pragma once

// Independent reference computations used only by the tests.

#include "horoaut/fan.hpp"
#include "horoaut/root_system.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using horoaut::Int;
using horoaut::IntVector;

/// Simple roots of each type in a Euclidean model (Bourbaki numbering),
/// scaled so all coordinates are integers.
inline std::vector<IntVector> euclidean_simple_roots(horoaut::DynkinType type, int l) {
  using horoaut::DynkinType;
  std::vector<IntVector> a;
  auto unit_diff = [](std::size_t dim, std::size_t i, Int scale) {
    IntVector v(dim, 0);
    v[i] = scale;
    v[i + 1] = -scale;
    return v;
  };
  const auto n = static_cast<std::size_t>(l);
  switch (type) {
    case DynkinType::A:
      for (std::size_t i = 0; i < n; ++i) a.push_back(unit_diff(n + 1, i, 1));
      break;
    case DynkinType::B:
    case DynkinType::C:
    case DynkinType::D:
      for (std::size_t i = 0; i + 1 < n; ++i) a.push_back(unit_diff(n, i, 1));
      a.emplace_back(n, 0);
      if (type == DynkinType::B) a.back()[n - 1] = 1;
      if (type == DynkinType::C) a.back()[n - 1] = 2;
      if (type == DynkinType::D) a.back()[n - 2] = a.back()[n - 1] = 1;
      break;
    case DynkinType::E: {
      a.push_back({1, -1, -1, -1, -1, -1, -1, 1});
      a.push_back({2, 2, 0, 0, 0, 0, 0, 0});
      for (std::size_t i = 0; i + 2 < n; ++i) {
        IntVector v(8, 0);
        v[i] = -2;
        v[i + 1] = 2;
        a.push_back(v);
      }
      break;
    }
    case DynkinType::F:
      a = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      break;
    case DynkinType::G:
      a = {{1, -1, 0}, {-2, 1, 1}};
      break;
  }
  return a;
}

struct Model {
  horoaut::IntMatrix gram;    // (alpha_i, alpha_j)
  horoaut::IntMatrix cartan;  // <alpha_i, alpha_j^vee>
  std::vector<IntVector> positive_roots;
  std::vector<IntVector> all_roots;
};

inline Int inner(const IntVector& x, const IntVector& y) {
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

/// Roots as the orbit of the simple roots under simple reflections.
inline Model build_model(horoaut::DynkinType type, int l) {
  const auto a = euclidean_simple_roots(type, l);
  const std::size_t n = a.size();
  Model m;
  m.gram.assign(n, IntVector(n, 0));
  m.cartan.assign(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.gram[i][j] = inner(a[i], a[j]);
      m.cartan[i][j] = 2 * m.gram[i][j] / inner(a[j], a[j]);
    }
  std::set<IntVector> seen;
  std::vector<IntVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector c = queue.back();
    queue.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      Int pairing = 0;
      for (std::size_t k = 0; k < n; ++k) pairing += c[k] * m.cartan[k][j];
      IntVector r = c;
      r[j] -= pairing;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  m.all_roots.assign(seen.begin(), seen.end());
  for (const auto& r : m.all_roots)
    if (std::all_of(r.begin(), r.end(), [](Int x) { return x >= 0; })) m.positive_roots.push_back(r);
  return m;
}

inline std::size_t closed_form_positive_roots(horoaut::DynkinType type, int l) {
  using horoaut::DynkinType;
  const auto n = static_cast<std::size_t>(l);
  switch (type) {
    case DynkinType::A: return n * (n + 1) / 2;
    case DynkinType::B:
    case DynkinType::C: return n * n;
    case DynkinType::D: return n * (n - 1);
    case DynkinType::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case DynkinType::F: return 24;
    case DynkinType::G: return 6;
  }
  return 0;
}

inline Int group_dimension(horoaut::DynkinType type, int l) {
  using horoaut::DynkinType;
  switch (type) {
    case DynkinType::A: return Int{l} * (l + 2);
    case DynkinType::B:
    case DynkinType::C: return Int{l} * (2 * l + 1);
    case DynkinType::D: return Int{l} * (2 * l - 1);
    case DynkinType::E: return l == 6 ? 78 : l == 7 ? 133 : 248;
    case DynkinType::F: return 52;
    case DynkinType::G: return 14;
  }
  return 0;
}

/// Weyl product over positive roots with the invariant form of the model;
/// fw in the model's (input) numbering.
inline boost::multiprecision::cpp_int weyl_dimension(const Model& m, const IntVector& fw) {
  using boost::multiprecision::cpp_rational;
  cpp_rational prod = 1;
  for (const auto& c : m.positive_roots) {
    cpp_rational num = 0, den = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      num += cpp_rational(c[j] * (fw[j] + 1) * m.gram[j][j]);
      den += cpp_rational(c[j] * m.gram[j][j]);
    }
    prod *= num / den;
  }
  return boost::multiprecision::numerator(prod);
}

/// Smooth complete 2D fan from repeated star subdivisions of the fan of
/// P^2, followed by a random change of basis in GL_2(Z).
inline horoaut::Fan random_star_fan(std::mt19937_64& rng, int subdivisions) {
  std::vector<IntVector> cyc{{1, 0}, {0, 1}, {-1, -1}};
  for (int s = 0; s < subdivisions; ++s) {
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, cyc.size() - 1)(rng);
    const IntVector& u = cyc[i];
    const IntVector& v = cyc[(i + 1) % cyc.size()];
    const IntVector sum{u[0] + v[0], u[1] + v[1]};
    if (std::max(std::abs(sum[0]), std::abs(sum[1])) > 12) continue;
    cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(i + 1), sum);
  }
  Int a = 1, b = 0, c = 0, d = 1;
  std::uniform_int_distribution<int> step(0, 3);
  std::uniform_int_distribution<Int> shear(-2, 2);
  for (int s = 0; s < 3; ++s) {
    Int t = shear(rng);
    switch (step(rng)) {
      case 0: a += t * c, b += t * d; break;
      case 1: c += t * a, d += t * b; break;
      case 2: std::swap(a, c), std::swap(b, d); break;
      default: a = -a, b = -b; break;
    }
  }
  horoaut::Fan fan;
  fan.dim = 2;
  for (const auto& r : cyc) fan.rays.push_back({a * r[0] + b * r[1], c * r[0] + d * r[1]});
  std::vector<std::size_t> order(cyc.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<IntVector> shuffled(cyc.size());
  std::vector<std::size_t> where(cyc.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    shuffled[order[i]] = fan.rays[i];
    where[i] = order[i];
  }
  fan.rays = shuffled;
  for (std::size_t i = 0; i < cyc.size(); ++i) fan.maximal_cones.push_back({where[i], where[(i + 1) % cyc.size()]});
  return fan;
}

/// Lattice points m in the box |m|_inf <= radius with <m, rho_k> = -1 for
/// exactly one ray and >= 0 for the others.
inline std::set<IntVector> scan_roots(const horoaut::Fan& fan, Int radius) {
  std::set<IntVector> out;
  const auto n = static_cast<std::size_t>(fan.dim);
  if (n == 0) return out;
  IntVector m(n, -radius);
  while (true) {
    int minus_one = 0;
    bool ok = true;
    for (const auto& r : fan.rays) {
      const Int p = inner(m, r);
      if (p == -1) ++minus_one;
      else if (p < 0) ok = false;
    }
    if (ok && minus_one == 1) out.insert(m);
    std::size_t i = 0;
    while (i < n && m[i] == radius) m[i++] = -radius;
    if (i == n) break;
    ++m[i];
  }
  return out;
}

}  // namespace oracle
