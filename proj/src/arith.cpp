#include "horoaut/arith.hpp"

#include "horoaut/error.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

namespace horoaut {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer multiplication");
  return r;
}

Int to_int(const BigInt& value) {
  if (value > BigInt(std::numeric_limits<Int>::max()) ||
      value < BigInt(std::numeric_limits<Int>::min())) {
    throw Error(ErrorKind::Overflow, "value " + value.str() + " exceeds 64 bits");
  }
  return static_cast<Int>(value);
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "dot product of vectors of length " +
                                                  std::to_string(a.size()) + " and " +
                                                  std::to_string(b.size()));
  }
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

bool is_zero(std::span<const Int> v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

BigInt determinant(const IntMatrix& square) {
  // Bareiss fraction-free elimination.
  const std::size_t n = square.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (square[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = square[i][j];
  }
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<Rational>> a;
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix");
    a.emplace_back(r.begin(), r.end());
  }
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < a.size(); ++c) {
    std::size_t pivot = rk;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rk], a[pivot]);
    for (std::size_t i = rk + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[rk][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rk][j];
    }
    ++rk;
  }
  return rk;
}

std::optional<std::vector<Rational>> solve(const IntMatrix& m, std::span<const Int> b) {
  const std::size_t n = m.size();
  if (b.size() != n) throw Error(ErrorKind::DimensionMismatch, "solve: right-hand side length");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "solve: non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[c], a[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m.front().size(), IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const IntMatrix bt = transpose(b);
  IntMatrix c(a.size(), IntVector(bt.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < bt.size(); ++j) c[i][j] = dot(a[i], bt[j]);
  return c;
}

IntVector apply(const IntMatrix& m, std::span<const Int> v) {
  IntVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  BigInt det = determinant(m);
  if (det != 1 && det != -1) throw Error(ErrorKind::DimensionMismatch, "matrix is not unimodular");
  IntMatrix inv(n, IntVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n, 0);
    e[j] = 1;
    auto col = solve(m, e);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& q = (*col)[i];
      inv[i][j] = to_int(numerator(q));  // denominators are 1 for unimodular input
    }
  }
  return inv;
}

UnimodularCompletion complete_primitive(std::span<const Int> v) {
  const std::size_t n = v.size();
  IntVector row(v.begin(), v.end());
  IntMatrix basis = identity_matrix(n);
  IntMatrix inverse = identity_matrix(n);
  // Column operations on `row` (mirrored on basis) and the inverse row
  // operations on `inverse`, until row = (g, 0, ..., 0).
  for (std::size_t j = 1; j < n; ++j) {
    if (row[j] == 0) continue;
    const Int a = row[0], b = row[j];
    const auto [g, x, y] = extended_gcd(a, b);
    const Int bg = b / g, ag = a / g;
    for (std::size_t i = 0; i < n; ++i) {
      const Int c0 = basis[i][0], cj = basis[i][j];
      basis[i][0] = checked_add(checked_mul(x, c0), checked_mul(y, cj));
      basis[i][j] = checked_add(checked_mul(-bg, c0), checked_mul(ag, cj));
    }
    for (std::size_t k = 0; k < n; ++k) {
      const Int r0 = inverse[0][k], rj = inverse[j][k];
      inverse[0][k] = checked_add(checked_mul(ag, r0), checked_mul(bg, rj));
      inverse[j][k] = checked_add(checked_mul(-y, r0), checked_mul(x, rj));
    }
    row[0] = g;
    row[j] = 0;
  }
  if (n > 0 && row[0] < 0) {
    for (std::size_t i = 0; i < n; ++i) basis[i][0] = -basis[i][0];
    for (std::size_t k = 0; k < n; ++k) inverse[0][k] = -inverse[0][k];
    row[0] = -row[0];
  }
  if (n > 0 && row[0] != 1) throw Error(ErrorKind::NotPrimitiveRay, "vector " + format_vector(v) + " is not primitive");
  return {std::move(basis), std::move(inverse)};
}

Int floor_of(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);  // den > 0
  BigInt quot = num / den;
  if (num % den != 0 && num < 0) quot -= 1;
  return to_int(quot);
}

Int ceil_of(const Rational& q) { return -floor_of(-q); }

std::string format_vector(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace horoaut
