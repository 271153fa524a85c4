#pragma once

// Exact integer and rational helpers shared by the combinatorial modules.
// Everything here either succeeds exactly or throws ErrorKind::Overflow.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace horoaut {

using Int = std::int64_t;
using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;  // row-major
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int to_int(const BigInt& value);

Int dot(std::span<const Int> a, std::span<const Int> b);
Int gcd_of(std::span<const Int> values);
bool is_zero(std::span<const Int> v);

/// Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0.
struct ExtendedGcd {
  Int g, x, y;
};
ExtendedGcd extended_gcd(Int a, Int b);

BigInt determinant(const IntMatrix& square);
std::size_t rank(const IntMatrix& rows);

/// Unique solution of A x = b, or nullopt when A is singular. A is square.
std::optional<std::vector<Rational>> solve(const IntMatrix& a, std::span<const Int> b);

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector apply(const IntMatrix& m, std::span<const Int> v);

/// Integer inverse of a unimodular matrix; throws DimensionMismatch if
/// |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// For a primitive v, a unimodular V (with its inverse) such that
/// v^T V = e_1^T. Columns 2..n of V span the lattice orthogonal to v.
struct UnimodularCompletion {
  IntMatrix basis;    // V
  IntMatrix inverse;  // V^{-1}
};
UnimodularCompletion complete_primitive(std::span<const Int> v);

Int floor_of(const Rational& q);
Int ceil_of(const Rational& q);

std::string format_vector(std::span<const Int> v);

}  // namespace horoaut
