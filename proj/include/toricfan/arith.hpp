#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace toricfan {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of Z^d. Coordinates are arbitrary precision.
using LatticeVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

LatticeVector make_vector(std::initializer_list<long> coords);
LatticeVector unit_vector(std::size_t dim, std::size_t index);
LatticeVector zero_vector(std::size_t dim);

Integer dot(const LatticeVector& a, const LatticeVector& b);
bool is_zero(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);

/// Divides by the gcd of the coordinates. The zero vector is returned unchanged.
LatticeVector primitive(LatticeVector v);

/// Clears denominators and returns the primitive integer vector on the same ray.
LatticeVector primitive_integer(const RationalVector& v);

RationalVector to_rational(const LatticeVector& v);
LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector subtract(const LatticeVector& a, const LatticeVector& b);
LatticeVector negate(LatticeVector v);

/// Appends one coordinate (R^d -> R^{d+1}).
LatticeVector extend(const LatticeVector& v, const Integer& last);

/// "(1,-2,0)"
std::string to_string(const LatticeVector& v);

// Exact linear algebra over Q. Matrices are row-major lists of rows.

std::size_t rank(RationalMatrix m);

/// Indices of a maximal linearly independent subset of rows, chosen greedily
/// in order.
std::vector<std::size_t> independent_rows(const RationalMatrix& m);

/// Basis of {x in Q^cols : m x = 0}, as primitive integer vectors in a
/// canonical (reduced-echelon) form.
std::vector<LatticeVector> integer_kernel_basis(const RationalMatrix& m, std::size_t cols);

/// Solves the square non-singular system and returns the inverse.
RationalMatrix inverse(const RationalMatrix& m);

RationalMatrix to_rational(std::span<const LatticeVector> rows);

}  // namespace toricfan
