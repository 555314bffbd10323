#pragma once

#include "toricfan/arith.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace toricfan {

/// Lattice box [-R, R]^d used to truncate infinite lattice conditions.
class BoxSpec {
 public:
  explicit BoxSpec(long radius);
  long radius() const noexcept { return radius_; }

  bool contains(const LatticeVector& a) const;

  /// Visits every point of [-R, R]^dim in lexicographic order.
  void for_each_point(std::size_t dim, const std::function<void(const LatticeVector&)>& fn) const;

  friend bool operator==(const BoxSpec&, const BoxSpec&) = default;

 private:
  long radius_;
};

/// Extreme rays of the pointed cone {z : rows * z >= 0}. `rows` must have
/// full column rank `cols`. Incremental double description over Q.
std::vector<LatticeVector> extreme_rays(const RationalMatrix& rows, std::size_t cols);

/**
 * Rational pointed cone in R^d, kept in both descriptions.
 *
 * generators: the extreme rays, primitive and lexicographically sorted, so two
 * cones are equal exactly when their generator lists agree.
 * equations: integer basis of the orthogonal complement of the linear span.
 * facet_normals: primitive normals lying in the span, one per facet, with
 * <n, x> >= 0 on the cone.
 *
 * Immutable once constructed.
 */
class Cone {
 public:
  /// The zero cone {0} in R^ambient_dim.
  static Cone zero(std::size_t ambient_dim);

  /// Positive hull of `gens`. Zero vectors are ignored; redundant generators
  /// are dropped. Throws NotPointed / DimensionMismatch.
  static Cone from_generators(std::span<const LatticeVector> gens, std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return dim_; }
  bool is_zero() const noexcept { return dim_ == 0; }

  const std::vector<LatticeVector>& generators() const noexcept { return generators_; }
  const std::vector<LatticeVector>& equations() const noexcept { return equations_; }
  const std::vector<LatticeVector>& facet_normals() const noexcept { return facet_normals_; }

  bool contains(const LatticeVector& a) const;
  bool relint_contains(const LatticeVector& a) const;

  std::string to_string() const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.generators_ == b.generators_;
  }
  /// Orders by dimension, then lexicographically by generator list.
  friend std::strong_ordering operator<=>(const Cone& a, const Cone& b);

 private:
  Cone() = default;

  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  std::vector<LatticeVector> generators_;
  std::vector<LatticeVector> equations_;
  std::vector<LatticeVector> facet_normals_;
};

/// Convenience: cone_from_generators for a list of vectors of equal length (at least one).
Cone cone_from_generators(std::span<const LatticeVector> gens, std::size_t ambient_dim);
Cone cone_of(std::initializer_list<LatticeVector> gens);

/// All faces including the zero cone and the cone itself, sorted.
std::vector<Cone> faces(const Cone& cone);

bool is_face_of(const Cone& face, const Cone& cone);

Cone intersect_cones(const Cone& a, const Cone& b);

/// Smallest cone containing w and c; its dimension must be dim c + 1.
Cone join_point_cone(const LatticeVector& w, const Cone& c);

/// Lattice points of the cone (or of its relative interior) inside the box,
/// in lexicographic order.
std::vector<LatticeVector> lattice_points(const Cone& cone, const BoxSpec& box, bool relint_only);

/// Points of c ∩ Z^d in the box, ordered by L1 norm then lexicographically.
std::vector<LatticeVector> graded_lattice_points(const Cone& cone, const BoxSpec& box);

/// Embeds a cone of R^d into R^{d+1} (last coordinate 0).
Cone embed_cone(const Cone& c);

}  // namespace toricfan
