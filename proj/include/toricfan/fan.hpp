#pragma once

#include "toricfan/cone.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toricfan {

/// Index of a cone inside its Fan. Ids follow (dim, generators) order, so the
/// zero cone is always id 0.
using ConeId = std::size_t;

/// Sorted set of cone ids of one fan.
using ConeIdSet = std::vector<ConeId>;

/**
 * A validated rational pointed fan: closed under faces, pairwise
 * intersections are common faces. Immutable after build().
 */
class Fan {
 public:
  /// Face closure of `maximal_cones` plus validation. Inputs that are faces of
  /// other inputs are absorbed. Throws NotAFan naming the offending pair.
  static Fan build(std::span<const Cone> maximal_cones, std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return dim_; }
  bool pure() const noexcept { return pure_; }
  std::size_t size() const noexcept { return cones_.size(); }

  const Cone& cone(ConeId id) const { return cones_.at(id); }
  const std::vector<Cone>& cones() const noexcept { return cones_; }
  const ConeIdSet& facets() const noexcept { return facets_; }
  std::size_t cone_dim(ConeId id) const { return cones_.at(id).dim(); }

  /// a ⊆ b (a is a face of b).
  bool is_face_of(ConeId a, ConeId b) const { return below_[a * cones_.size() + b]; }

  /// Faces of `id`, including itself, ascending.
  const ConeIdSet& faces_of(ConeId id) const { return faces_of_.at(id); }

  std::optional<ConeId> find(const Cone& c) const;
  ConeId id_of(const Cone& c) const;

  /// The unique cone whose relative interior contains a, if a ∈ |Σ|.
  std::optional<ConeId> relint_cone_of(const LatticeVector& a) const;
  bool support_contains(const LatticeVector& a) const { return relint_cone_of(a).has_value(); }

  std::string describe(ConeId id) const;

 private:
  Fan() = default;

  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  bool pure_ = true;
  std::vector<Cone> cones_;
  std::vector<bool> below_;
  std::vector<ConeIdSet> faces_of_;
  ConeIdSet facets_;
};

/// Cones of one fan selected by a star: members D with base ⊆ D (or a ∈ D).
struct Star {
  /// The minimal member: C itself, or the cone with a in its relative
  /// interior. Empty only for a point outside |Σ|.
  std::optional<ConeId> base;
  ConeIdSet members;
};

/// A face-closed id set of a parent fan; stands for the radical ideal q_{Σ'}.
struct Subfan {
  ConeIdSet ids;
  bool empty() const noexcept { return ids.empty(); }
  bool contains(ConeId id) const;
  friend bool operator==(const Subfan&, const Subfan&) = default;
};

Star star(const Fan& fan, ConeId base);
Star star_of_point(const Fan& fan, const LatticeVector& a);

bool is_face_closed(const Fan& fan, const ConeIdSet& ids);

/// Validates face-closedness and wraps the ids.
Subfan make_subfan(const Fan& fan, ConeIdSet ids);
Subfan whole_fan(const Fan& fan);
Subfan face_closure(const Fan& fan, const ConeIdSet& generators);

Subfan fan_of_cone(const Fan& fan, ConeId c);
Subfan boundary_fan_of_cone(const Fan& fan, ConeId c);
Subfan subfan_union(const Subfan& a, const Subfan& b);
Subfan subfan_intersection(const Subfan& a, const Subfan& b);
Subfan sigma_minus_star(const Fan& fan, ConeId base);

/// Face closure of the (k-1)-cones lying in exactly one facet of a pure
/// k-dimensional fan (k >= 1). Throws NotPure.
Subfan boundary_subfan(const Fan& fan);

/// Maximal cones and dimension of a subfan, measured in the parent.
ConeIdSet subfan_facets(const Fan& fan, const Subfan& sub);
long subfan_dim(const Fan& fan, const Subfan& sub);

/// Rebuilds a subfan as a standalone Fan. `sub` must be non-empty.
Fan subfan_as_fan(const Fan& fan, const Subfan& sub);

/// Maps a subfan of `sub_fan` (a standalone copy) back to ids of `parent`.
Subfan lift_subfan(const Fan& parent, const Fan& sub_fan, const Subfan& inner);

/// f_i = number of i-dimensional cones among `members`.
std::vector<long> f_vector(const Fan& fan, const ConeIdSet& members);

/// Alternating count sum_i (-1)^{i+1} f_i over the star of c.
long rho(const Fan& fan, ConeId c);

struct EulerReport {
  bool euler = false;
  bool pure = false;
  long target = 0;          // (-1)^{dim Σ - 1}
  std::vector<long> rho;    // per cone id
  std::optional<ConeId> first_violation;
};

EulerReport is_euler_fan(const Fan& fan);

/// Embeds every cone into R^{d+1} (last coordinate 0).
Fan embed_fan(const Fan& fan);

/// (w * Σ') ∪ Σ with Σ embedded into R^{d+1}; w must have a nonzero last coordinate.
Fan join_fan(const LatticeVector& w, const Subfan& sub, const Fan& base);

/// Fan of coordinate cones cone(e_i : i in F) for the facets F of a
/// simplicial complex on `vertex_count` vertices.
Fan coordinate_fan(std::size_t vertex_count, const std::vector<std::vector<std::size_t>>& facets);

}  // namespace toricfan
