#pragma once

#include "toricfan/fan.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace toricfan {

/// Coefficient field: Q or F_p.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  /// Throws InvalidArgument unless p is prime (and < 2^31).
  static FieldSpec prime(unsigned long p);
  /// "q" / "Q" or "fp:<p>".
  static FieldSpec parse(const std::string& text);

  bool is_rational() const noexcept { return characteristic_ == 0; }
  unsigned long characteristic() const noexcept { return characteristic_; }
  std::string name() const;  // "Q", "F_2", ...

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(unsigned long p) : characteristic_(p) {}
  unsigned long characteristic_;
};

/// Finite simplicial complex with all faces materialized, sorted by dimension.
/// Vertices are 0..vertex_count-1; `labels` records what each vertex stands for.
class SimplicialComplex {
 public:
  /// Downward closure of `facets`. The empty face is always present.
  SimplicialComplex(std::size_t vertex_count, const std::vector<std::vector<std::size_t>>& facets);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  /// -1 for the complex {∅}.
  int dim() const noexcept { return static_cast<int>(faces_.size()) - 2; }
  /// Faces of dimension k (k >= -1), each a sorted vertex list.
  const std::vector<std::vector<std::size_t>>& faces(int k) const;

  std::vector<std::size_t> labels;

 private:
  std::size_t vertex_count_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;  // index k+1
};

/// Vector of dimensions indexed by degree, starting at `low`.
struct DegreeVector {
  int low = 0;
  std::vector<long> dims;

  long at(int degree) const;
  int high() const { return low + static_cast<int>(dims.size()) - 1; }
  long alternating_sum() const;  // sum_i (-1)^i dims[i]
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

/// Order complex of star − {base}: vertices are the members, faces the chains.
SimplicialComplex order_complex(const Fan& fan, const Star& star);

/// Reduced cohomology dimensions, indexed from degree -1 up to dim.
DegreeVector reduced_cohomology(const SimplicialComplex& cx, const FieldSpec& field);

/// Rank of an integer matrix given as sparse rows, over the field.
std::size_t sparse_rank(std::vector<std::vector<std::pair<std::size_t, long>>> rows,
                        const FieldSpec& field);

/// dim H̃^i(C^•_{str(C)}) for i = dim C - 1 .. dim Σ - 1, via the order complex
/// shifted by dim C. A star consisting of C alone gives K in degree dim C - 1.
DegreeVector star_cohomology(const Fan& fan, ConeId c, const FieldSpec& field);

/// Local homology H_i(|Γ|, |Γ| − p) for p in the open cell of a nonzero cone.
DegreeVector local_homology_profile(const Fan& fan, ConeId c, const FieldSpec& field);

/// Star cohomology of every cone of a fan over one field.
struct CohomologyProfile {
  FieldSpec field = FieldSpec::rationals();
  std::vector<DegreeVector> per_cone;

  long at(ConeId c, int degree) const { return per_cone.at(c).at(degree); }
};

CohomologyProfile cohomology_profile(const Fan& fan, const FieldSpec& field);

}  // namespace toricfan
