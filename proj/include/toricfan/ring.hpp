#pragma once

#include "toricfan/homology.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace toricfan {

struct CmResult {
  bool cohen_macaulay = true;
  /// First offending (cone, degree) in id order, when not CM.
  std::optional<ConeId> failing_cone;
  int failing_degree = 0;
};

/// CM test: every star cohomology vanishes below degree dim Σ − 1.
CmResult is_cohen_macaulay(const Fan& fan, const FieldSpec& field);
CmResult is_cohen_macaulay(const Fan& fan, const CohomologyProfile& profile);

/// Graded dimensions on a lattice box. Keys absent from `values` are 0.
struct GradedHilbertSlice {
  BoxSpec box{1};
  std::map<LatticeVector, long> values;

  long at(const LatticeVector& a) const;
};

/// dim ω_a = dim H̃^{dim Σ−1}(C^•_{str(C_a)}) for a ∈ relint(C_a). Requires CM.
GradedHilbertSlice omega_hilbert(const Fan& fan, const FieldSpec& field, const BoxSpec& box);
GradedHilbertSlice omega_hilbert(const Fan& fan, const CohomologyProfile& profile, const BoxSpec& box);

/// dim H^i_m(K[Σ])_a = dim H̃^{i−1}(C^•_{str(C)}) for a ∈ −relint(C); 0 <= i <= dim Σ.
GradedHilbertSlice local_cohomology_hilbert(const Fan& fan, const FieldSpec& field, int i,
                                            const BoxSpec& box);
GradedHilbertSlice local_cohomology_hilbert(const Fan& fan, const CohomologyProfile& profile, int i,
                                            const BoxSpec& box);

struct RhoVerdict {
  ConeId cone = 0;
  long rho = 0;
  long expected = 0;
  bool in_star = false;
  bool ok = false;
};

/// Support condition checked on the box only.
struct ConditionIStatus {
  bool evaluated = false;
  bool verified = false;
  std::optional<LatticeVector> failed_at;
  long box_radius = 0;
};

struct GorensteinWitness {
  LatticeVector sigma;
  ConditionIStatus condition_i;
  std::vector<RhoVerdict> condition_ii;
  bool condition_ii_ok = false;
};

struct GorensteinResult {
  enum class Verdict { Gorenstein, NotCohenMacaulay, NoSigmaInBox };
  Verdict verdict = Verdict::NoSigmaInBox;
  long box_radius = 0;
  CmResult cm;
  std::optional<GorensteinWitness> witness;
  /// Candidates tried before (or instead of) the witness, in search order.
  std::vector<GorensteinWitness> rejected;
};

/// Searches σ over the lattice points of the intersection of all facets in the
/// box, lexicographically; checks the ρ condition exactly and the support
/// condition on the box.
GorensteinResult gorenstein_check(const Fan& fan, const FieldSpec& field, const BoxSpec& box);

const char* to_string(GorensteinResult::Verdict v);

struct CanonicalIdealResult {
  enum class Kind { EulerSelf, IdealSubfan, NoGradedEmbedding };
  Kind kind = Kind::NoGradedEmbedding;
  Subfan sigma_prime;
  std::string reason;
  /// t_C = dim H̃^{dim Σ−1}(C^•_{str(C)}) per cone.
  std::vector<long> top_cohomology;
};

/// Decides whether ω embeds as a Z^d-graded ideal q_{Σ'}. Requires CM.
CanonicalIdealResult canonical_ideal_subfan(const Fan& fan, const FieldSpec& field);
CanonicalIdealResult canonical_ideal_subfan(const Fan& fan, const CohomologyProfile& profile);

const char* to_string(CanonicalIdealResult::Kind k);

struct BoundaryDualityReport {
  bool applicable = false;
  std::string reason;
  Subfan boundary;
  /// Local homology heuristic; manifoldness itself is not decided.
  bool manifold_like = false;
  bool boundary_euler = false;
  bool boundary_cm = false;
  bool canonical_matches = false;
  CanonicalIdealResult canonical;
  /// (boundary Euler and CM) == (ω ≅ q_{boundary}).
  bool agreement = false;
};

/// Requires a pure CM fan.
BoundaryDualityReport manifold_boundary_duality_check(const Fan& fan, const FieldSpec& field);

struct JoinValidation {
  bool cohen_macaulay = false;
  bool euler = false;
  std::size_t cone_count = 0;
  bool passed() const { return cohen_macaulay && euler; }
};

/// Builds (e_{d+1} * Σ') ∪ Σ in R^{d+1} and checks it is Euler and CM.
JoinValidation cross_validate_via_join(const Fan& fan, const Subfan& sigma_prime, const FieldSpec& field);

}  // namespace toricfan
