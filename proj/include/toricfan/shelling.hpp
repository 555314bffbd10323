#pragma once

#include "toricfan/ring.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace toricfan {

/// Three-valued search outcome; Unknown means the node budget ran out.
enum class Verdict { Yes, No, Unknown };
const char* to_string(Verdict v);

struct SearchBudget {
  std::size_t max_nodes = 500'000;
};

/**
 * A shelling C_1..C_s of a (sub)fan. Ids refer to the fan that was searched.
 *
 * For each step j >= 2, `boundary` is a shelling D_1..D_t of fan(∂C_j) whose
 * first `prefix_length` (= r_j) facets have union ⋃_{i<j} fan(C_i) ∩ fan(C_j).
 * Boundary certificates are themselves shellings, nested down to dimension 0.
 */
struct ShellingCertificate {
  struct Step {
    std::shared_ptr<const ShellingCertificate> boundary;
    std::size_t prefix_length = 0;
  };

  std::vector<ConeId> facet_order;
  std::shared_ptr<const ShellingCertificate> first_boundary;  // shelling of fan(∂C_1)
  std::vector<Step> steps;                                     // steps[j-2], j = 2..s
};

struct ShellingResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<ShellingCertificate> certificate;
  std::size_t nodes = 0;
};

ShellingResult shellability_search(const Fan& fan, const SearchBudget& budget = {});

/// Checks every clause of a certificate, recursively through the boundary shellings.
bool verify_shelling(const Fan& fan, const ShellingCertificate& cert);

/// Π_j = ⋃_{i<j} fan(C_i) ∩ fan(C_j) for an ordering prefix `earlier` and next facet `next`.
Subfan prefix_intersection(const Fan& fan, const std::vector<ConeId>& earlier, ConeId next);

// ---------------------------------------------------------------------------
// Semishelling

enum class CellType { Ball, Sphere };
enum class Confidence { Exact, HomologyOnly };
const char* to_string(CellType t);
const char* to_string(Confidence c);

struct CellRecognition {
  bool recognized = false;
  CellType type = CellType::Ball;
  Confidence confidence = Confidence::Exact;
  std::string detail;
};

/// Decides whether |Γ_sub| is a k-ball or k-sphere. Exact for k <= 1 by
/// graph classification; for k >= 2 a homology / pseudomanifold test whose
/// positive answers are labelled HomologyOnly (negative answers are sound).
CellRecognition recognize_ball_or_sphere(const Fan& fan, const Subfan& sub, int k);

struct SemishellingStep {
  std::size_t j = 0;
  Subfan intersection;
  int k = 0;
  CellType type = CellType::Ball;
  Confidence confidence = Confidence::Exact;
};

struct SemishellingCertificate {
  std::vector<ConeId> facet_order;
  std::vector<SemishellingStep> steps;
  bool exact() const;
};

struct SemishellingResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<SemishellingCertificate> certificate;
  std::string reason;
  std::size_t nodes = 0;
};

/// With `order`, checks that ordering; otherwise searches all orderings.
SemishellingResult semishellability_check(const Fan& fan,
                                          const std::optional<std::vector<ConeId>>& order = std::nullopt,
                                          const SearchBudget& budget = {});

/// CM verdict for a pure semishellable fan; expected to be true.
bool semishellable_implies_cm_check(const Fan& fan, const SemishellingCertificate& cert,
                                    const FieldSpec& field);

struct StepIdealReport {
  std::size_t j = 0;
  Subfan intersection;
  bool cohen_macaulay = false;
  std::optional<CanonicalIdealResult> canonical;  // sigma_prime in parent ids
  bool omega_support_consistent = false;
  bool ok() const;
};

std::vector<StepIdealReport> step_ideal_report(const Fan& fan, const SemishellingCertificate& cert,
                                               const FieldSpec& field, const BoxSpec& box);

// ---------------------------------------------------------------------------
// Cleanness

struct CleanWitness {
  std::vector<ConeId> facet_order;
  std::vector<LatticeVector> gammas;  // gammas[j-2], j = 2..s
  long box_radius = 0;
};

struct CleanResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<CleanWitness> witness;
  std::optional<ShellingCertificate> shelling;  // the shelling underlying the witness
  long box_radius = 0;
  std::size_t nodes = 0;
  std::string reason;
};

/// Searches shellings together with lattice points γ_j ∈ C_j ∩ box satisfying
/// the star condition exactly and the translate condition on the box.
CleanResult cleanness_check(const Fan& fan, const BoxSpec& box, const SearchBudget& budget = {});

/// Tests whether γ works for facet `next` after `earlier` (both clauses).
bool clean_gamma_ok(const Fan& fan, const std::vector<ConeId>& earlier, ConeId next,
                    const LatticeVector& gamma, const BoxSpec& box);

struct CleanConsequenceStep {
  std::size_t j = 0;
  Subfan omega;  // ⋃_{l > r_j} fan(D_l)
  bool empty = true;
  std::optional<GorensteinResult> gorenstein;
  Subfan lambda;            // Ω_j ∩ Π_j
  Subfan omega_boundary;    // boundary_subfan(Ω_j), parent ids
  bool lambda_matches = false;
  bool ok() const;
};

std::vector<CleanConsequenceStep> clean_consequence_check(const Fan& fan, const CleanResult& clean,
                                                          const FieldSpec& field, const BoxSpec& box);

}  // namespace toricfan
