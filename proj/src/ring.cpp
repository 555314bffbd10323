#include "toricfan/ring.hpp"

#include "toricfan/error.hpp"

#include <algorithm>

namespace toricfan {

CmResult is_cohen_macaulay(const Fan& fan, const CohomologyProfile& profile) {
  CmResult r;
  const int limit = static_cast<int>(fan.dim()) - 1;
  for (ConeId c = 0; c < fan.size(); ++c) {
    const auto& v = profile.per_cone.at(c);
    for (int i = v.low; i < limit; ++i) {
      if (v.at(i) != 0) {
        r.cohen_macaulay = false;
        r.failing_cone = c;
        r.failing_degree = i;
        return r;
      }
    }
  }
  return r;
}

CmResult is_cohen_macaulay(const Fan& fan, const FieldSpec& field) {
  return is_cohen_macaulay(fan, cohomology_profile(fan, field));
}

long GradedHilbertSlice::at(const LatticeVector& a) const {
  auto it = values.find(a);
  return it == values.end() ? 0 : it->second;
}

namespace {

void require_cm(const Fan& fan, const CohomologyProfile& profile, const char* what) {
  auto cm = is_cohen_macaulay(fan, profile);
  if (!cm.cohen_macaulay) {
    throw Error(ErrorCode::NotCohenMacaulay,
                std::string(what) + ": K[Σ] is not Cohen-Macaulay over " + profile.field.name() +
                    " (cone " + fan.describe(*cm.failing_cone) + ", degree " +
                    std::to_string(cm.failing_degree) + ")");
  }
}

}  // namespace

GradedHilbertSlice omega_hilbert(const Fan& fan, const CohomologyProfile& profile, const BoxSpec& box) {
  require_cm(fan, profile, "omega_hilbert");
  GradedHilbertSlice slice{box, {}};
  const int top = static_cast<int>(fan.dim()) - 1;
  for (ConeId c = 0; c < fan.size(); ++c) {
    long t = profile.at(c, top);
    if (t == 0) continue;
    for (auto& a : lattice_points(fan.cone(c), box, true)) slice.values.emplace(std::move(a), t);
  }
  return slice;
}

GradedHilbertSlice omega_hilbert(const Fan& fan, const FieldSpec& field, const BoxSpec& box) {
  return omega_hilbert(fan, cohomology_profile(fan, field), box);
}

GradedHilbertSlice local_cohomology_hilbert(const Fan& fan, const CohomologyProfile& profile, int i,
                                            const BoxSpec& box) {
  if (i < 0 || i > static_cast<int>(fan.dim())) {
    throw Error(ErrorCode::InvalidArgument, "local cohomology index must lie in [0, dim Σ]");
  }
  GradedHilbertSlice slice{box, {}};
  for (ConeId c = 0; c < fan.size(); ++c) {
    long v = profile.at(c, i - 1);
    if (v == 0) continue;
    for (const auto& a : lattice_points(fan.cone(c), box, true)) slice.values.emplace(negate(a), v);
  }
  return slice;
}

GradedHilbertSlice local_cohomology_hilbert(const Fan& fan, const FieldSpec& field, int i,
                                            const BoxSpec& box) {
  return local_cohomology_hilbert(fan, cohomology_profile(fan, field), i, box);
}

// ---------------------------------------------------------------------------
// Gorenstein

const char* to_string(GorensteinResult::Verdict v) {
  switch (v) {
    case GorensteinResult::Verdict::Gorenstein: return "Gorenstein";
    case GorensteinResult::Verdict::NotCohenMacaulay: return "NotCohenMacaulay";
    case GorensteinResult::Verdict::NoSigmaInBox: return "NoSigmaInBox";
  }
  return "?";
}

GorensteinResult gorenstein_check(const Fan& fan, const FieldSpec& field, const BoxSpec& box) {
  GorensteinResult result;
  result.box_radius = box.radius();
  auto profile = cohomology_profile(fan, field);
  result.cm = is_cohen_macaulay(fan, profile);
  if (!result.cm.cohen_macaulay) {
    result.verdict = GorensteinResult::Verdict::NotCohenMacaulay;
    return result;
  }

  Cone common = fan.cone(fan.facets().front());
  for (auto f : fan.facets()) common = intersect_cones(common, fan.cone(f));

  const long target = fan.dim() % 2 == 1 ? 1 : -1;
  std::vector<long> rhos;
  for (ConeId c = 0; c < fan.size(); ++c) rhos.push_back(rho(fan, c));

  for (const auto& sigma : lattice_points(common, box, false)) {
    GorensteinWitness w;
    w.sigma = sigma;
    w.condition_i.box_radius = box.radius();
    Star st = star_of_point(fan, sigma);
    std::vector<bool> in_star(fan.size(), false);
    for (auto m : st.members) in_star[m] = true;

    w.condition_ii_ok = true;
    for (ConeId c = 0; c < fan.size(); ++c) {
      RhoVerdict v;
      v.cone = c;
      v.rho = rhos[c];
      v.in_star = in_star[c];
      v.expected = in_star[c] ? target : 0;
      v.ok = v.rho == v.expected;
      if (!v.ok) w.condition_ii_ok = false;
      w.condition_ii.push_back(v);
    }

    if (w.condition_ii_ok) {
      // ⋃_{D ∈ str(σ)} relint(D) ∩ Z^d  =  σ + Supp(K[Σ])   on the box
      w.condition_i.evaluated = true;
      w.condition_i.verified = true;
      box.for_each_point(fan.ambient_dim(), [&](const LatticeVector& x) {
        if (!w.condition_i.verified) return;
        auto home = fan.relint_cone_of(x);
        bool lhs = home && in_star[*home];
        bool rhs = fan.support_contains(subtract(x, sigma));
        if (lhs != rhs) {
          w.condition_i.verified = false;
          w.condition_i.failed_at = x;
        }
      });
    }

    if (w.condition_ii_ok && w.condition_i.verified) {
      result.verdict = GorensteinResult::Verdict::Gorenstein;
      result.witness = std::move(w);
      return result;
    }
    result.rejected.push_back(std::move(w));
  }
  result.verdict = GorensteinResult::Verdict::NoSigmaInBox;
  return result;
}

// ---------------------------------------------------------------------------
// Canonical module as an ideal

const char* to_string(CanonicalIdealResult::Kind k) {
  switch (k) {
    case CanonicalIdealResult::Kind::EulerSelf: return "EulerSelf";
    case CanonicalIdealResult::Kind::IdealSubfan: return "IdealSubfan";
    case CanonicalIdealResult::Kind::NoGradedEmbedding: return "NoGradedEmbedding";
  }
  return "?";
}

CanonicalIdealResult canonical_ideal_subfan(const Fan& fan, const CohomologyProfile& profile) {
  require_cm(fan, profile, "canonical_ideal_subfan");
  CanonicalIdealResult r;
  const int top = static_cast<int>(fan.dim()) - 1;
  bool all_one = true;
  ConeIdSet zeros;
  for (ConeId c = 0; c < fan.size(); ++c) {
    long t = profile.at(c, top);
    r.top_cohomology.push_back(t);
    if (t != 1) all_one = false;
    if (t == 0) zeros.push_back(c);
    if (t > 1 && r.reason.empty()) {
      r.reason = "top star cohomology of " + fan.describe(c) + " has dimension " + std::to_string(t);
    }
  }
  if (all_one) {
    r.kind = CanonicalIdealResult::Kind::EulerSelf;
    return r;
  }
  r.kind = CanonicalIdealResult::Kind::NoGradedEmbedding;
  if (!r.reason.empty()) return r;

  if (!is_face_closed(fan, zeros)) {
    r.reason = "cones with vanishing top star cohomology are not closed under faces";
    return r;
  }
  Subfan candidate{zeros};
  if (subfan_dim(fan, candidate) != static_cast<long>(fan.dim()) - 1) {
    r.reason = "candidate subfan has dimension " + std::to_string(subfan_dim(fan, candidate)) +
               ", expected " + std::to_string(static_cast<long>(fan.dim()) - 1);
    return r;
  }
  Fan sub = subfan_as_fan(fan, candidate);
  if (!is_euler_fan(sub).euler) {
    r.reason = "candidate subfan is not Euler";
    return r;
  }
  auto sub_cm = is_cohen_macaulay(sub, profile.field);
  if (!sub_cm.cohen_macaulay) {
    r.reason = "candidate subfan is not Cohen-Macaulay over " + profile.field.name();
    return r;
  }
  r.kind = CanonicalIdealResult::Kind::IdealSubfan;
  r.sigma_prime = std::move(candidate);
  return r;
}

CanonicalIdealResult canonical_ideal_subfan(const Fan& fan, const FieldSpec& field) {
  return canonical_ideal_subfan(fan, cohomology_profile(fan, field));
}

// ---------------------------------------------------------------------------

BoundaryDualityReport manifold_boundary_duality_check(const Fan& fan, const FieldSpec& field) {
  if (!fan.pure()) throw Error(ErrorCode::NotPure, "boundary duality check needs a pure fan");
  auto profile = cohomology_profile(fan, field);
  require_cm(fan, profile, "manifold_boundary_duality_check");

  BoundaryDualityReport rep;
  if (fan.dim() == 0) {
    rep.reason = "fan of dimension 0 has no boundary";
    return rep;
  }
  rep.boundary = boundary_subfan(fan);
  if (rep.boundary.empty()) {
    rep.reason = "no boundary: every codimension-one cone lies in two or more facets";
    return rep;
  }
  rep.applicable = true;

  const int top = static_cast<int>(fan.dim()) - 1;
  rep.manifold_like = true;
  for (ConeId c = 1; c < fan.size(); ++c) {
    const auto& v = profile.per_cone[c];
    for (int i = v.low; i <= v.high(); ++i) {
      if (i != top && v.at(i) != 0) rep.manifold_like = false;
    }
    long t = v.at(top);
    if (t > 1 || (t == 0) != rep.boundary.contains(c)) rep.manifold_like = false;
  }

  Fan boundary_fan = subfan_as_fan(fan, rep.boundary);
  rep.boundary_euler = is_euler_fan(boundary_fan).euler;
  rep.boundary_cm = is_cohen_macaulay(boundary_fan, field).cohen_macaulay;
  rep.canonical = canonical_ideal_subfan(fan, profile);
  rep.canonical_matches = rep.canonical.kind == CanonicalIdealResult::Kind::IdealSubfan &&
                          rep.canonical.sigma_prime == rep.boundary;
  rep.agreement = (rep.boundary_euler && rep.boundary_cm) == rep.canonical_matches;
  return rep;
}

JoinValidation cross_validate_via_join(const Fan& fan, const Subfan& sigma_prime, const FieldSpec& field) {
  if (!is_face_closed(fan, sigma_prime.ids) || sigma_prime.empty()) {
    throw Error(ErrorCode::InvalidArgument, "cross_validate_via_join: not a non-empty subfan");
  }
  LatticeVector w = unit_vector(fan.ambient_dim() + 1, fan.ambient_dim());
  Fan pi = join_fan(w, sigma_prime, fan);
  JoinValidation v;
  v.cone_count = pi.size();
  v.cohen_macaulay = is_cohen_macaulay(pi, field).cohen_macaulay;
  v.euler = is_euler_fan(pi).euler;
  return v;
}

}  // namespace toricfan
