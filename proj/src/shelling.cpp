#include "toricfan/shelling.hpp"

#include "toricfan/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace toricfan {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(CellType t) { return t == CellType::Ball ? "Ball" : "Sphere"; }
const char* to_string(Confidence c) { return c == Confidence::Exact ? "Exact" : "HomologyOnly"; }

Subfan prefix_intersection(const Fan& fan, const std::vector<ConeId>& earlier, ConeId next) {
  Subfan pi;
  for (auto d : fan.faces_of(next)) {
    for (auto c : earlier) {
      if (fan.is_face_of(d, c)) {
        pi.ids.push_back(d);
        break;
      }
    }
  }
  return pi;
}

namespace {

struct BudgetExhausted {};

class NodeCounter {
 public:
  explicit NodeCounter(std::size_t limit) : limit_(limit) {}
  void tick() {
    if (++used_ > limit_) throw BudgetExhausted{};
  }
  std::size_t used() const { return used_; }

 private:
  std::size_t used_ = 0;
  std::size_t limit_;
};

using StepPredicate = std::function<bool(const std::vector<ConeId>& earlier, ConeId next)>;

// Depth-first search for an ordering of `items` whose first |prefix| entries
// are exactly the members of `prefix`. Step admissibility may only depend on
// the set of earlier items, which makes failed sets safe to memoize.
std::optional<std::vector<ConeId>> find_ordering(const ConeIdSet& items, const ConeIdSet& prefix,
                                                 const StepPredicate& ok, NodeCounter& nodes) {
  std::vector<ConeId> order;
  std::vector<bool> used(items.size(), false);
  std::set<std::vector<bool>> dead;

  std::function<bool()> dfs = [&]() -> bool {
    if (order.size() == items.size()) return true;
    if (dead.count(used)) return false;
    const bool prefix_phase = order.size() < prefix.size();
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (used[i]) continue;
      const bool in_prefix = std::binary_search(prefix.begin(), prefix.end(), items[i]);
      if (in_prefix != prefix_phase) continue;
      nodes.tick();
      if (!ok(order, items[i])) continue;
      used[i] = true;
      order.push_back(items[i]);
      if (dfs()) return true;
      order.pop_back();
      used[i] = false;
    }
    dead.insert(used);
    return false;
  };
  if (dfs()) return order;
  return std::nullopt;
}

ConeIdSet boundary_facets(const Fan& fan, ConeId c) {
  ConeIdSet out;
  const std::size_t d = fan.cone_dim(c);
  if (d == 0) return out;
  for (auto f : fan.faces_of(c)) {
    if (fan.cone_dim(f) + 1 == d) out.push_back(f);
  }
  return out;
}

class ShellingSearcher {
 public:
  ShellingSearcher(const Fan& fan, NodeCounter& nodes) : fan_(fan), nodes_(nodes) {}

  // Facets of ∂C lying in Π_j, when Π_j is exactly their union.
  std::optional<ConeIdSet> step_prefix(const std::vector<ConeId>& earlier, ConeId next) const {
    Subfan pi = prefix_intersection(fan_, earlier, next);
    ConeIdSet inside;
    for (auto f : boundary_facets(fan_, next)) {
      if (pi.contains(f)) inside.push_back(f);
    }
    if (inside.empty()) return std::nullopt;
    if (face_closure(fan_, inside).ids != pi.ids) return std::nullopt;
    return inside;
  }

  std::shared_ptr<const ShellingCertificate> boundary(ConeId c, const ConeIdSet& prefix) {
    auto key = std::make_pair(c, prefix);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto cert = shell(boundary_facets(fan_, c), fan_.cone_dim(c) - 1, prefix, nullptr);
    memo_.emplace(std::move(key), cert);
    return cert;
  }

  std::shared_ptr<const ShellingCertificate> shell(const ConeIdSet& facets, std::size_t dim,
                                                   const ConeIdSet& prefix, const StepPredicate* extra) {
    if (dim == 0) {
      auto cert = std::make_shared<ShellingCertificate>();
      cert->facet_order = facets;
      return cert;
    }
    StepPredicate ok = [&](const std::vector<ConeId>& earlier, ConeId next) {
      if (earlier.empty()) {
        if (!boundary(next, {})) return false;
      } else {
        auto inside = step_prefix(earlier, next);
        if (!inside || !boundary(next, *inside)) return false;
      }
      return extra == nullptr || (*extra)(earlier, next);
    };
    auto order = find_ordering(facets, prefix, ok, nodes_);
    if (!order) return nullptr;

    auto cert = std::make_shared<ShellingCertificate>();
    cert->facet_order = *order;
    cert->first_boundary = boundary(order->front(), {});
    std::vector<ConeId> earlier{order->front()};
    for (std::size_t j = 1; j < order->size(); ++j) {
      auto inside = step_prefix(earlier, (*order)[j]);
      cert->steps.push_back({boundary((*order)[j], *inside), inside->size()});
      earlier.push_back((*order)[j]);
    }
    return cert;
  }

 private:
  const Fan& fan_;
  NodeCounter& nodes_;
  std::map<std::pair<ConeId, ConeIdSet>, std::shared_ptr<const ShellingCertificate>> memo_;
};

bool verify_node(const Fan& fan, const ShellingCertificate& cert, const ConeIdSet& facets,
                 std::size_t dim) {
  ConeIdSet sorted = cert.facet_order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != facets) return false;
  if (dim == 0) return true;
  const ConeId first = cert.facet_order.front();
  if (!cert.first_boundary ||
      !verify_node(fan, *cert.first_boundary, boundary_facets(fan, first), fan.cone_dim(first) - 1)) {
    return false;
  }
  if (cert.steps.size() + 1 != cert.facet_order.size()) return false;
  std::vector<ConeId> earlier{first};
  for (std::size_t j = 1; j < cert.facet_order.size(); ++j) {
    const ConeId c = cert.facet_order[j];
    const auto& step = cert.steps[j - 1];
    if (!step.boundary) return false;
    if (!verify_node(fan, *step.boundary, boundary_facets(fan, c), fan.cone_dim(c) - 1)) return false;
    const auto& d = step.boundary->facet_order;
    if (step.prefix_length < 1 || step.prefix_length > d.size()) return false;
    ConeIdSet head(d.begin(), d.begin() + static_cast<long>(step.prefix_length));
    Subfan pi = prefix_intersection(fan, earlier, c);
    if (pi.empty() || face_closure(fan, head).ids != pi.ids) return false;
    earlier.push_back(c);
  }
  return true;
}

}  // namespace

ShellingResult shellability_search(const Fan& fan, const SearchBudget& budget) {
  NodeCounter nodes(budget.max_nodes);
  ShellingSearcher searcher(fan, nodes);
  ShellingResult result;
  try {
    auto cert = searcher.shell(fan.facets(), fan.dim(), {}, nullptr);
    result.verdict = cert ? Verdict::Yes : Verdict::No;
    if (cert) result.certificate = *cert;
  } catch (const BudgetExhausted&) {
    result.verdict = Verdict::Unknown;
  }
  result.nodes = nodes.used();
  return result;
}

bool verify_shelling(const Fan& fan, const ShellingCertificate& cert) {
  return verify_node(fan, cert, fan.facets(), fan.dim());
}

// ---------------------------------------------------------------------------
// Ball / sphere recognition

namespace {

bool homology_sphere(const CohomologyProfile& prof, int k) {
  const auto& global = prof.per_cone.front();
  for (int i = global.low; i <= global.high(); ++i) {
    if (global.at(i) != (i == k ? 1 : 0)) return false;
  }
  for (std::size_t c = 1; c < prof.per_cone.size(); ++c) {
    const auto& v = prof.per_cone[c];
    for (int i = v.low; i <= v.high(); ++i) {
      if (v.at(i) != (i == k ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace

CellRecognition recognize_ball_or_sphere(const Fan& fan, const Subfan& sub, int k) {
  CellRecognition r;
  if (sub.empty()) {
    r.detail = "empty subfan";
    return r;
  }
  if (k == -1) {
    r.recognized = sub.ids == ConeIdSet{0};
    r.type = CellType::Sphere;
    r.detail = r.recognized ? "empty realization" : "realization is not empty";
    return r;
  }
  if (k < -1) {
    r.detail = "negative dimension";
    return r;
  }
  const long sub_dim = subfan_dim(fan, sub);
  if (sub_dim != k + 1) {
    r.detail = "realization has dimension " + std::to_string(sub_dim - 1);
    return r;
  }
  for (auto f : subfan_facets(fan, sub)) {
    if (static_cast<long>(fan.cone_dim(f)) != sub_dim) {
      r.detail = "realization is not pure";
      return r;
    }
  }

  ConeIdSet rays, edges;
  for (auto c : sub.ids) {
    if (fan.cone_dim(c) == 1) rays.push_back(c);
    if (fan.cone_dim(c) == 2) edges.push_back(c);
  }

  if (k == 0) {
    r.recognized = rays.size() == 1 || rays.size() == 2;
    r.type = rays.size() == 1 ? CellType::Ball : CellType::Sphere;
    r.detail = std::to_string(rays.size()) + " point(s)";
    return r;
  }

  if (k == 1) {
    std::map<ConeId, std::size_t> index;
    for (std::size_t i = 0; i < rays.size(); ++i) index[rays[i]] = i;
    std::vector<std::size_t> parent(rays.size()), degree(rays.size(), 0);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (auto e : edges) {
      std::vector<std::size_t> ends;
      for (auto f : fan.faces_of(e)) {
        if (fan.cone_dim(f) == 1) ends.push_back(index.at(f));
      }
      for (auto v : ends) ++degree[v];
      parent[root(ends[0])] = root(ends[1]);
    }
    std::set<std::size_t> components;
    for (std::size_t v = 0; v < rays.size(); ++v) components.insert(root(v));
    const bool connected = components.size() == 1;
    const bool all_two = std::all_of(degree.begin(), degree.end(), [](auto d) { return d == 2; });
    const bool at_most_two = std::all_of(degree.begin(), degree.end(), [](auto d) { return d <= 2; });
    if (connected && all_two) {
      r.recognized = true;
      r.type = CellType::Sphere;
      r.detail = "cycle";
    } else if (connected && at_most_two && edges.size() + 1 == rays.size()) {
      r.recognized = true;
      r.type = CellType::Ball;
      r.detail = "path";
    } else {
      r.detail = "graph is neither a path nor a cycle";
    }
    return r;
  }

  // k >= 2: homology over Q and F_2 plus the local (pseudomanifold) profile.
  r.confidence = Confidence::HomologyOnly;
  Fan realized = subfan_as_fan(fan, sub);
  const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime(2)};
  bool sphere = true;
  bool ball = true;
  for (const auto& field : fields) {
    auto prof = cohomology_profile(realized, field);
    if (!homology_sphere(prof, k)) sphere = false;
    const auto& global = prof.per_cone.front();
    for (int i = global.low; i <= global.high(); ++i) {
      if (global.at(i) != 0) ball = false;
    }
    for (ConeId c = 1; c < realized.size(); ++c) {
      const auto& v = prof.per_cone[c];
      for (int i = v.low; i <= v.high(); ++i) {
        if (i != k && v.at(i) != 0) ball = false;
      }
      if (v.at(k) > 1) ball = false;
    }
  }
  if (sphere) {
    r.recognized = true;
    r.type = CellType::Sphere;
    r.detail = "homology sphere";
    return r;
  }
  if (ball) {
    Subfan bd = boundary_subfan(realized);
    if (bd.empty()) {
      r.detail = "acyclic but without boundary";
      return r;
    }
    auto bd_rec = recognize_ball_or_sphere(realized, bd, k - 1);
    if (bd_rec.recognized && bd_rec.type == CellType::Sphere) {
      r.recognized = true;
      r.type = CellType::Ball;
      r.detail = "acyclic with spherical boundary";
      return r;
    }
    r.detail = "boundary is not a sphere";
    return r;
  }
  r.detail = "homology matches neither a ball nor a sphere";
  return r;
}

bool SemishellingCertificate::exact() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const SemishellingStep& s) { return s.confidence == Confidence::Exact; });
}

SemishellingResult semishellability_check(const Fan& fan, const std::optional<std::vector<ConeId>>& order,
                                          const SearchBudget& budget) {
  SemishellingResult result;
  std::map<std::pair<ConeIdSet, int>, CellRecognition> cache;
  auto recognize = [&](const Subfan& pi, int k) -> const CellRecognition& {
    auto key = std::make_pair(pi.ids, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, recognize_ball_or_sphere(fan, pi, k)).first;
    return it->second;
  };
  auto step_ok = [&](const std::vector<ConeId>& earlier, ConeId next) {
    if (earlier.empty() || fan.dim() == 0) return true;
    return recognize(prefix_intersection(fan, earlier, next), static_cast<int>(fan.cone_dim(next)) - 2)
        .recognized;
  };

  std::vector<ConeId> chosen;
  if (order) {
    ConeIdSet sorted = *order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != fan.facets()) {
      throw Error(ErrorCode::InvalidArgument, "semishelling order is not a permutation of the facets");
    }
    std::vector<ConeId> earlier;
    for (std::size_t j = 0; j < order->size(); ++j) {
      if (!step_ok(earlier, (*order)[j])) {
        result.verdict = Verdict::No;
        result.reason = "step " + std::to_string(j + 1) + ": intersection is neither a ball nor a sphere";
        return result;
      }
      earlier.push_back((*order)[j]);
    }
    chosen = *order;
  } else {
    NodeCounter nodes(budget.max_nodes);
    try {
      auto found = find_ordering(fan.facets(), {}, step_ok, nodes);
      result.nodes = nodes.used();
      if (!found) {
        result.verdict = Verdict::No;
        result.reason = "no facet ordering has ball or sphere intersections";
        return result;
      }
      chosen = *found;
    } catch (const BudgetExhausted&) {
      result.verdict = Verdict::Unknown;
      result.nodes = nodes.used();
      result.reason = "search budget exhausted";
      return result;
    }
  }

  SemishellingCertificate cert;
  cert.facet_order = chosen;
  if (fan.dim() > 0) {
    std::vector<ConeId> earlier{chosen.front()};
    for (std::size_t j = 1; j < chosen.size(); ++j) {
      SemishellingStep step;
      step.j = j + 1;
      step.intersection = prefix_intersection(fan, earlier, chosen[j]);
      step.k = static_cast<int>(fan.cone_dim(chosen[j])) - 2;
      const auto& rec = recognize(step.intersection, step.k);
      step.type = rec.type;
      step.confidence = rec.confidence;
      cert.steps.push_back(std::move(step));
      earlier.push_back(chosen[j]);
    }
  }
  result.verdict = Verdict::Yes;
  result.certificate = std::move(cert);
  return result;
}

bool semishellable_implies_cm_check(const Fan& fan, const SemishellingCertificate& cert,
                                    const FieldSpec& field) {
  if (!fan.pure()) throw Error(ErrorCode::NotPure, "semishelling CM check needs a pure fan");
  ConeIdSet sorted = cert.facet_order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != fan.facets()) throw Error(ErrorCode::InvalidArgument, "certificate does not match the fan");
  return is_cohen_macaulay(fan, field).cohen_macaulay;
}

bool StepIdealReport::ok() const {
  return cohen_macaulay && canonical &&
         canonical->kind != CanonicalIdealResult::Kind::NoGradedEmbedding && omega_support_consistent;
}

std::vector<StepIdealReport> step_ideal_report(const Fan& fan, const SemishellingCertificate& cert,
                                               const FieldSpec& field, const BoxSpec& box) {
  std::vector<StepIdealReport> out;
  for (const auto& step : cert.steps) {
    StepIdealReport rep;
    rep.j = step.j;
    rep.intersection = step.intersection;
    Fan pi = subfan_as_fan(fan, step.intersection);
    auto profile = cohomology_profile(pi, field);
    rep.cohen_macaulay = is_cohen_macaulay(pi, profile).cohen_macaulay;
    if (rep.cohen_macaulay) {
      auto canonical = canonical_ideal_subfan(pi, profile);
      if (canonical.kind != CanonicalIdealResult::Kind::NoGradedEmbedding) {
        // ω must be supported exactly on |Π| \ |Σ'|, with multiplicity one.
        auto omega = omega_hilbert(pi, profile, box);
        std::map<LatticeVector, long> expected;
        for (ConeId c = 0; c < pi.size(); ++c) {
          if (canonical.sigma_prime.contains(c)) continue;
          for (auto& a : lattice_points(pi.cone(c), box, true)) expected.emplace(std::move(a), 1);
        }
        rep.omega_support_consistent = omega.values == expected;
      }
      canonical.sigma_prime = lift_subfan(fan, pi, canonical.sigma_prime);
      rep.canonical = std::move(canonical);
    }
    out.push_back(std::move(rep));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cleanness

namespace {

class GammaFinder {
 public:
  GammaFinder(const Fan& fan, const BoxSpec& box) : fan_(fan), box_(box) {}

  std::optional<LatticeVector> find(const std::vector<ConeId>& earlier, ConeId next) {
    ConeIdSet key_set(earlier.begin(), earlier.end());
    std::sort(key_set.begin(), key_set.end());
    auto key = std::make_pair(std::move(key_set), next);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::optional<LatticeVector> found;
    const auto& pts = points(next);
    for (std::size_t g = 0; g < pts.size() && !found; ++g) {
      if (works(earlier, next, pts[g])) found = pts[g];
    }
    memo_.emplace(std::move(key), found);
    return found;
  }

  bool works(const std::vector<ConeId>& earlier, ConeId next, const LatticeVector& gamma) {
    const Cone& c = fan_.cone(next);
    if (!c.contains(gamma)) return false;
    Subfan pi = prefix_intersection(fan_, earlier, next);
    ConeIdSet target;
    for (auto d : fan_.faces_of(next)) {
      if (!pi.contains(d)) target.push_back(d);
    }
    // (a) str_{fan(C)}(γ) = fan(C) \ Π
    ConeIdSet star_gamma;
    for (auto d : fan_.faces_of(next)) {
      if (fan_.cone(d).contains(gamma)) star_gamma.push_back(d);
    }
    if (star_gamma != target) return false;
    // (b) ⋃_{D ∈ str(γ)} relint(D) ∩ Z^d = γ + C ∩ Z^d, on C ∩ box
    const auto& pts = points(next);
    const auto& homes = homes_.at(next);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      bool lhs = std::binary_search(star_gamma.begin(), star_gamma.end(), homes[i]);
      bool rhs = c.contains(subtract(pts[i], gamma));
      if (lhs != rhs) return false;
    }
    return true;
  }

 private:
  const std::vector<LatticeVector>& points(ConeId c) {
    auto it = points_.find(c);
    if (it != points_.end()) return it->second;
    auto pts = graded_lattice_points(fan_.cone(c), box_);
    std::vector<ConeId> homes;
    for (const auto& p : pts) {
      ConeId home = c;
      for (auto d : fan_.faces_of(c)) {
        if (fan_.cone(d).relint_contains(p)) {
          home = d;
          break;
        }
      }
      homes.push_back(home);
    }
    homes_.emplace(c, std::move(homes));
    return points_.emplace(c, std::move(pts)).first->second;
  }

  const Fan& fan_;
  BoxSpec box_;
  std::map<ConeId, std::vector<LatticeVector>> points_;
  std::map<ConeId, std::vector<ConeId>> homes_;
  std::map<std::pair<ConeIdSet, ConeId>, std::optional<LatticeVector>> memo_;
};

}  // namespace

bool clean_gamma_ok(const Fan& fan, const std::vector<ConeId>& earlier, ConeId next,
                    const LatticeVector& gamma, const BoxSpec& box) {
  GammaFinder finder(fan, box);
  return finder.works(earlier, next, gamma);
}

CleanResult cleanness_check(const Fan& fan, const BoxSpec& box, const SearchBudget& budget) {
  CleanResult result;
  result.box_radius = box.radius();
  NodeCounter nodes(budget.max_nodes);
  ShellingSearcher searcher(fan, nodes);
  GammaFinder finder(fan, box);
  StepPredicate with_gamma = [&](const std::vector<ConeId>& earlier, ConeId next) {
    return earlier.empty() || finder.find(earlier, next).has_value();
  };
  try {
    auto cert = searcher.shell(fan.facets(), fan.dim(), {}, &with_gamma);
    result.nodes = nodes.used();
    if (!cert) {
      result.verdict = Verdict::No;
      result.reason = "no shelling admits lattice points γ_j in the box of radius " +
                      std::to_string(box.radius());
      return result;
    }
    CleanWitness w;
    w.facet_order = cert->facet_order;
    w.box_radius = box.radius();
    std::vector<ConeId> earlier;
    for (std::size_t j = 0; j < cert->facet_order.size(); ++j) {
      if (j > 0) w.gammas.push_back(*finder.find(earlier, cert->facet_order[j]));
      earlier.push_back(cert->facet_order[j]);
    }
    result.verdict = Verdict::Yes;
    result.witness = std::move(w);
    result.shelling = *cert;
  } catch (const BudgetExhausted&) {
    result.verdict = Verdict::Unknown;
    result.nodes = nodes.used();
    result.reason = "search budget exhausted";
  }
  return result;
}

bool CleanConsequenceStep::ok() const {
  return empty || (gorenstein && gorenstein->verdict == GorensteinResult::Verdict::Gorenstein &&
                   lambda_matches);
}

std::vector<CleanConsequenceStep> clean_consequence_check(const Fan& fan, const CleanResult& clean,
                                                          const FieldSpec& field, const BoxSpec& box) {
  if (clean.verdict != Verdict::Yes || !clean.shelling || !clean.witness) {
    throw Error(ErrorCode::InvalidArgument, "clean_consequence_check needs a clean witness");
  }
  const auto& cert = *clean.shelling;
  std::vector<CleanConsequenceStep> out;
  std::vector<ConeId> earlier;
  if (!cert.facet_order.empty()) earlier.push_back(cert.facet_order.front());
  for (std::size_t j = 1; j < cert.facet_order.size(); ++j) {
    const ConeId c = cert.facet_order[j];
    const auto& step = cert.steps.at(j - 1);
    const auto& d = step.boundary->facet_order;
    CleanConsequenceStep rep;
    rep.j = j + 1;
    ConeIdSet tail(d.begin() + static_cast<long>(step.prefix_length), d.end());
    rep.empty = tail.empty();
    if (!rep.empty) {
      rep.omega = face_closure(fan, tail);
      Subfan pi = prefix_intersection(fan, earlier, c);
      rep.lambda = subfan_intersection(rep.omega, pi);
      Fan omega_fan = subfan_as_fan(fan, rep.omega);
      rep.gorenstein = gorenstein_check(omega_fan, field, box);
      rep.omega_boundary = lift_subfan(fan, omega_fan, boundary_subfan(omega_fan));
      rep.lambda_matches = rep.lambda == rep.omega_boundary;
    }
    out.push_back(std::move(rep));
    earlier.push_back(c);
  }
  return out;
}

}  // namespace toricfan
