// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "corpus.hpp"
#include "oracles.hpp"
#include "toricfan/document.hpp"
#include "toricfan/error.hpp"
#include "toricfan/report.hpp"
#include "toricfan/shelling.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace toricfan;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF3 = FieldSpec::prime(3);

LatticeVector v(std::initializer_list<long> c) { return make_vector(c); }

long as_long(const Integer& x) { return x.get_si(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few violations.
struct Tally {
  long checks = 0;
  long violations = 0;
  std::ostringstream first;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (violations++ < 3) first << (violations > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.pass = violations == 0;
    o.detail = summary + ", " + std::to_string(checks) + " checks, " + std::to_string(violations) + " violations";
    if (!o.pass) o.detail += " [" + first.str() + "]";
    return o;
  }
};

Outcome shellable_not_clean() {
  Tally t;
  auto doc = parse_fan(R"({"ambient_dim": 2, "rays": [[0,1],[2,1],[-2,1]], "maximal_cones": [[0,1],[0,2]]})");
  auto sh = shellability_search(doc.fan);
  t.expect(sh.verdict == Verdict::Yes && sh.certificate.has_value(), "no shelling certificate");
  if (sh.certificate) t.expect(verify_shelling(doc.fan, *sh.certificate), "certificate does not verify");
  RunOptions o;
  auto rep = run_command("shelling", doc, o).report;
  t.expect(rep["results"]["shelling"]["verdict"] == "Shellable", "report verdict");
  t.expect(rep["results"]["shelling"].contains("certificate"), "report lacks certificate");
  o.box_radius = 6;
  auto cl = run_command("clean", doc, o).report;
  t.expect(cl["results"]["clean"]["verdict"] == "NotClean", "clean --box 6 is not NotClean");
  return t.outcome("shellable with certificate, NotClean at box 6");
}

Outcome characteristic_dependence() {
  Tally t;
  Fan f = corpus::rp2();
  std::vector<oracle::Simplex> facets;
  for (const auto& s : corpus::rp2_facets()) facets.push_back(s);
  auto q = is_cohen_macaulay(f, kQ);
  auto two = is_cohen_macaulay(f, kF2);
  t.expect(q.cohen_macaulay, "not CM over Q");
  t.expect(!two.cohen_macaulay, "CM over F_2");
  t.expect(two.failing_cone == ConeId{0} && two.failing_degree == 1, "F_2 failure not at (0, 1)");
  auto oq = oracle::link_cm(facets, 0);
  auto o2 = oracle::link_cm(facets, 2);
  t.expect(oq.cohen_macaulay, "oracle: not CM over Q");
  t.expect(!o2.cohen_macaulay && o2.face.empty() && o2.degree == 1, "oracle: F_2 failure not at empty face, degree 1");
  return t.outcome("Q: CM, F_2: fails at (C=0, i=1), link-homology oracle agrees");
}

Outcome euler_gorenstein_closed() {
  Tally t;
  Fan f = corpus::square_boundary();
  t.expect(is_euler_fan(f).euler, "not Euler");
  auto g = gorenstein_check(f, kQ, BoxSpec(2));
  t.expect(g.verdict == GorensteinResult::Verdict::Gorenstein && g.witness && g.witness->sigma == v({0, 0, 0}),
           "not Gorenstein with sigma = 0");
  t.expect(canonical_ideal_subfan(f, kQ).kind == CanonicalIdealResult::Kind::EulerSelf, "not EulerSelf");
  auto om = omega_hilbert(f, kQ, BoxSpec(2));
  for (long x = -2; x <= 2; ++x)
    for (long y = -2; y <= 2; ++y)
      for (long z = -2; z <= 2; ++z) {
        const long expect = z >= 0 && std::max(std::abs(x), std::abs(y)) == z ? 1 : 0;
        t.expect(om.at(v({x, y, z})) == expect, "omega at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                                    std::to_string(z) + ")");
      }
  return t.outcome("square boundary: Euler, sigma = 0, EulerSelf, omega = support indicator on R=2");
}

Outcome ball_case() {
  Tally t;
  Fan f = corpus::half_plane();
  auto ci = canonical_ideal_subfan(f, kQ);
  Subfan expected = face_closure(f, {f.id_of(cone_of({v({1, 0})})), f.id_of(cone_of({v({-1, 0})}))});
  t.expect(ci.kind == CanonicalIdealResult::Kind::IdealSubfan, "not IdealSubfan");
  t.expect(ci.sigma_prime == expected, "sigma' is not the closure of the two boundary rays");
  t.expect(boundary_subfan(f) == expected, "boundary_subfan differs");
  auto om = omega_hilbert(f, kQ, BoxSpec(3));
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y) t.expect(om.at(v({x, y})) == (y > 0 ? 1 : 0), "omega at " + std::to_string(x) + "," + std::to_string(y));
  auto d = manifold_boundary_duality_check(f, kQ);
  t.expect(d.applicable && d.boundary_euler && d.boundary_cm && d.canonical_matches && d.agreement,
           "boundary duality disagreement");
  return t.outcome("half-plane: IdealSubfan(boundary), omega = 1 on y > 0, duality agrees");
}

Outcome duality_slice() {
  Tally t;
  const BoxSpec box(3);
  long fans = 0;
  for (const auto& e : corpus::full()) {
    const Fan& f = e.fan;
    auto prof = cohomology_profile(f, kQ);
    if (!is_cohen_macaulay(f, prof).cohen_macaulay) continue;
    ++fans;
    auto om = omega_hilbert(f, prof, box);
    auto lc = local_cohomology_hilbert(f, prof, static_cast<int>(f.dim()), box);
    box.for_each_point(f.ambient_dim(), [&](const LatticeVector& a) {
      t.expect(om.at(a) == lc.at(negate(a)), e.label);
    });
  }
  return t.outcome(std::to_string(fans) + " CM corpus fans on R=3");
}

Outcome euler_characteristic() {
  Tally t;
  for (const auto& e : corpus::full()) {
    const Fan& f = e.fan;
    for (const auto& field : {kQ, kF2}) {
      for (ConeId c = 0; c < f.size(); ++c) {
        // f-vector count over the star, done here by hand
        long count = 0;
        for (ConeId d = 0; d < f.size(); ++d) {
          if (f.is_face_of(c, d)) count += f.cone_dim(d) % 2 == 1 ? 1 : -1;
        }
        t.expect(count == rho(f, c), e.label + ": rho");
        t.expect(count == star_cohomology(f, c, field).alternating_sum(), e.label + " over " + field.name());
      }
    }
  }
  return t.outcome(std::to_string(corpus::full().size()) + " corpus fans, every cone, Q and F_2");
}

Outcome join_oracle() {
  Tally t;
  long hits = 0;
  for (const auto& e : corpus::full()) {
    const Fan& f = e.fan;
    auto prof = cohomology_profile(f, kQ);
    if (!is_cohen_macaulay(f, prof).cohen_macaulay) continue;
    auto ci = canonical_ideal_subfan(f, prof);
    if (ci.kind != CanonicalIdealResult::Kind::IdealSubfan) continue;
    ++hits;
    t.expect(cross_validate_via_join(f, ci.sigma_prime, kQ).passed(), e.label);
  }
  return t.outcome(std::to_string(hits) + " IdealSubfan fans");
}

Outcome implication_suite() {
  Tally t;
  const BoxSpec box(2);
  long shellable = 0, semi = 0, clean = 0;
  for (const auto& e : corpus::full()) {
    const Fan& f = e.fan;
    const std::string& l = e.label;
    auto sh = shellability_search(f);
    t.expect(sh.verdict != Verdict::Unknown, l + ": shelling Unknown");
    if (sh.verdict == Verdict::Yes) {
      ++shellable;
      auto s = semishellability_check(f, sh.certificate->facet_order);
      t.expect(s.verdict == Verdict::Yes, l + ": shellable but not semishellable");
    }
    auto ss = semishellability_check(f);
    t.expect(ss.verdict != Verdict::Unknown, l + ": semishelling Unknown");
    if (ss.verdict == Verdict::Yes) {
      ++semi;
      const auto& cert = *ss.certificate;
      if (f.pure() && cert.exact()) {
        for (const auto& field : {kQ, kF2, kF3}) {
          t.expect(semishellable_implies_cm_check(f, cert, field), l + ": semishellable, not CM over " + field.name());
        }
      }
      if (cert.exact()) {
        for (const auto& r : step_ideal_report(f, cert, kQ, box)) t.expect(r.ok(), l + ": step ideal " + std::to_string(r.j));
      }
    }
    auto cl = cleanness_check(f, box);
    t.expect(cl.verdict != Verdict::Unknown, l + ": clean Unknown");
    if (cl.verdict == Verdict::Yes) {
      ++clean;
      t.expect(sh.verdict == Verdict::Yes, l + ": clean but not shellable");
      for (const auto& step : clean_consequence_check(f, cl, kQ, box)) {
        const bool gor = step.empty || (step.gorenstein && step.gorenstein->verdict == GorensteinResult::Verdict::Gorenstein);
        t.expect(gor, l + ": Omega_" + std::to_string(step.j) + " neither empty nor Gorenstein");
        t.expect(step.ok(), l + ": consequence step " + std::to_string(step.j));
      }
    }
  }
  return t.outcome(std::to_string(corpus::full().size()) + " fans (" + std::to_string(shellable) + " shellable, " +
                   std::to_string(semi) + " semishellable, " + std::to_string(clean) + " clean)");
}

Outcome polynomial_ring() {
  Tally t;
  Fan f = corpus::single_ray();
  auto h1 = local_cohomology_hilbert(f, kQ, 1, BoxSpec(5));
  for (long a = -5; a <= 5; ++a) {
    t.expect(h1.at(v({a})) == oracle::cech_h1_univariate(a), "H^1 at " + std::to_string(a));
    t.expect(h1.at(v({a})) == (a < 0 ? 1 : 0), "H^1 closed form at " + std::to_string(a));
  }
  auto g = gorenstein_check(f, kQ, BoxSpec(5));
  t.expect(g.verdict == GorensteinResult::Verdict::Gorenstein && g.witness && as_long(g.witness->sigma[0]) == 1,
           "not Gorenstein with sigma = 1");
  auto ci = canonical_ideal_subfan(f, kQ);
  t.expect(ci.kind == CanonicalIdealResult::Kind::IdealSubfan && ci.sigma_prime.ids == ConeIdSet{0},
           "canonical ideal is not IdealSubfan({0})");
  return t.outcome("K[x]: Cech oracle on [-5,5], sigma = 1, IdealSubfan({0})");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"shellable but not clean", shellable_not_clean},
      {"characteristic dependence", characteristic_dependence},
      {"Euler/Gorenstein closed case", euler_gorenstein_closed},
      {"ball case", ball_case},
      {"local duality slice", duality_slice},
      {"Euler characteristic cross-check", euler_characteristic},
      {"join oracle", join_oracle},
      {"implication suite", implication_suite},
      {"classical sanity", polynomial_ring},
  };
  // build the corpus up front so its cost is not charged to one criterion
  corpus::full();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 10.0) {
      o.pass = false;
      o.detail += ", over the 10 s limit";
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu: %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
