#include "toricfan/report.hpp"

#include "toricfan/error.hpp"
#include "toricfan/ring.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace toricfan {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "validate", "analyze",          "cohomology", "omega",        "localcoh", "gorenstein",
      "canonical-ideal", "boundary-duality", "shelling", "semishelling", "clean",    "all"};
  return names;
}

Report error_report(const std::string& code, const std::string& message) {
  Report r;
  r["error"] = {{"code", code}, {"message", message}};
  return r;
}

namespace {

Report cone_list(const Fan& fan, const ConeIdSet& ids) {
  Report a = Report::array();
  for (auto c : ids) a.push_back(fan.describe(c));
  return a;
}

const char* shelling_word(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Shellable";
    case Verdict::No: return "NotShellable";
    default: return "Unknown";
  }
}

const char* semishelling_word(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Semishellable";
    case Verdict::No: return "NotSemishellable";
    default: return "Unknown";
  }
}

const char* clean_word(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Clean";
    case Verdict::No: return "NotClean";
    default: return "Unknown";
  }
}

Report certificate_json(const Fan& fan, const ShellingCertificate& cert) {
  Report r;
  r["facet_order"] = cone_list(fan, cert.facet_order);
  if (cert.first_boundary) r["first_boundary"] = certificate_json(fan, *cert.first_boundary);
  if (!cert.steps.empty()) {
    Report steps = Report::array();
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
      Report s;
      s["j"] = i + 2;
      s["prefix_length"] = cert.steps[i].prefix_length;
      s["boundary"] = certificate_json(fan, *cert.steps[i].boundary);
      steps.push_back(std::move(s));
    }
    r["steps"] = std::move(steps);
  }
  return r;
}

Report slice_json(const GradedHilbertSlice& slice) {
  Report values = Report::array();
  for (const auto& [a, v] : slice.values) {
    if (v != 0) values.push_back({{"degree", to_string(a)}, {"dim", v}});
  }
  return values;
}

std::string box_note(long r) { return "box [-" + std::to_string(r) + "," + std::to_string(r) + "]^d"; }

class Runner {
 public:
  Runner(const FanDocument& doc, const RunOptions& opts, bool composite)
      : fan_(doc.fan), opts_(opts), box_(opts.box_radius), composite_(composite) {}

  bool unknown() const { return unknown_; }
  Report& caveats() { return caveats_; }

  Report validate() {
    Report r;
    r["valid"] = true;
    r["cone_count"] = fan_.size();
    ConeIdSet all(fan_.size());
    for (ConeId c = 0; c < fan_.size(); ++c) all[c] = c;
    r["f_vector"] = f_vector(fan_, all);
    r["cones"] = cone_list(fan_, all);
    return r;
  }

  Report cohomology() {
    return per_field([&](const FieldSpec& field, Report& e) {
      const auto& prof = profile(field);
      Report cones = Report::array();
      for (ConeId c = 0; c < fan_.size(); ++c) {
        const auto& v = prof.per_cone[c];
        cones.push_back({{"cone", fan_.describe(c)}, {"from_degree", v.low}, {"dims", v.dims}});
      }
      e["star_cohomology"] = std::move(cones);
    });
  }

  Report cohen_macaulay() {
    return per_field([&](const FieldSpec& field, Report& e) {
      auto cm = is_cohen_macaulay(fan_, profile(field));
      e["cohen_macaulay"] = cm.cohen_macaulay;
      if (!cm.cohen_macaulay) {
        e["failure"] = {{"cone", fan_.describe(*cm.failing_cone)}, {"degree", cm.failing_degree}};
      }
    });
  }

  Report euler() {
    auto rep = is_euler_fan(fan_);
    Report r;
    r["euler"] = rep.euler;
    r["pure"] = rep.pure;
    r["target"] = rep.target;
    Report rho = Report::array();
    for (ConeId c = 0; c < fan_.size(); ++c) rho.push_back({{"cone", fan_.describe(c)}, {"rho", rep.rho[c]}});
    r["rho"] = std::move(rho);
    if (rep.first_violation) r["first_violation"] = fan_.describe(*rep.first_violation);
    return r;
  }

  Report omega() {
    caveat("Hilbert slices are listed on the " + box_note(box_.radius()) + " (nonzero degrees only)");
    return per_field([&](const FieldSpec& field, Report& e) {
      e["box_radius"] = box_.radius();
      e["values"] = slice_json(omega_hilbert(fan_, profile(field), box_));
    });
  }

  Report local_cohomology() {
    if (!opts_.degree) throw Error(ErrorCode::InvalidArgument, "localcoh needs --degree <i>");
    const int i = *opts_.degree;
    caveat("Hilbert slices are listed on the " + box_note(box_.radius()) + " (nonzero degrees only)");
    return per_field([&](const FieldSpec& field, Report& e) {
      e["degree"] = i;
      e["box_radius"] = box_.radius();
      e["values"] = slice_json(local_cohomology_hilbert(fan_, profile(field), i, box_));
    });
  }

  Report gorenstein() {
    caveat("Gorenstein support condition (i) verified on the " + box_note(box_.radius()) + " only");
    return per_field([&](const FieldSpec& field, Report& e) {
      auto g = gorenstein_check(fan_, field, box_);
      e["verdict"] = to_string(g.verdict);
      e["box_radius"] = g.box_radius;
      e["cohen_macaulay"] = g.cm.cohen_macaulay;
      if (g.witness) e["witness"] = witness_json(*g.witness);
      Report rejected = Report::array();
      for (const auto& w : g.rejected) {
        Report x;
        x["sigma"] = to_string(w.sigma);
        if (!w.condition_ii_ok) {
          auto bad = std::find_if(w.condition_ii.begin(), w.condition_ii.end(),
                                  [](const RhoVerdict& v) { return !v.ok; });
          x["reason"] = "condition (ii) fails at " + fan_.describe(bad->cone);
        } else if (w.condition_i.failed_at) {
          x["reason"] = "condition (i) fails at " + to_string(*w.condition_i.failed_at);
        } else {
          x["reason"] = "rejected";
        }
        rejected.push_back(std::move(x));
      }
      e["rejected"] = std::move(rejected);
    });
  }

  Report canonical_ideal() {
    return per_field([&](const FieldSpec& field, Report& e) {
      auto ci = canonical_ideal_subfan(fan_, profile(field));
      e["kind"] = to_string(ci.kind);
      if (ci.kind == CanonicalIdealResult::Kind::IdealSubfan) {
        e["sigma_prime"] = cone_list(fan_, ci.sigma_prime.ids);
        auto jv = cross_validate_via_join(fan_, ci.sigma_prime, field);
        e["join_check"] = {{"cone_count", jv.cone_count},
                           {"cohen_macaulay", jv.cohen_macaulay},
                           {"euler", jv.euler},
                           {"passed", jv.passed()}};
      }
      if (!ci.reason.empty()) e["reason"] = ci.reason;
      e["top_cohomology"] = ci.top_cohomology;
    });
  }

  Report boundary_duality() {
    caveat("manifoldness is not decided; manifold_like is a local homology test");
    return per_field([&](const FieldSpec& field, Report& e) {
      auto b = manifold_boundary_duality_check(fan_, field);
      e["applicable"] = b.applicable;
      if (!b.reason.empty()) e["reason"] = b.reason;
      e["boundary"] = cone_list(fan_, b.boundary.ids);
      e["manifold_like"] = b.manifold_like;
      if (b.applicable) {
        e["boundary_euler"] = b.boundary_euler;
        e["boundary_cohen_macaulay"] = b.boundary_cm;
        e["canonical_kind"] = to_string(b.canonical.kind);
        e["canonical_matches_boundary"] = b.canonical_matches;
        e["agreement"] = b.agreement;
      }
    });
  }

  Report shelling() {
    const auto& s = shell_result();
    Report r;
    r["verdict"] = shelling_word(s.verdict);
    r["nodes"] = s.nodes;
    if (s.certificate) r["certificate"] = certificate_json(fan_, *s.certificate);
    return r;
  }

  Report semishelling() {
    auto s = semishellability_check(fan_, std::nullopt, opts_.budget);
    if (s.verdict == Verdict::Unknown) unknown_ = true;
    Report r;
    r["verdict"] = semishelling_word(s.verdict);
    r["nodes"] = s.nodes;
    if (!s.reason.empty()) r["reason"] = s.reason;
    if (!s.certificate) return r;
    const auto& cert = *s.certificate;
    Report c;
    c["facet_order"] = cone_list(fan_, cert.facet_order);
    c["exact"] = cert.exact();
    Report steps = Report::array();
    for (const auto& st : cert.steps) {
      steps.push_back({{"j", st.j},
                       {"k", st.k},
                       {"type", to_string(st.type)},
                       {"confidence", to_string(st.confidence)},
                       {"intersection", cone_list(fan_, st.intersection.ids)}});
    }
    c["steps"] = std::move(steps);
    r["certificate"] = std::move(c);
    if (!cert.exact()) caveat("semishelling steps marked HomologyOnly are recognized by homology, not homeomorphism");
    caveat("step ideal ω supports compared on the " + box_note(box_.radius()));
    r["per_field"] = per_field([&](const FieldSpec& field, Report& e) {
      if (fan_.pure()) e["cohen_macaulay"] = semishellable_implies_cm_check(fan_, cert, field);
      Report reps = Report::array();
      for (const auto& rep : step_ideal_report(fan_, cert, field, box_)) {
        Report x;
        x["j"] = rep.j;
        x["cohen_macaulay"] = rep.cohen_macaulay;
        if (rep.canonical) {
          x["canonical_kind"] = to_string(rep.canonical->kind);
          if (rep.canonical->kind == CanonicalIdealResult::Kind::IdealSubfan) {
            x["sigma_prime"] = cone_list(fan_, rep.canonical->sigma_prime.ids);
          }
        }
        x["omega_support_consistent"] = rep.omega_support_consistent;
        x["ok"] = rep.ok();
        reps.push_back(std::move(x));
      }
      e["step_ideals"] = std::move(reps);
    });
    return r;
  }

  Report clean() {
    auto c = cleanness_check(fan_, box_, opts_.budget);
    if (c.verdict == Verdict::Unknown) unknown_ = true;
    caveat("clean condition (ii)(b) and the γ search use the " + box_note(box_.radius()));
    Report r;
    r["verdict"] = clean_word(c.verdict);
    r["box_radius"] = c.box_radius;
    r["nodes"] = c.nodes;
    if (!c.reason.empty()) r["reason"] = c.reason;
    r["shellable"] = shelling_word(shell_result().verdict);
    if (c.witness) {
      Report w;
      w["facet_order"] = cone_list(fan_, c.witness->facet_order);
      Report gammas = Report::array();
      for (std::size_t i = 0; i < c.witness->gammas.size(); ++i) {
        gammas.push_back({{"j", i + 2}, {"gamma", to_string(c.witness->gammas[i])}});
      }
      w["gammas"] = std::move(gammas);
      r["witness"] = std::move(w);
      r["consequences"] = per_field([&](const FieldSpec& field, Report& e) {
        Report steps = Report::array();
        for (const auto& st : clean_consequence_check(fan_, c, field, box_)) {
          Report x;
          x["j"] = st.j;
          x["empty"] = st.empty;
          if (!st.empty) {
            x["omega"] = cone_list(fan_, st.omega.ids);
            x["gorenstein"] = to_string(st.gorenstein->verdict);
            if (st.gorenstein->witness) x["sigma"] = to_string(st.gorenstein->witness->sigma);
            x["lambda_matches_boundary"] = st.lambda_matches;
          }
          x["ok"] = st.ok();
          steps.push_back(std::move(x));
        }
        e["steps"] = std::move(steps);
      });
    }
    return r;
  }

  // Composite sections record module errors instead of aborting the report.
  Report section(const std::function<Report()>& fn) {
    if (!composite_) return fn();
    try {
      return fn();
    } catch (const Error& e) {
      return error_report(to_string(e.code()), e.what());
    }
  }

 private:
  Report witness_json(const GorensteinWitness& w) {
    Report r;
    r["sigma"] = to_string(w.sigma);
    if (w.condition_i.verified) {
      r["condition_i"] = "verified on " + box_note(w.condition_i.box_radius);
    } else if (w.condition_i.failed_at) {
      r["condition_i"] = "fails at " + to_string(*w.condition_i.failed_at);
    }
    Report rho = Report::array();
    for (const auto& v : w.condition_ii) {
      rho.push_back({{"cone", fan_.describe(v.cone)},
                     {"in_star", v.in_star},
                     {"rho", v.rho},
                     {"expected", v.expected},
                     {"ok", v.ok}});
    }
    r["condition_ii"] = std::move(rho);
    return r;
  }

  // Runs fn per requested field. A single-check command fails only when every
  // field hits the same kind of precondition error.
  Report per_field(const std::function<void(const FieldSpec&, Report&)>& fn) {
    Report out = Report::array();
    std::optional<Error> first;
    std::size_t failures = 0;
    for (const auto& field : opts_.fields) {
      Report e;
      e["field"] = field.name();
      try {
        fn(field, e);
      } catch (const Error& err) {
        if (!first) first = err;
        ++failures;
        e = Report();
        e["field"] = field.name();
        e["error"] = {{"code", to_string(err.code())}, {"message", err.what()}};
      }
      out.push_back(std::move(e));
    }
    if (!composite_ && failures == opts_.fields.size() && first) throw *first;
    return out;
  }

  const CohomologyProfile& profile(const FieldSpec& field) {
    auto key = field.name();
    auto it = profiles_.find(key);
    if (it == profiles_.end()) it = profiles_.emplace(key, cohomology_profile(fan_, field)).first;
    return it->second;
  }

  const ShellingResult& shell_result() {
    if (!shelling_) {
      shelling_ = shellability_search(fan_, opts_.budget);
      if (shelling_->verdict == Verdict::Unknown) unknown_ = true;
    }
    return *shelling_;
  }

  void caveat(const std::string& text) {
    if (std::find(caveats_.begin(), caveats_.end(), text) == caveats_.end()) caveats_.push_back(text);
  }

  const Fan& fan_;
  const RunOptions& opts_;
  BoxSpec box_;
  bool composite_;
  bool unknown_ = false;
  Report caveats_ = Report::array();
  std::map<std::string, CohomologyProfile> profiles_;
  std::optional<ShellingResult> shelling_;
};

}  // namespace

RunOutcome run_command(const std::string& command, const FanDocument& doc, const RunOptions& opts) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
  }
  if (opts.fields.empty()) throw Error(ErrorCode::InvalidArgument, "no field given");
  const auto start = std::chrono::steady_clock::now();
  const Fan& fan = doc.fan;
  const bool composite = command == "analyze" || command == "all";
  Runner run(doc, opts, composite);

  Report results;
  if (command == "validate") results["validate"] = run.validate();
  if (command == "cohomology") results["cohomology"] = run.cohomology();
  if (command == "omega") results["omega"] = run.omega();
  if (command == "localcoh") results["local_cohomology"] = run.local_cohomology();
  if (command == "gorenstein") results["gorenstein"] = run.gorenstein();
  if (command == "canonical-ideal") results["canonical_ideal"] = run.canonical_ideal();
  if (command == "boundary-duality") results["boundary_duality"] = run.boundary_duality();
  if (command == "shelling") results["shelling"] = run.shelling();
  if (command == "semishelling") results["semishelling"] = run.semishelling();
  if (command == "clean") results["clean"] = run.clean();
  if (composite) {
    results["cohen_macaulay"] = run.section([&] { return run.cohen_macaulay(); });
    results["euler"] = run.section([&] { return run.euler(); });
    results["gorenstein"] = run.section([&] { return run.gorenstein(); });
    results["canonical_ideal"] = run.section([&] { return run.canonical_ideal(); });
  }
  if (command == "all") {
    results["shelling"] = run.section([&] { return run.shelling(); });
    results["semishelling"] = run.section([&] { return run.semishelling(); });
    results["clean"] = run.section([&] { return run.clean(); });
  }

  Report report;
  report["command"] = command;
  report["fan"] = {{"name", doc.name},
                   {"ambient_dim", fan.ambient_dim()},
                   {"dim", fan.dim()},
                   {"pure", fan.pure()},
                   {"cone_count", fan.size()},
                   {"facets", cone_list(fan, fan.facets())}};
  Report fields = Report::array();
  for (const auto& f : opts.fields) fields.push_back(f.name());
  report["fields"] = std::move(fields);
  report["box_radius"] = opts.box_radius;
  report["results"] = std::move(results);
  report["caveats"] = std::move(run.caveats());
  report["unknown_present"] = run.unknown();
  if (opts.timing) {
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  }
  return RunOutcome{std::move(report), run.unknown()};
}

namespace {

bool is_leaf(const Report& v) { return !v.is_object() && !v.is_array(); }

std::string scalar(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void render(const Report& v, int indent, std::vector<std::string>& lines) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, child] : v.items()) {
      if (is_leaf(child)) {
        lines.push_back(pad + key + ": " + scalar(child));
      } else if (child.is_array() && std::all_of(child.begin(), child.end(), is_leaf) &&
                 (child.empty() || !child.front().is_string() || child.size() <= 1 || key == "dims" ||
                  key == "f_vector" || key == "top_cohomology" || key == "fields")) {
        std::string row = pad + key + ": [";
        for (std::size_t i = 0; i < child.size(); ++i) row += (i ? ", " : "") + scalar(child[i]);
        lines.push_back(row + "]");
      } else {
        lines.push_back(pad + key + ":");
        render(child, indent + 2, lines);
      }
    }
  } else if (v.is_array()) {
    for (const auto& child : v) {
      if (is_leaf(child)) {
        lines.push_back(pad + "- " + scalar(child));
        continue;
      }
      std::vector<std::string> sub;
      render(child, indent + 2, sub);
      if (sub.empty()) {
        lines.push_back(pad + "-");
        continue;
      }
      sub.front().replace(static_cast<std::size_t>(indent), 2, "- ");
      for (auto& s : sub) lines.push_back(std::move(s));
    }
  } else {
    lines.push_back(pad + scalar(v));
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::vector<std::string> lines;
  render(report, 0, lines);
  std::ostringstream out;
  for (const auto& l : lines) out << l << '\n';
  return out.str();
}

}  // namespace toricfan
