#include "toricfan/toricfan.h"

#include "toricfan/document.hpp"
#include "toricfan/error.hpp"
#include "toricfan/report.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct tf_fan {
  toricfan::FanDocument doc;
};

struct tf_options {
  toricfan::RunOptions run;
  bool fields_set = false;
  tf_format format = TF_FORMAT_TEXT;
};

namespace {

thread_local std::string last_error;

tf_status status_of(toricfan::ErrorCode code) {
  using toricfan::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError: return TF_ERR_PARSE;
    case ErrorCode::NotAFan: return TF_ERR_NOT_A_FAN;
    case ErrorCode::NotPointed: return TF_ERR_NOT_POINTED;
    case ErrorCode::DimensionMismatch: return TF_ERR_DIMENSION_MISMATCH;
    case ErrorCode::InvalidArgument: return TF_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotCohenMacaulay: return TF_ERR_NOT_COHEN_MACAULAY;
    case ErrorCode::NotPure: return TF_ERR_NOT_PURE;
    case ErrorCode::Internal: return TF_ERR_INTERNAL;
  }
  return TF_ERR_INTERNAL;
}

tf_status fail(tf_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <class F>
tf_status guarded(F&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const toricfan::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TF_ERR_INTERNAL, "unknown failure");
  }
}

#define TF_REQUIRE(cond, what) \
  if (!(cond)) return fail(TF_ERR_INVALID_ARGUMENT, what)

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

tf_status tf_fan_parse(const char* document, tf_fan** out) {
  TF_REQUIRE(document && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new tf_fan{toricfan::parse_fan(document)};
    return TF_OK;
  });
}

void tf_fan_free(tf_fan* fan) { delete fan; }

tf_status tf_fan_num_cones(const tf_fan* fan, size_t* out) {
  TF_REQUIRE(fan && out, "null argument");
  *out = fan->doc.fan.size();
  return TF_OK;
}

tf_status tf_fan_dim(const tf_fan* fan, size_t* out) {
  TF_REQUIRE(fan && out, "null argument");
  *out = fan->doc.fan.dim();
  return TF_OK;
}

tf_status tf_fan_num_facets(const tf_fan* fan, size_t* out) {
  TF_REQUIRE(fan && out, "null argument");
  *out = fan->doc.fan.facets().size();
  return TF_OK;
}

tf_status tf_fan_is_cohen_macaulay(const tf_fan* fan, const char* field, int* out, size_t* failing_cone,
                                   int* failing_degree) {
  TF_REQUIRE(fan && field && out, "null argument");
  return guarded([&] {
    auto cm = toricfan::is_cohen_macaulay(fan->doc.fan, toricfan::FieldSpec::parse(field));
    *out = cm.cohen_macaulay ? 1 : 0;
    if (!cm.cohen_macaulay) {
      if (failing_cone) *failing_cone = *cm.failing_cone;
      if (failing_degree) *failing_degree = cm.failing_degree;
    }
    return TF_OK;
  });
}

static int verdict_int(toricfan::Verdict v) {
  return v == toricfan::Verdict::Yes ? 1 : v == toricfan::Verdict::No ? 0 : -1;
}

tf_status tf_fan_is_shellable(const tf_fan* fan, size_t max_nodes, int* out) {
  TF_REQUIRE(fan && out, "null argument");
  return guarded([&] {
    *out = verdict_int(toricfan::shellability_search(fan->doc.fan, {max_nodes}).verdict);
    return TF_OK;
  });
}

tf_status tf_fan_is_clean(const tf_fan* fan, long box_radius, size_t max_nodes, int* out) {
  TF_REQUIRE(fan && out, "null argument");
  return guarded([&] {
    auto r = toricfan::cleanness_check(fan->doc.fan, toricfan::BoxSpec(box_radius), {max_nodes});
    *out = verdict_int(r.verdict);
    return TF_OK;
  });
}

tf_options* tf_options_new(void) { return new (std::nothrow) tf_options(); }

void tf_options_free(tf_options* opts) { delete opts; }

tf_status tf_options_add_field(tf_options* opts, const char* field) {
  TF_REQUIRE(opts && field, "null argument");
  return guarded([&] {
    auto spec = toricfan::FieldSpec::parse(field);
    if (!opts->fields_set) {
      opts->run.fields.clear();
      opts->fields_set = true;
    }
    opts->run.fields.push_back(spec);
    return TF_OK;
  });
}

tf_status tf_options_set_box(tf_options* opts, long radius) {
  TF_REQUIRE(opts, "null argument");
  TF_REQUIRE(radius >= 1, "box radius must be at least 1");
  opts->run.box_radius = radius;
  return TF_OK;
}

tf_status tf_options_set_budget(tf_options* opts, size_t max_nodes) {
  TF_REQUIRE(opts, "null argument");
  TF_REQUIRE(max_nodes >= 1, "budget must be positive");
  opts->run.budget.max_nodes = max_nodes;
  return TF_OK;
}

tf_status tf_options_set_format(tf_options* opts, tf_format format) {
  TF_REQUIRE(opts, "null argument");
  TF_REQUIRE(format == TF_FORMAT_TEXT || format == TF_FORMAT_JSON, "unknown format");
  opts->format = format;
  return TF_OK;
}

tf_status tf_options_set_timing(tf_options* opts, int enabled) {
  TF_REQUIRE(opts, "null argument");
  opts->run.timing = enabled != 0;
  return TF_OK;
}

tf_status tf_options_set_degree(tf_options* opts, int degree) {
  TF_REQUIRE(opts, "null argument");
  opts->run.degree = degree;
  return TF_OK;
}

tf_status tf_run_command(const tf_fan* fan, const char* command, const tf_options* opts, char** report,
                         int* unknown_present) {
  TF_REQUIRE(fan && command && report, "null argument");
  *report = nullptr;
  static const tf_options defaults{};
  const tf_options& o = opts ? *opts : defaults;
  return guarded([&] {
    auto outcome = toricfan::run_command(command, fan->doc, o.run);
    std::string text = o.format == TF_FORMAT_JSON ? outcome.report.dump(2) + "\n"
                                                   : toricfan::render_text(outcome.report);
    *report = copy_string(text);
    if (unknown_present) *unknown_present = outcome.unknown_present ? 1 : 0;
    return TF_OK;
  });
}

void tf_string_free(char* s) { std::free(s); }

const char* tf_last_error(void) { return last_error.c_str(); }

const char* tf_status_name(tf_status status) {
  switch (status) {
    case TF_OK: return "OK";
    case TF_ERR_PARSE: return "ParseError";
    case TF_ERR_NOT_A_FAN: return "NotAFan";
    case TF_ERR_NOT_POINTED: return "NotPointed";
    case TF_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case TF_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case TF_ERR_NOT_COHEN_MACAULAY: return "NotCohenMacaulay";
    case TF_ERR_NOT_PURE: return "NotPure";
    case TF_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

}  // extern "C"
