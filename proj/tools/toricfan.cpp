// toricfan: command-line front end over the C API.
//
//   toricfan <command> <fan.json> [--field q|fp:<p>]... [--box R] [--format text|json]
//            [--budget N] [--degree i] [--timing] [--allow-unknown]
//
// Exit status: 0 completed, 1 input error, 2 a search hit its budget.

#include "toricfan/toricfan.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitInput = 1;
constexpr int kExitUnknown = 2;

const std::vector<std::string> kCommands{"validate",        "analyze",          "cohomology", "omega",
                                         "localcoh",        "gorenstein",       "canonical-ideal",
                                         "boundary-duality", "shelling",        "semishelling",
                                         "clean",           "all"};

int report_error(const std::string& format, const std::string& code, const std::string& message) {
  if (format == "json") {
    nlohmann::ordered_json err;
    err["error"] = {{"code", code}, {"message", message}};
    std::cerr << err.dump(2) << "\n";
  } else {
    std::cerr << "error: " << code << ": " << message << "\n";
  }
  return kExitInput;
}

int report_status(const std::string& format, tf_status s) {
  return report_error(format, tf_status_name(s), tf_last_error());
}

struct Handles {
  tf_fan* fan = nullptr;
  tf_options* opts = nullptr;
  ~Handles() {
    tf_fan_free(fan);
    tf_options_free(opts);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of rational pointed fans and their toric face rings"};
  std::string command, path, format = "text";
  std::vector<std::string> fields;
  long box = 4;
  std::size_t budget = 500000;
  int degree = 0;
  bool timing = false, allow_unknown = false;

  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("file", path, "Fan document (JSON)")->required();
  app.add_option("--field", fields, "Coefficient field: q or fp:<p> (repeatable)");
  app.add_option("--box", box, "Box radius R for box-verified conditions")->check(CLI::Range(1L, 1000L));
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", budget, "Node budget for searches")->check(CLI::PositiveNumber);
  auto* degree_opt = app.add_option("--degree", degree, "Local cohomology degree for localcoh");
  app.add_flag("--timing", timing, "Add wall-clock timing to the report");
  app.add_flag("--allow-unknown", allow_unknown, "Exit 0 even when a search ran out of budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report_error(format, "InvalidArgument", e.what());
  }

  std::ifstream in(path);
  if (!in) return report_error(format, "InvalidArgument", "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();

  Handles h;
  if (auto s = tf_fan_parse(buf.str().c_str(), &h.fan); s != TF_OK) return report_status(format, s);
  h.opts = tf_options_new();
  if (!h.opts) return report_error(format, "Internal", "out of memory");
  for (const auto& f : fields) {
    if (auto s = tf_options_add_field(h.opts, f.c_str()); s != TF_OK) return report_status(format, s);
  }
  tf_options_set_box(h.opts, box);
  tf_options_set_budget(h.opts, budget);
  tf_options_set_format(h.opts, format == "json" ? TF_FORMAT_JSON : TF_FORMAT_TEXT);
  tf_options_set_timing(h.opts, timing ? 1 : 0);
  if (degree_opt->count() > 0) tf_options_set_degree(h.opts, degree);

  char* report = nullptr;
  int unknown = 0;
  if (auto s = tf_run_command(h.fan, command.c_str(), h.opts, &report, &unknown); s != TF_OK) {
    return report_status(format, s);
  }
  std::cout << report;
  tf_string_free(report);
  return unknown && !allow_unknown ? kExitUnknown : 0;
}
