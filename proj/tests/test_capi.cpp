#include "toricfan/toricfan.h"

#include "doctest.h"

#include <string>

namespace {

const char* kTwoCones =
    R"({"name": "two cones", "ambient_dim": 2, "rays": [[0,1],[2,1],[-2,1]], "maximal_cones": [[0,1],[0,2]]})";

const char* kRp2 = R"({"ambient_dim": 6,
  "rays": [[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]],
  "maximal_cones": [[0,1,3],[0,1,5],[0,2,4],[0,2,5],[0,3,4],[1,2,3],[1,2,4],[1,4,5],[2,3,5],[3,4,5]]})";

struct FanHandle {
  tf_fan* fan = nullptr;
  explicit FanHandle(const char* doc) { REQUIRE(tf_fan_parse(doc, &fan) == TF_OK); }
  ~FanHandle() { tf_fan_free(fan); }
};

}  // namespace

TEST_CASE("capi: parse and query") {
  FanHandle h(kTwoCones);
  size_t n = 0;
  CHECK(tf_fan_num_cones(h.fan, &n) == TF_OK);
  CHECK(n == 6);
  CHECK(tf_fan_dim(h.fan, &n) == TF_OK);
  CHECK(n == 2);
  CHECK(tf_fan_num_facets(h.fan, &n) == TF_OK);
  CHECK(n == 2);
}

TEST_CASE("capi: error statuses") {
  tf_fan* f = nullptr;
  CHECK(tf_fan_parse("{oops", &f) == TF_ERR_PARSE);
  CHECK(f == nullptr);
  CHECK(std::string(tf_last_error()).find("line 1") != std::string::npos);
  CHECK(tf_fan_parse(R"({"ambient_dim": 2, "rays": [[0,1],[2,1],[1,1],[-2,1]], "maximal_cones": [[0,1],[2,3]]})",
                     &f) == TF_ERR_NOT_A_FAN);
  CHECK(tf_fan_parse(R"({"ambient_dim": 2, "maximal_cones": [[[1,0],[-1,0]]]})", &f) == TF_ERR_NOT_POINTED);
  CHECK(tf_fan_parse(R"({"ambient_dim": 2, "rays": [[1]], "maximal_cones": [[0]]})", &f) ==
        TF_ERR_DIMENSION_MISMATCH);
  CHECK(tf_fan_parse(nullptr, &f) == TF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(tf_status_name(TF_ERR_NOT_A_FAN)) == "NotAFan");
  CHECK(std::string(tf_status_name(TF_OK)) == "OK");

  FanHandle h(kTwoCones);
  int v = 0;
  CHECK(tf_fan_is_cohen_macaulay(h.fan, "fp:4", &v, nullptr, nullptr) == TF_ERR_INVALID_ARGUMENT);
  char* rep = nullptr;
  CHECK(tf_run_command(h.fan, "localcoh", nullptr, &rep, nullptr) == TF_ERR_INVALID_ARGUMENT);
  CHECK(rep == nullptr);
  CHECK(tf_run_command(h.fan, "bogus", nullptr, &rep, nullptr) == TF_ERR_INVALID_ARGUMENT);

  FanHandle split(R"({"ambient_dim": 2, "rays": [[1,0],[0,1],[-1,0],[0,-1]], "maximal_cones": [[0,1],[2,3]]})");
  CHECK(tf_run_command(split.fan, "canonical-ideal", nullptr, &rep, nullptr) == TF_ERR_NOT_COHEN_MACAULAY);
}

TEST_CASE("capi: verdicts") {
  FanHandle tc(kTwoCones);
  int v = -2;
  CHECK(tf_fan_is_shellable(tc.fan, 1000, &v) == TF_OK);
  CHECK(v == 1);
  CHECK(tf_fan_is_clean(tc.fan, 6, 1000, &v) == TF_OK);
  CHECK(v == 0);

  FanHandle rp2(kRp2);
  size_t cone = 99;
  int degree = 99;
  CHECK(tf_fan_is_cohen_macaulay(rp2.fan, "q", &v, &cone, &degree) == TF_OK);
  CHECK(v == 1);
  CHECK(tf_fan_is_cohen_macaulay(rp2.fan, "fp:2", &v, &cone, &degree) == TF_OK);
  CHECK(v == 0);
  CHECK(cone == 0);
  CHECK(degree == 1);
  CHECK(tf_fan_is_shellable(rp2.fan, 3, &v) == TF_OK);
  CHECK(v == -1);
  CHECK(tf_fan_is_shellable(rp2.fan, 1000000, &v) == TF_OK);
  CHECK(v == 0);
}

TEST_CASE("capi: run_command") {
  FanHandle tc(kTwoCones);
  tf_options* o = tf_options_new();
  REQUIRE(o != nullptr);
  CHECK(tf_options_set_format(o, TF_FORMAT_JSON) == TF_OK);
  CHECK(tf_options_set_box(o, 6) == TF_OK);
  CHECK(tf_options_add_field(o, "fp:3") == TF_OK);
  CHECK(tf_options_add_field(o, "fp:6") == TF_ERR_INVALID_ARGUMENT);
  CHECK(tf_options_set_box(o, 0) == TF_ERR_INVALID_ARGUMENT);

  char* rep = nullptr;
  int unknown = -1;
  REQUIRE(tf_run_command(tc.fan, "clean", o, &rep, &unknown) == TF_OK);
  std::string s(rep);
  tf_string_free(rep);
  CHECK(unknown == 0);
  CHECK(s.find("\"verdict\": \"NotClean\"") != std::string::npos);
  CHECK(s.find("\"F_3\"") != std::string::npos);
  CHECK(s.find("\"Q\"") == std::string::npos);

  CHECK(tf_options_set_budget(o, 1) == TF_OK);
  FanHandle rp2(kRp2);
  REQUIRE(tf_run_command(rp2.fan, "shelling", o, &rep, &unknown) == TF_OK);
  tf_string_free(rep);
  CHECK(unknown == 1);

  CHECK(tf_options_set_format(o, TF_FORMAT_TEXT) == TF_OK);
  CHECK(tf_options_set_degree(o, 2) == TF_OK);
  REQUIRE(tf_run_command(tc.fan, "localcoh", o, &rep, &unknown) == TF_OK);
  CHECK(std::string(rep).find("{") == std::string::npos);
  tf_string_free(rep);
  tf_options_free(o);

  // default options
  REQUIRE(tf_run_command(tc.fan, "validate", nullptr, &rep, nullptr) == TF_OK);
  CHECK(std::string(rep).find("two cones") != std::string::npos);
  tf_string_free(rep);
}
