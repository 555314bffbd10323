/* C interface to the toricfan library. All functions return a tf_status; on
 * failure tf_last_error() describes the problem for the calling thread. */
#ifndef TORICFAN_TORICFAN_H
#define TORICFAN_TORICFAN_H

#include <stddef.h>

#if defined(TORICFAN_BUILDING_LIBRARY)
#define TF_API __attribute__((visibility("default")))
#else
#define TF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
  TF_OK = 0,
  TF_ERR_PARSE,
  TF_ERR_NOT_A_FAN,
  TF_ERR_NOT_POINTED,
  TF_ERR_DIMENSION_MISMATCH,
  TF_ERR_INVALID_ARGUMENT,
  TF_ERR_NOT_COHEN_MACAULAY,
  TF_ERR_NOT_PURE,
  TF_ERR_INTERNAL
} tf_status;

typedef enum tf_format { TF_FORMAT_TEXT = 0, TF_FORMAT_JSON = 1 } tf_format;

typedef struct tf_fan tf_fan;
typedef struct tf_options tf_options;

/* Fan documents: {"name", "ambient_dim", "rays", "maximal_cones"} as JSON. */
TF_API tf_status tf_fan_parse(const char* document, tf_fan** out);
TF_API void tf_fan_free(tf_fan* fan);
TF_API tf_status tf_fan_num_cones(const tf_fan* fan, size_t* out);
TF_API tf_status tf_fan_dim(const tf_fan* fan, size_t* out);
TF_API tf_status tf_fan_num_facets(const tf_fan* fan, size_t* out);

/* field: "q" or "fp:<p>". *out is 1 when Cohen-Macaulay. The failing cone
 * id and degree are written when not NULL and the fan is not CM. */
TF_API tf_status tf_fan_is_cohen_macaulay(const tf_fan* fan, const char* field, int* out,
                                          size_t* failing_cone, int* failing_degree);

/* Verdicts: 1 yes, 0 no, -1 unknown (search budget exhausted). */
TF_API tf_status tf_fan_is_shellable(const tf_fan* fan, size_t max_nodes, int* out);
TF_API tf_status tf_fan_is_clean(const tf_fan* fan, long box_radius, size_t max_nodes, int* out);

TF_API tf_options* tf_options_new(void);
TF_API void tf_options_free(tf_options* opts);
/* The first call replaces the default field Q; later calls append. */
TF_API tf_status tf_options_add_field(tf_options* opts, const char* field);
TF_API tf_status tf_options_set_box(tf_options* opts, long radius);
TF_API tf_status tf_options_set_budget(tf_options* opts, size_t max_nodes);
TF_API tf_status tf_options_set_format(tf_options* opts, tf_format format);
TF_API tf_status tf_options_set_timing(tf_options* opts, int enabled);
TF_API tf_status tf_options_set_degree(tf_options* opts, int degree);

/* Runs one CLI command and returns the rendered report (free with
 * tf_string_free). *unknown_present is set when a search ran out of budget.
 * opts may be NULL for defaults. */
TF_API tf_status tf_run_command(const tf_fan* fan, const char* command, const tf_options* opts,
                                char** report, int* unknown_present);

TF_API void tf_string_free(char* s);
TF_API const char* tf_last_error(void);
TF_API const char* tf_status_name(tf_status status);

#ifdef __cplusplus
}
#endif

#endif
