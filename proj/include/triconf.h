#ifndef TRICONF_H
#define TRICONF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TC_API __declspec(dllexport)
#else
#define TC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Numeric values mirror the C++ error codes; MISMATCH and the rest are API-only. */
typedef enum tc_status {
    TC_OK = 0,
    TC_ERR_PARSE = 1,
    TC_ERR_DOMAIN,
    TC_ERR_DUPLICATE_ID,
    TC_ERR_EMPTY_TABLE,
    TC_ERR_UNKNOWN_ID,
    TC_ERR_EMPTY_ISSUE_SET,
    TC_ERR_EMPTY_AGENT_SET,
    TC_ERR_INVALID_DEGREE,
    TC_ERR_RESOURCE_LIMIT,
    TC_ERR_DUPLICATE_ISSUE,
    TC_ERR_EMPTY_STRATEGY,
    TC_ERR_NEUTRAL_LITERAL,
    TC_ERR_FIXTURE_MISSING,
    TC_ERR_INVALID_THRESHOLD,
    TC_ERR_MISMATCH = 100,
    TC_ERR_ARGUMENT = 101,
    TC_ERR_INTERNAL = 102
} tc_status;

typedef enum tc_format { TC_FORMAT_CSV = 0, TC_FORMAT_MARKDOWN = 1, TC_FORMAT_JSON = 2 } tc_format;
typedef enum tc_preset { TC_MODEL_PAWLAK = 0, TC_MODEL_YAO = 1 } tc_preset;

typedef struct tc_rational {
    int64_t num;
    int64_t den; /* always positive */
} tc_rational;

typedef struct tc_table tc_table;
typedef struct tc_model tc_model;
typedef struct tc_family tc_family;

/* Message of the last failing call on this thread; "" after success. */
TC_API const char* tc_last_error(void);
TC_API const char* tc_status_name(tc_status s);
TC_API void tc_string_free(char* s);

/* json != 0 selects the JSON table format, otherwise CSV. */
TC_API tc_status tc_table_load(const char* text, int json, tc_table** out);
TC_API tc_status tc_table_load_file(const char* path, tc_table** out);
TC_API void tc_table_free(tc_table* t);
TC_API size_t tc_table_agent_count(const tc_table* t);
TC_API size_t tc_table_issue_count(const tc_table* t);
TC_API const char* tc_table_agent_id(const tc_table* t, size_t k);
TC_API const char* tc_table_issue_id(const tc_table* t, size_t k);
TC_API tc_status tc_table_rating(const tc_table* t, const char* agent, const char* issue, int* out);
TC_API tc_status tc_table_to_csv(const tc_table* t, char** out);

TC_API tc_status tc_model_preset(tc_preset p, tc_model** out);
TC_API tc_status tc_model_from_json(const char* text, tc_model** out);
TC_API void tc_model_free(tc_model* m);

/* Issue lists: issues == NULL means every issue of the table. */
TC_API tc_status tc_aggregate_rating(const tc_table* t, const char* agent, const char* const* issues, size_t n_issues,
                                     tc_rational* out);
TC_API tc_status tc_auxiliary_value(const tc_model* m, const tc_table* t, const char* x, const char* y,
                                    const char* const* issues, size_t n_issues, tc_rational* out);
/* non_neutral != 0 averages over the first agent's non-neutral issues only. */
TC_API tc_status tc_alliance_conflict(const tc_model* m, const tc_table* t, const char* x, const char* y,
                                      const char* const* issues, size_t n_issues, int non_neutral,
                                      tc_rational* alliance, tc_rational* conflict);
TC_API tc_status tc_strategy_degrees(const tc_model* m, const tc_table* t, const char* strategy, const char* agent,
                                     tc_rational* alliance, tc_rational* conflict);

/* Lazy strategy family. cap == 0 uses the default issue cap. */
TC_API tc_status tc_family_open(const char* const* issues, size_t n_issues, int non_neutral, size_t cap,
                                tc_family** out);
TC_API uint64_t tc_family_size(const tc_family* f);
/* *out is NULL once the family is exhausted; otherwise free it with tc_string_free. */
TC_API tc_status tc_family_next(tc_family* f, char** out);
TC_API void tc_family_free(tc_family* f);

/* Runs a workbench command on a JSON configuration; relative paths resolve against base_dir. */
TC_API tc_status tc_workbench_run(const char* command, const char* config_json, const char* base_dir, tc_format format,
                                  char** out);
/* target is one reproduction target or "all". Returns TC_ERR_MISMATCH with the report still in *out
   when any check disagrees. */
TC_API tc_status tc_reproduce(const char* target, const char* fixture_dir, tc_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
