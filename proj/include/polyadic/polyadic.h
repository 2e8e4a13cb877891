#ifndef POLYADIC_POLYADIC_H
#define POLYADIC_POLYADIC_H

/* C interface to the polyadic library. Documents are JSON text; results
 * are JSON strings owned by the caller and released with pg_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PG_API __declspec(dllexport)
#else
#define PG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pg_status {
  PG_OK = 0,
  PG_FAILED = 1,        /* a verification found a violation */
  PG_ERR_INPUT = 2,     /* malformed document or schema error */
  PG_ERR_ARGUMENT = 3,  /* bad call: null handle, out-of-range element */
  PG_ERR_BUDGET = 4,
  PG_ERR_NOT_POLYADIC = 5,
  PG_ERR_INTERNAL = 6
} pg_status;

typedef struct pg_group pg_group;
typedef struct pg_system pg_system;

typedef enum pg_strategy {
  PG_STRATEGY_AUTO = 0,
  PG_STRATEGY_EXHAUSTIVE = 1,
  PG_STRATEGY_SAMPLED = 2,
  PG_STRATEGY_CERTIFICATE = 3
} pg_strategy;

typedef struct pg_options {
  pg_strategy strategy;
  uint64_t budget;
  uint64_t samples;
  uint64_t seed;
  unsigned depth;  /* exhaustive subset enumeration up to 2^depth */
  int include_timing;
} pg_options;

PG_API void pg_options_init(pg_options* opts);

/* Message of the last failure on this thread; empty when none. */
PG_API const char* pg_last_error(void);
PG_API void pg_string_free(char* s);

/* Validates any group, presentation or system document. */
PG_API pg_status pg_validate_document(const char* json, const pg_options* opts, char** report);

PG_API pg_status pg_group_parse(const char* json, const pg_options* opts, pg_group** out);
PG_API void pg_group_free(pg_group* g);
PG_API int pg_group_arity(const pg_group* g);
PG_API size_t pg_group_size(const pg_group* g);
PG_API pg_status pg_group_eval(const pg_group* g, const uint32_t* xs, size_t count, uint32_t* out);
/* Solves f(prefix, x, suffix) = target for x; slot is 1-based. */
PG_API pg_status pg_group_solve(const pg_group* g, size_t slot, const uint32_t* prefix,
                                size_t prefix_len, const uint32_t* suffix, size_t suffix_len,
                                uint32_t target, uint32_t* out);
PG_API pg_status pg_group_verify(pg_group* g, const pg_options* opts, char** report);
/* Table (materialized when it fits) plus any presentation. */
PG_API pg_status pg_group_to_json(const pg_group* g, char** out);
PG_API pg_status pg_group_retract(const pg_group* g, uint32_t base_point, char** out);
PG_API pg_status pg_group_recover(const pg_group* g, uint32_t base_point, const pg_options* opts,
                                  char** out);
/* Cover document and its property report. Table-only groups first get a
 * presentation recovered at base_point. */
PG_API pg_status pg_group_post_cover(const pg_group* g, uint32_t base_point, char** cover,
                                     char** report);

PG_API pg_status pg_system_parse(const char* json, const pg_options* opts, pg_system** out);
PG_API void pg_system_free(pg_system* s);
PG_API pg_status pg_system_validate(pg_system* s, const pg_options* opts, char** report);
/* Measures of one cylinder ({"level", "subset"}) over the thread through
 * the given top-level base point. */
PG_API pg_status pg_system_measure(const pg_system* s, const char* cylinder_json,
                                   uint32_t base_point, char** out);
PG_API pg_status pg_system_check_haar(const pg_system* s, uint32_t base_point,
                                      const pg_options* opts, char** report);

#ifdef __cplusplus
}
#endif

#endif
