/* C interface to acdkit. Every function returns an acdk_status; on failure the
 * context keeps a message readable through acdk_context_error. Strings returned
 * through char** are owned by the caller and released with acdk_string_free. */
#ifndef ACDKIT_H
#define ACDKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ACDK_API __declspec(dllexport)
#else
#define ACDK_API __attribute__((visibility("default")))
#endif

typedef enum acdk_status {
  ACDK_OK = 0,
  ACDK_FALSE = 1,        /* a checked property does not hold */
  ACDK_INPUT_ERROR = 2,  /* malformed document or violated precondition */
  ACDK_CAP_EXCEEDED = 3, /* loop or exploration cap hit */
  ACDK_INTERNAL_ERROR = 4
} acdk_status;

typedef enum acdk_output { ACDK_JSON = 0, ACDK_DOT = 1 } acdk_output;

typedef enum acdk_target {
  ACDK_TARGET_RABIN = 0,
  ACDK_TARGET_STREETT = 1,
  ACDK_TARGET_PARITY = 2,
  ACDK_TARGET_WEAK = 3
} acdk_target;

typedef enum acdk_tag { ACDK_TAG_EVEN = 0, ACDK_TAG_ODD = 1, ACDK_TAG_AMBIGUOUS = 2 } acdk_tag;

typedef struct acdk_context acdk_context;
typedef struct acdk_document acdk_document;

typedef struct acdk_acd_summary {
  uint64_t size;         /* states of the ACD transform */
  int32_t priority_min;
  int32_t priority_max;
  acdk_tag tag;
  uint32_t num_trees;    /* trees counted in the height list */
  uint32_t max_height;
} acdk_acd_summary;

ACDK_API acdk_context* acdk_context_new(void);
ACDK_API void acdk_context_free(acdk_context* ctx);
ACDK_API void acdk_context_set_loop_cap(acdk_context* ctx, uint64_t cap);
ACDK_API void acdk_context_set_explore_cap(acdk_context* ctx, uint64_t cap);
ACDK_API const char* acdk_context_error(const acdk_context* ctx);

ACDK_API acdk_status acdk_document_parse(acdk_context* ctx, const char* text, size_t len, acdk_document** out);
ACDK_API void acdk_document_free(acdk_document* doc);
ACDK_API acdk_status acdk_document_serialize(acdk_context* ctx, const acdk_document* doc, char** out);
ACDK_API void acdk_string_free(char* s);

ACDK_API acdk_status acdk_validate(acdk_context* ctx, const acdk_document* doc, char** out);
ACDK_API acdk_status acdk_system_dot(acdk_context* ctx, const acdk_document* doc, char** out);
ACDK_API acdk_status acdk_zielonka(acdk_context* ctx, const acdk_document* doc, acdk_output fmt, char** out);
ACDK_API acdk_status acdk_zt_automaton(acdk_context* ctx, const acdk_document* doc, acdk_output fmt, char** out);
ACDK_API acdk_status acdk_acd(acdk_context* ctx, const acdk_document* doc, acdk_output fmt, char** out);
ACDK_API acdk_status acdk_transform(acdk_context* ctx, const acdk_document* doc, acdk_output fmt, char** out);
ACDK_API acdk_status acdk_stats(acdk_context* ctx, const acdk_document* doc, char** out);
ACDK_API acdk_status acdk_acd_summary_get(acdk_context* ctx, const acdk_document* doc, acdk_acd_summary* out);
ACDK_API acdk_status acdk_shape(acdk_context* ctx, const acdk_document* doc, char** out);
/* ACDK_FALSE when the ACD lacks the required shape. */
ACDK_API acdk_status acdk_relabel(acdk_context* ctx, const acdk_document* doc, acdk_target target, char** out);
ACDK_API acdk_status acdk_compress(acdk_context* ctx, const acdk_document* doc, char** out);
ACDK_API acdk_status acdk_compose(acdk_context* ctx, const acdk_document* automaton, const acdk_document* doc,
                                  char** out);
/* target may be NULL when the morphism block embeds its target.
 * ACDK_FALSE unless the map is structural and preserves acceptance. */
ACDK_API acdk_status acdk_check_morphism(acdk_context* ctx, const acdk_document* source,
                                         const acdk_document* target, char** out);
ACDK_API acdk_status acdk_solve(acdk_context* ctx, const acdk_document* doc, char** out);
/* ACDK_FALSE when the conditions differ on some reachable loop. */
ACDK_API acdk_status acdk_equivalent(acdk_context* ctx, const acdk_document* a, const acdk_document* b, char** out);

#ifdef __cplusplus
}
#endif

#endif
