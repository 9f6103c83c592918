/* C interface to the pikit prime-implicate compiler.
 *
 * Every function returns a pikit_status. On failure, pikit_last_error()
 * returns a message for the calling thread that stays valid until the next
 * pikit call on that thread. Strings returned through out-parameters are
 * owned by the caller and released with pikit_string_free().
 */
#ifndef PIKIT_PIKIT_H
#define PIKIT_PIKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(PIKIT_BUILDING_LIBRARY)
#define PIKIT_API __attribute__((visibility("default")))
#else
#define PIKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pikit_status {
    PIKIT_OK = 0,
    PIKIT_ERR_INVALID_ARGUMENT = 1,
    PIKIT_ERR_PARSE = 2,
    PIKIT_ERR_IO = 3,
    PIKIT_ERR_STORE = 4,
    PIKIT_ERR_LIMIT = 5,
    PIKIT_ERR_INTERNAL = 6
} pikit_status;

typedef enum pikit_outcome {
    PIKIT_ABSORBED = 0,
    PIKIT_UNCHANGED = 1,
    PIKIT_RECOMPILED = 2
} pikit_outcome;

typedef struct pikit_limits {
    size_t max_rounds;
    size_t max_clauses;
} pikit_limits;

/* Opaque compiled knowledge base. */
typedef struct pikit_kb pikit_kb;

/* Called once per input clause of pikit_kb_add_text, in order. */
typedef void (*pikit_outcome_fn)(size_t index, const char* clause_text, pikit_outcome outcome, void* user);

/* Called once per warning (dropped non-fundamental input clauses). */
typedef void (*pikit_warning_fn)(const char* message, void* user);

PIKIT_API const char* pikit_version(void);
PIKIT_API const char* pikit_last_error(void);
PIKIT_API void pikit_string_free(char* s);

/* Defaults: 100 rounds, 10000 clauses. */
PIKIT_API pikit_limits pikit_default_limits(void);

/* Parses clause-file text and compiles it. trace_path may be NULL; when set,
 * one line per consensus attempt is written there. */
PIKIT_API pikit_status pikit_compile_text(const char* text, const pikit_limits* limits, const char* trace_path,
                                          pikit_warning_fn warn, void* user, pikit_kb** out);

/* Adds every clause of the clause-file text incrementally and returns the
 * updated KB in *out. The input KB is not modified. */
PIKIT_API pikit_status pikit_kb_add_text(const pikit_kb* kb, const char* text, const pikit_limits* limits,
                                         const char* trace_path, pikit_outcome_fn on_outcome, void* user,
                                         pikit_kb** out);

/* *entailed is 1 when some prime implicate subsumes the query clause, 0
 * otherwise. *witness (optional) receives "clause ; subst" or NULL. */
PIKIT_API pikit_status pikit_kb_query(const pikit_kb* kb, const char* clause_text, int* entailed, char** witness);

/* Human-readable listing of the prime implicates with associations and
 * stats. */
PIKIT_API pikit_status pikit_kb_show(const pikit_kb* kb, char** text);

PIKIT_API pikit_status pikit_kb_save(const pikit_kb* kb, const char* path);
PIKIT_API pikit_status pikit_kb_load(const char* path, pikit_kb** out);

PIKIT_API size_t pikit_kb_size(const pikit_kb* kb);
PIKIT_API int pikit_kb_inconsistent(const pikit_kb* kb);
/* Canonical text of the i-th prime implicate with its trailing period. */
PIKIT_API pikit_status pikit_kb_clause(const pikit_kb* kb, size_t index, char** text);

PIKIT_API void pikit_kb_free(pikit_kb* kb);

#ifdef __cplusplus
}
#endif

#endif /* PIKIT_PIKIT_H */
