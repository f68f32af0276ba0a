#ifndef GRADINGS_H
#define GRADINGS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum XgStatus {
  /**
   * success
   */
  XgStatus_Ok = 0,
  /**
   * a mathematical check failed (registry mismatch, non-grading, ...)
   */
  XgStatus_MathFail = 1,
  /**
   * bad arguments: unknown name, unparsable field, null pointer
   */
  XgStatus_Usage = 2,
  /**
   * the entry cannot be built over the requested field
   */
  XgStatus_Unavailable = 3,
} XgStatus;

/**
 * Opaque built catalog entry: a graded algebra with a verified grading.
 */
typedef struct XgBuilt XgBuilt;

/**
 * Opaque build context: a coefficient field plus caches for the algebras
 * and derivation spaces constructed over it.
 */
typedef struct XgContext XgContext;

/**
 * Create a context over the named field: "gf<p>", "q", "q-i", "q-omega".
 * Returns null when the field name cannot be parsed.
 *
 * # Safety
 * `field_name` must be a valid NUL-terminated string or null.
 */
struct XgContext *xg_context_new(const char *field_name);

/**
 * # Safety
 * `ctx` must be a pointer from [`xg_context_new`], not yet freed.
 */
void xg_context_free(struct XgContext *ctx);

/**
 * Build a catalog entry (e.g. "albert/cartan") over the context's field.
 *
 * # Safety
 * `ctx` must be a live context, `name` a valid string, `out` a valid
 * pointer to receive the handle.
 */
enum XgStatus xg_build(struct XgContext *ctx, const char *name, struct XgBuilt **out);

/**
 * # Safety
 * `built` must be a pointer from [`xg_build`], not yet freed.
 */
void xg_built_free(struct XgBuilt *built);

/**
 * Dimension of the underlying algebra, or 0 on null input.
 *
 * # Safety
 * `built` must be a live handle.
 */
uintptr_t xg_built_dim(const struct XgBuilt *built);

/**
 * Type vector of the grading, e.g. "(24,0,1)".
 *
 * # Safety
 * `built` must be a live handle; free the result with [`xg_string_free`].
 */
char *xg_built_type_string(const struct XgBuilt *built);

/**
 * Universal group of the grading, e.g. "Z^4" or "Z_2^5".
 *
 * # Safety
 * `built` must be a live handle; free the result with [`xg_string_free`].
 */
char *xg_built_universal_group_string(const struct XgBuilt *built);

/**
 * Canonical algebra JSON (same schema as the CLI export).
 *
 * # Safety
 * `built` must be a live handle; free the result with [`xg_string_free`].
 */
char *xg_built_algebra_json(const struct XgBuilt *built);

/**
 * Canonical grading JSON (same schema as the CLI export).
 *
 * # Safety
 * `built` must be a live handle; free the result with [`xg_string_free`].
 */
char *xg_built_grading_json(const struct XgBuilt *built);

/**
 * Run the registry over one scope ("cayley", "g2", "albert", "f4") and
 * return the JSON report through `out_report`. The status is MathFail
 * when any entry fails.
 *
 * # Safety
 * `ctx` must be a live context, `scope` a valid string, `out_report`
 * either null (report discarded) or valid; free the report string with
 * [`xg_string_free`].
 */
enum XgStatus xg_verify_scope(struct XgContext *ctx, const char *scope, char **out_report);

/**
 * Newline-separated list of all catalog entry names.
 *
 * # Safety
 * Free the result with [`xg_string_free`].
 */
char *xg_entry_names(void);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `s` must be a pointer previously returned by one of the `xg_*`
 * string-returning functions, not yet freed.
 */
void xg_string_free(char *s);

#endif /* GRADINGS_H */
