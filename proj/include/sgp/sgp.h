#ifndef SGP_SGP_H
#define SGP_SGP_H

/* C interface to the strong Gelfand pair library. Strings returned through
 * `char **out` are heap allocated and must be released with sgp_string_free.
 * On failure the message is available from sgp_last_error() on the same
 * thread until the next call. */

#include <stddef.h>

#if defined(_WIN32)
#  define SGP_API __declspec(dllexport)
#else
#  define SGP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sgp_group sgp_group;

typedef enum sgp_status {
  SGP_OK = 0,
  SGP_ERR_USAGE = 1,
  SGP_ERR_INTERNAL = 2,
  SGP_ERR_VALIDATION = 3,
  SGP_ERR_IO = 4,
  SGP_ERR_SIZE_LIMIT = 5,
  SGP_ERR_UNSUPPORTED = 6
} sgp_status;

typedef enum sgp_family {
  SGP_FAMILY_CYCLIC = 0,
  SGP_FAMILY_DIHEDRAL = 1,
  SGP_FAMILY_DICYCLIC = 2
} sgp_family;

typedef enum sgp_format {
  SGP_FORMAT_TEXT = 0,
  SGP_FORMAT_JSON = 1,
  SGP_FORMAT_CSV = 2
} sgp_format;

SGP_API const char *sgp_version(void);
SGP_API const char *sgp_last_error(void);
SGP_API void sgp_string_free(char *s);

SGP_API sgp_status sgp_parse_family(const char *name, sgp_family *out);
SGP_API sgp_status sgp_parse_format(const char *name, sgp_format *out);

/* max_order bounds |G|; pass 0 for the library default (256). */
SGP_API sgp_status sgp_group_create(sgp_family family, int n, int max_order, sgp_group **out);
SGP_API void sgp_group_destroy(sgp_group *group);
SGP_API int sgp_group_order(const sgp_group *group);
SGP_API int sgp_group_class_count(const sgp_group *group);
SGP_API sgp_status sgp_group_name(const sgp_group *group, char **out);

/* Renders the character table; SGP_ERR_VALIDATION if it fails the
 * orthogonality or degree checks. */
SGP_API sgp_status sgp_render_table(const sgp_group *group, sgp_format format, char **out);
SGP_API sgp_status sgp_render_classification(sgp_group *group, sgp_format format, char **out);

/* Audit of n = first..last. `discrepancies` may be NULL. */
SGP_API sgp_status sgp_audit(sgp_family family, int first, int last, int max_order, sgp_format format,
                             char **out, size_t *discrepancies);

/* Writes <family>_<n>.json and manifest.json under dir; `manifest` receives
 * the manifest JSON and may be NULL. */
SGP_API sgp_status sgp_write_atlas(sgp_family family, int first, int last, int max_order, const char *dir,
                                   char **manifest);

#ifdef __cplusplus
}
#endif

#endif
