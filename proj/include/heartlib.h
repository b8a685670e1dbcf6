#ifndef HEARTLIB_H
#define HEARTLIB_H

/* C interface to the heart library: opaque handles, status codes, and JSON
 * or CSV strings for structured results.  Strings returned through a char**
 * are owned by the caller and released with heart_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#define HEART_API __declspec(dllexport)
#else
#define HEART_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct heart_polygon heart_polygon;
typedef struct heart_profile heart_profile;
typedef struct heart_region heart_region;

typedef enum heart_status {
  HEART_OK = 0,
  HEART_ERR_INVALID_ARGUMENT,
  HEART_ERR_TOO_FEW_VERTICES,
  HEART_ERR_NOT_CONVEX,
  HEART_ERR_DEGENERATE,
  HEART_ERR_MONOTONICITY_VIOLATION,
  HEART_ERR_DEGENERATE_TRIANGLE,
  HEART_ERR_NOT_OBTUSE_CONFIGURATION,
  HEART_ERR_POINT_TOO_CLOSE_TO_BOUNDARY,
  HEART_ERR_PARSE,
  HEART_ERR_IO,
  HEART_ERR_INTERNAL
} heart_status;

/* polygons; from_points takes n_points (x, y) pairs in xy[0..2n) */
HEART_API heart_status heart_polygon_from_json(const char* json_text,
                                               heart_polygon** out);
HEART_API heart_status heart_polygon_from_points(const double* xy,
                                                 size_t n_points,
                                                 heart_polygon** out);
HEART_API heart_status heart_polygon_to_json(const heart_polygon* k, char** out);
HEART_API void heart_polygon_free(heart_polygon* k);
HEART_API size_t heart_polygon_vertex_count(const heart_polygon* k);
HEART_API heart_status heart_polygon_vertex(const heart_polygon* k, size_t i,
                                            double* x, double* y);
HEART_API heart_status heart_polygon_stats(const heart_polygon* k, double* area,
                                           double* diameter, double* centroid_x,
                                           double* centroid_y);
HEART_API double heart_default_tol(const heart_polygon* k);

/* maximal folding profile over n_directions; tol <= 0 selects the default */
HEART_API heart_status heart_profile_compute(const heart_polygon* k,
                                             int n_directions, double tol,
                                             heart_profile** out);
HEART_API heart_status heart_profile_to_json(const heart_profile* prof,
                                             char** out);
HEART_API void heart_profile_free(heart_profile* prof);

/* heart region */
HEART_API heart_status heart_build(const heart_polygon* k, int n_directions,
                                   double tol, heart_region** out);
HEART_API heart_status heart_region_to_json(const heart_region* h, char** out);
HEART_API void heart_region_free(heart_region* h);
HEART_API size_t heart_region_vertex_count(const heart_region* h);
HEART_API heart_status heart_region_vertex(const heart_region* h, size_t i,
                                           double* x, double* y);
HEART_API heart_status heart_region_stats(const heart_region* h, double* area,
                                          double* diameter, int* dimension);

/* analysis entry points; extra_p > 0 adds one more mu_p minimizer entry */
HEART_API heart_status heart_special_points_json(const heart_polygon* k,
                                                 int n_directions, double tol,
                                                 double extra_p, char** out);
HEART_API heart_status heart_fraenkel_json(const heart_polygon* k, double tol,
                                           double r_override, char** out);
HEART_API heart_status heart_triangle_sweep_csv(const double* t_values,
                                                size_t n_values, double b,
                                                double h, char** out);
HEART_API heart_status heart_verify_report(const heart_polygon* k,
                                           int n_directions, double tol,
                                           unsigned long long seed,
                                           int* failures, char** out);

/* error reporting; last_error is thread local and valid until the next call */
HEART_API const char* heart_last_error(void);
HEART_API const char* heart_status_name(heart_status s);
HEART_API void heart_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HEARTLIB_H */
