/* C interface to the hypertet library.
 *
 * Edge vectors are double[6] in the order 12, 13, 14, 34, 24, 23.
 * Every function returning ht_status leaves its outputs untouched on failure
 * and records a message retrievable with ht_last_error_message() (per thread).
 * Handles are opaque; release each with the matching *_free function.
 */
#ifndef HYPERTET_H
#define HYPERTET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HT_BUILDING_LIBRARY)
#    define HT_API __declspec(dllexport)
#  else
#    define HT_API __declspec(dllimport)
#  endif
#else
#  define HT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ht_status {
  HT_OK = 0,
  HT_INVALID_ARGUMENT = 1,
  HT_DOMAIN = 2,
  HT_NOT_A_TETRAHEDRON = 3,
  HT_NOT_IN_CLOSURE = 4,
  HT_INCONSISTENCY = 5,
  HT_ACCURACY = 6,
  HT_EVALUATION = 7,
  HT_SAMPLING = 8,
  HT_PRECONDITION = 9,
  HT_NEAR_DEGENERATE = 10,
  HT_INTERNAL = 99
} ht_status;

typedef enum ht_membership { HT_INSIDE = 0, HT_OUTSIDE = 1, HT_INDETERMINATE = 2 } ht_membership;

typedef enum ht_termination {
  HT_TERM_MERGED = 0,
  HT_TERM_REGULAR = 1,
  HT_TERM_BOUNDARY = 2,
  HT_TERM_BUDGET = 3
} ht_termination;

typedef struct ht_string ht_string;
typedef struct ht_tetrahedron ht_tetrahedron;
typedef struct ht_report ht_report;
typedef struct ht_trajectory ht_trajectory;

HT_API const char* ht_version(void);
HT_API const char* ht_status_name(ht_status status);
HT_API const char* ht_last_error_message(void);

/* Owned strings. */
HT_API const char* ht_string_data(const ht_string* s);
HT_API size_t ht_string_size(const ht_string* s);
HT_API void ht_string_free(ht_string* s);

/* Special functions. */
HT_API ht_status ht_dilog(double re, double im, double* re_out, double* im_out);
HT_API ht_status ht_lobachevsky(double theta, double* out);

/* Angle polytope and conversions. */
HT_API ht_status ht_in_O(const double angles[6], int strict, int* out);
HT_API ht_status ht_angles_to_lengths(const double angles[6], double lengths_out[6]);
HT_API ht_status ht_lengths_to_angles(const double lengths[6], double angles_out[6]);
HT_API ht_status ht_classify_lengths(const double lengths[6], double tol, ht_membership* out);

/* Volume. */
HT_API ht_status ht_volume_of_angles(const double angles[6], double* out);
HT_API ht_status ht_volume_of_lengths(const double lengths[6], double* out);
HT_API ht_status ht_regular_length_l0(double* out);
HT_API ht_status ht_regular_volume_l0(double* out);
HT_API ht_status ht_regular_length(double theta, double* out);
HT_API ht_status ht_truncation_area(const double angles[6], double* out);

/* Tetrahedra. */
HT_API ht_status ht_tetrahedron_from_angles(const double angles[6], ht_tetrahedron** out);
HT_API ht_status ht_tetrahedron_from_lengths(const double lengths[6], double tol, ht_tetrahedron** out);
HT_API ht_status ht_tetrahedron_regular_from_angle(double theta, ht_tetrahedron** out);
HT_API ht_status ht_tetrahedron_regular_from_length(double ell, ht_tetrahedron** out);
HT_API ht_status ht_tetrahedron_from_json(const char* text, double tol, ht_tetrahedron** out);
HT_API ht_status ht_tetrahedron_clone(const ht_tetrahedron* t, ht_tetrahedron** out);
HT_API void ht_tetrahedron_free(ht_tetrahedron* t);
HT_API ht_status ht_tetrahedron_angles(const ht_tetrahedron* t, double out[6]);
HT_API ht_status ht_tetrahedron_lengths(const ht_tetrahedron* t, double out[6]);
HT_API ht_status ht_tetrahedron_volume(const ht_tetrahedron* t, double* out);
HT_API ht_status ht_tetrahedron_is_regular(const ht_tetrahedron* t, double tol, int* out);
/* image[v] is the new label of vertex v (0-based). */
HT_API ht_status ht_tetrahedron_permute(const ht_tetrahedron* t, const int image[4], ht_tetrahedron** out);
HT_API ht_status ht_tetrahedron_longest_edge_first(const ht_tetrahedron* t, ht_tetrahedron** out);
HT_API ht_status ht_tetrahedron_json(const ht_tetrahedron* t, int indent, ht_string** out);

/* Gradients and the quantities controlling dV/dl_12. */
HT_API ht_status ht_dvol_dangles(const ht_tetrahedron* t, double out[6]);
HT_API ht_status ht_dvol_dlengths(const ht_tetrahedron* t, double out[6]);
HT_API ht_status ht_edge12_bracket(const ht_tetrahedron* t, double* out);
HT_API ht_status ht_trig_inequality_gap(const double angles[6], double* out);
/* out = {cross_vs_half_angle, cross_vs_constant, bracket_vs_half_angle} */
HT_API ht_status ht_trig_lemma_gaps(const double angles[6], double out[3]);

/* Campaign reports. threads = 0 uses every hardware thread. */
HT_API ht_status ht_verify_theorem(double ell, uint64_t samples, uint64_t seed, double tol, unsigned threads,
                                   ht_report** out);
HT_API ht_status ht_verify_fixed_angle_sum(double theta_sum, uint64_t samples, uint64_t seed, double tol,
                                           unsigned threads, ht_report** out);
HT_API ht_status ht_verify_average_angle(uint64_t samples, uint64_t seed, unsigned threads, ht_report** out);
HT_API void ht_report_free(ht_report* r);
HT_API ht_status ht_report_counts(const ht_report* r, uint64_t* samples, uint64_t* passes, uint64_t* failures);
HT_API ht_status ht_report_worst_margin(const ht_report* r, double* out);
HT_API ht_status ht_report_json(const ht_report* r, int indent, ht_string** out);

/* Deformation flow. */
HT_API ht_status ht_deformation_flow(const ht_tetrahedron* start, double ell_floor, double dt, uint64_t max_steps,
                                     ht_trajectory** out);
HT_API void ht_trajectory_free(ht_trajectory* tr);
HT_API ht_status ht_trajectory_size(const ht_trajectory* tr, size_t* out);
HT_API ht_status ht_trajectory_termination(const ht_trajectory* tr, ht_termination* out);
/* Point i: parameter t, maximal-edge multiplicity, and a new tetrahedron handle. */
HT_API ht_status ht_trajectory_point(const ht_trajectory* tr, size_t i, double* t, int* multiplicity,
                                     ht_tetrahedron** tetra);
HT_API ht_status ht_trajectory_csv(const ht_trajectory* tr, ht_string** out);
HT_API ht_status ht_trajectory_json(const ht_trajectory* tr, int indent, ht_string** out);

/* Regular family and degeneration. Outputs have room for `count`/`steps` entries. */
HT_API ht_status ht_regular_volume_scan(const double* ells, size_t count, double* volumes_out);
HT_API ht_status ht_degeneration_path(size_t steps, double* angles_out /* steps*6 */, double* volumes_out);

/* Conjecture probes. */
HT_API ht_status ht_average_angle_test(const ht_tetrahedron* t, double ell, int* holds, int* indeterminate,
                                       double* margin);
/* witness may be NULL; when non-NULL it receives a handle or NULL if none was found. */
HT_API ht_status ht_orbit_hull_test(const ht_tetrahedron* t, double ell, uint64_t probes, uint64_t seed, int* nonempty,
                                    uint64_t* probes_used, ht_tetrahedron** witness);

#ifdef __cplusplus
}
#endif

#endif /* HYPERTET_H */
