#include "hypertet/hypertet.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <new>
#include <string>

#include "hypertet/convert.hpp"
#include "hypertet/domain.hpp"
#include "hypertet/error.hpp"
#include "hypertet/extremal.hpp"
#include "hypertet/schlafli.hpp"
#include "hypertet/serialize.hpp"
#include "hypertet/specfun.hpp"
#include "hypertet/volume.hpp"

struct ht_string {
  std::string text;
};
struct ht_tetrahedron {
  hypertet::Tetrahedron value;
};
struct ht_report {
  hypertet::VerificationReport value;
};
struct ht_trajectory {
  hypertet::Trajectory value;
};

namespace {

using namespace hypertet;

thread_local std::string last_error;

ht_status fail(ht_status s, const char* what) {
  last_error = what;
  return s;
}

// Runs `f` and turns exceptions into status codes.
template <class F>
ht_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return HT_OK;
  } catch (const Error& e) {
    return fail(static_cast<ht_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HT_INTERNAL, e.what());
  } catch (...) {
    return fail(HT_INTERNAL, "unknown exception");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw Error(ErrorCode::invalid_argument, std::string(name) + " is null");
}

template <class V>
V read6(const double* in) {
  require(in, "input vector");
  V v;
  std::copy(in, in + 6, v.begin());
  return v;
}

template <class V>
void write6(const V& v, double* out) {
  std::copy(v.begin(), v.end(), out);
}

ht_tetrahedron* wrap(const Tetrahedron& t) { return new ht_tetrahedron{t}; }

const Tetrahedron& unwrap(const ht_tetrahedron* t) {
  require(t, "tetrahedron");
  return t->value;
}

ht_string* make_string(std::string s) { return new ht_string{std::move(s)}; }

CampaignOptions campaign_options(double tol, unsigned threads) {
  CampaignOptions o;
  o.tolerance = tol;
  o.threads = threads;
  return o;
}

}  // namespace

extern "C" {

const char* ht_version(void) { return HT_VERSION; }

const char* ht_status_name(ht_status status) {
  if (status == HT_OK) return "ok";
  if (status == HT_INTERNAL) return "internal";
  if (status >= HT_INVALID_ARGUMENT && status <= HT_NEAR_DEGENERATE)
    return to_string(static_cast<ErrorCode>(status));
  return "unknown";
}

const char* ht_last_error_message(void) { return last_error.c_str(); }

const char* ht_string_data(const ht_string* s) { return s ? s->text.c_str() : ""; }
size_t ht_string_size(const ht_string* s) { return s ? s->text.size() : 0; }
void ht_string_free(ht_string* s) { delete s; }

ht_status ht_dilog(double re, double im, double* re_out, double* im_out) {
  return guard([&] {
    require(re_out, "re_out");
    require(im_out, "im_out");
    const Complex z = dilog({re, im});
    *re_out = z.real();
    *im_out = z.imag();
  });
}

ht_status ht_lobachevsky(double theta, double* out) {
  return guard([&] {
    require(out, "out");
    *out = lobachevsky(theta);
  });
}

ht_status ht_in_O(const double angles[6], int strict, int* out) {
  return guard([&] {
    require(out, "out");
    *out = in_O(read6<DihedralAngles>(angles), strict != 0) ? 1 : 0;
  });
}

ht_status ht_angles_to_lengths(const double angles[6], double lengths_out[6]) {
  return guard([&] {
    require(lengths_out, "lengths_out");
    write6(angles_to_lengths(read6<DihedralAngles>(angles)), lengths_out);
  });
}

ht_status ht_lengths_to_angles(const double lengths[6], double angles_out[6]) {
  return guard([&] {
    require(angles_out, "angles_out");
    write6(lengths_to_angles(read6<EdgeLengths>(lengths)), angles_out);
  });
}

ht_status ht_classify_lengths(const double lengths[6], double tol, ht_membership* out) {
  return guard([&] {
    require(out, "out");
    switch (classify_lengths(read6<EdgeLengths>(lengths), tol)) {
      case Membership::inside: *out = HT_INSIDE; break;
      case Membership::outside: *out = HT_OUTSIDE; break;
      case Membership::indeterminate: *out = HT_INDETERMINATE; break;
    }
  });
}

ht_status ht_volume_of_angles(const double angles[6], double* out) {
  return guard([&] {
    require(out, "out");
    *out = ushijima_volume(read6<DihedralAngles>(angles));
  });
}

ht_status ht_volume_of_lengths(const double lengths[6], double* out) {
  return guard([&] {
    require(out, "out");
    *out = volume_of_lengths(read6<EdgeLengths>(lengths));
  });
}

ht_status ht_regular_length_l0(double* out) {
  return guard([&] {
    require(out, "out");
    *out = regular_length_l0();
  });
}

ht_status ht_regular_volume_l0(double* out) {
  return guard([&] {
    require(out, "out");
    *out = regular_volume_l0();
  });
}

ht_status ht_regular_length(double theta, double* out) {
  return guard([&] {
    require(out, "out");
    *out = regular_from_angle(theta).lengths()[0];
  });
}

ht_status ht_truncation_area(const double angles[6], double* out) {
  return guard([&] {
    require(out, "out");
    *out = truncation_area(read6<DihedralAngles>(angles));
  });
}

ht_status ht_tetrahedron_from_angles(const double angles[6], ht_tetrahedron** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(Tetrahedron::from_angles(read6<DihedralAngles>(angles)));
  });
}

ht_status ht_tetrahedron_from_lengths(const double lengths[6], double tol, ht_tetrahedron** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(Tetrahedron::from_lengths(read6<EdgeLengths>(lengths), tol));
  });
}

ht_status ht_tetrahedron_regular_from_angle(double theta, ht_tetrahedron** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(regular_from_angle(theta));
  });
}

ht_status ht_tetrahedron_regular_from_length(double ell, ht_tetrahedron** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(regular_from_length(ell));
  });
}

ht_status ht_tetrahedron_from_json(const char* text, double tol, ht_tetrahedron** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(tetrahedron_from_json(text, tol));
  });
}

ht_status ht_tetrahedron_clone(const ht_tetrahedron* t, ht_tetrahedron** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(unwrap(t));
  });
}

void ht_tetrahedron_free(ht_tetrahedron* t) { delete t; }

ht_status ht_tetrahedron_angles(const ht_tetrahedron* t, double out[6]) {
  return guard([&] {
    require(out, "out");
    write6(unwrap(t).angles(), out);
  });
}

ht_status ht_tetrahedron_lengths(const ht_tetrahedron* t, double out[6]) {
  return guard([&] {
    require(out, "out");
    write6(unwrap(t).lengths(), out);
  });
}

ht_status ht_tetrahedron_volume(const ht_tetrahedron* t, double* out) {
  return guard([&] {
    require(out, "out");
    *out = unwrap(t).volume();
  });
}

ht_status ht_tetrahedron_is_regular(const ht_tetrahedron* t, double tol, int* out) {
  return guard([&] {
    require(out, "out");
    *out = unwrap(t).is_regular(tol) ? 1 : 0;
  });
}

ht_status ht_tetrahedron_permute(const ht_tetrahedron* t, const int image[4], ht_tetrahedron** out) {
  return guard([&] {
    require(image, "image");
    require(out, "out");
    const VertexPermutation sigma({image[0], image[1], image[2], image[3]});
    *out = wrap(permute(sigma, unwrap(t)));
  });
}

ht_status ht_tetrahedron_longest_edge_first(const ht_tetrahedron* t, ht_tetrahedron** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(longest_edge_first(unwrap(t)));
  });
}

ht_status ht_tetrahedron_json(const ht_tetrahedron* t, int indent, ht_string** out) {
  return guard([&] {
    require(out, "out");
    *out = make_string(to_json(unwrap(t), indent));
  });
}

ht_status ht_dvol_dangles(const ht_tetrahedron* t, double out[6]) {
  return guard([&] {
    require(out, "out");
    write6(dvol_dangles(unwrap(t)).values, out);
  });
}

ht_status ht_dvol_dlengths(const ht_tetrahedron* t, double out[6]) {
  return guard([&] {
    require(out, "out");
    write6(dvol_dlengths(unwrap(t)).values, out);
  });
}

ht_status ht_edge12_bracket(const ht_tetrahedron* t, double* out) {
  return guard([&] {
    require(out, "out");
    *out = edge12_bracket(unwrap(t));
  });
}

ht_status ht_trig_inequality_gap(const double angles[6], double* out) {
  return guard([&] {
    require(out, "out");
    *out = trig_inequality_gap(read6<DihedralAngles>(angles));
  });
}

ht_status ht_trig_lemma_gaps(const double angles[6], double out[3]) {
  return guard([&] {
    require(out, "out");
    const TrigLemmaGaps g = trig_lemma_gaps(read6<DihedralAngles>(angles));
    out[0] = g.cross_vs_half_angle;
    out[1] = g.cross_vs_constant;
    out[2] = g.bracket_vs_half_angle;
  });
}

ht_status ht_verify_theorem(double ell, uint64_t samples, uint64_t seed, double tol, unsigned threads,
                            ht_report** out) {
  return guard([&] {
    require(out, "out");
    *out = new ht_report{verify_theorem(ell, samples, seed, campaign_options(tol, threads))};
  });
}

ht_status ht_verify_fixed_angle_sum(double theta_sum, uint64_t samples, uint64_t seed, double tol,
                                    unsigned threads, ht_report** out) {
  return guard([&] {
    require(out, "out");
    *out = new ht_report{verify_fixed_angle_sum(theta_sum, samples, seed, campaign_options(tol, threads))};
  });
}

ht_status ht_verify_average_angle(uint64_t samples, uint64_t seed, unsigned threads, ht_report** out) {
  return guard([&] {
    require(out, "out");
    *out = new ht_report{verify_average_angle(samples, seed, campaign_options(kCampaignTolerance, threads))};
  });
}

void ht_report_free(ht_report* r) { delete r; }

ht_status ht_report_counts(const ht_report* r, uint64_t* samples, uint64_t* passes, uint64_t* failures) {
  return guard([&] {
    require(r, "report");
    if (samples) *samples = r->value.samples;
    if (passes) *passes = r->value.passes;
    if (failures) *failures = r->value.failures();
  });
}

ht_status ht_report_worst_margin(const ht_report* r, double* out) {
  return guard([&] {
    require(r, "report");
    require(out, "out");
    *out = r->value.worst_margin;
  });
}

ht_status ht_report_json(const ht_report* r, int indent, ht_string** out) {
  return guard([&] {
    require(r, "report");
    require(out, "out");
    *out = make_string(to_json(r->value, indent));
  });
}

ht_status ht_deformation_flow(const ht_tetrahedron* start, double ell_floor, double dt, uint64_t max_steps,
                              ht_trajectory** out) {
  return guard([&] {
    require(out, "out");
    FlowOptions options;
    if (max_steps > 0) options.max_steps = max_steps;
    *out = new ht_trajectory{deformation_flow(unwrap(start), ell_floor, dt, options)};
  });
}

void ht_trajectory_free(ht_trajectory* tr) { delete tr; }

ht_status ht_trajectory_size(const ht_trajectory* tr, size_t* out) {
  return guard([&] {
    require(tr, "trajectory");
    require(out, "out");
    *out = tr->value.points.size();
  });
}

ht_status ht_trajectory_termination(const ht_trajectory* tr, ht_termination* out) {
  return guard([&] {
    require(tr, "trajectory");
    require(out, "out");
    *out = static_cast<ht_termination>(tr->value.reason);
  });
}

ht_status ht_trajectory_point(const ht_trajectory* tr, size_t i, double* t, int* multiplicity,
                              ht_tetrahedron** tetra) {
  return guard([&] {
    require(tr, "trajectory");
    if (i >= tr->value.points.size()) throw Error(ErrorCode::invalid_argument, "trajectory index out of range");
    const TrajectoryPoint& p = tr->value.points[i];
    if (t) *t = p.t;
    if (multiplicity) *multiplicity = p.multiplicity;
    if (tetra) *tetra = wrap(p.tetra);
  });
}

ht_status ht_trajectory_csv(const ht_trajectory* tr, ht_string** out) {
  return guard([&] {
    require(tr, "trajectory");
    require(out, "out");
    *out = make_string(to_csv(tr->value));
  });
}

ht_status ht_trajectory_json(const ht_trajectory* tr, int indent, ht_string** out) {
  return guard([&] {
    require(tr, "trajectory");
    require(out, "out");
    *out = make_string(to_json(tr->value, indent));
  });
}

ht_status ht_regular_volume_scan(const double* ells, size_t count, double* volumes_out) {
  return guard([&] {
    if (count == 0) return;
    require(ells, "ells");
    require(volumes_out, "volumes_out");
    const auto scan = regular_volume_scan(std::vector<double>(ells, ells + count));
    for (size_t k = 0; k < count; ++k) volumes_out[k] = scan[k].volume;
  });
}

ht_status ht_degeneration_path(size_t steps, double* angles_out, double* volumes_out) {
  return guard([&] {
    require(angles_out, "angles_out");
    require(volumes_out, "volumes_out");
    const auto path = degeneration_path(steps);
    for (size_t k = 0; k < path.size(); ++k) {
      write6(path[k].angles, angles_out + 6 * k);
      volumes_out[k] = path[k].volume;
    }
  });
}

ht_status ht_average_angle_test(const ht_tetrahedron* t, double ell, int* holds, int* indeterminate,
                                double* margin) {
  return guard([&] {
    const ConjectureOutcome o = average_angle_test(unwrap(t), ell);
    if (holds) *holds = o.holds ? 1 : 0;
    if (indeterminate) *indeterminate = o.indeterminate ? 1 : 0;
    if (margin) *margin = o.margin;
  });
}

ht_status ht_orbit_hull_test(const ht_tetrahedron* t, double ell, uint64_t probes, uint64_t seed, int* nonempty,
                             uint64_t* probes_used, ht_tetrahedron** witness) {
  return guard([&] {
    const OrbitHullOutcome o = orbit_hull_test(unwrap(t), ell, probes, seed);
    if (nonempty) *nonempty = o.nonempty ? 1 : 0;
    if (probes_used) *probes_used = o.probes_used;
    if (witness) *witness = o.witness ? wrap(*o.witness) : nullptr;
  });
}

}  // extern "C"
