#include "hypertet/serialize.hpp"

#include <cmath>
#include <cstdio>

#include "hypertet/convert.hpp"
#include "hypertet/error.hpp"
#include "json_records.hpp"

namespace hypertet {

namespace detail {

using nlohmann::json;

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

namespace {

template <class Tag>
json array6(const EdgeVector<Tag>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

template <class Tag>
EdgeVector<Tag> read6(const json& j, const char* key) {
  const json& a = j.at(key);
  if (!a.is_array() || a.size() != 6)
    throw Error(ErrorCode::invalid_argument, std::string("record: \"") + key + "\" must hold 6 numbers");
  EdgeVector<Tag> out;
  for (int e = 0; e < 6; ++e) {
    if (!a[e].is_number())
      throw Error(ErrorCode::invalid_argument, std::string("record: \"") + key + "\" must hold 6 numbers");
    out[e] = a[e].get<double>();
  }
  return out;
}

}  // namespace

json record(const Tetrahedron& t) {
  return json{{"angles", array6(t.angles())}, {"lengths", array6(t.lengths())}, {"volume", number(t.volume())}};
}

json record(const VerificationReport& report) {
  json params = json::object();
  for (const auto& [k, v] : report.parameters) params[k] = number(v);
  json counters = json::object();
  for (const auto& [k, v] : report.counters) counters[k] = v;
  json witnesses = json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back(json{{"margin", number(w.margin)}, {"tetrahedron", record(w.tetra)}});
  return json{{"campaign", report.campaign},
              {"regime", report.regime},
              {"seed", report.seed},
              {"samples", report.samples},
              {"passes", report.passes},
              {"failures", report.failures()},
              {"indeterminate", report.indeterminate},
              {"worst_margin", number(report.worst_margin)},
              {"parameters", params},
              {"counters", counters},
              {"witnesses", witnesses}};
}

json record(const Trajectory& trajectory) {
  json points = json::array();
  for (const auto& p : trajectory.points)
    points.push_back(json{{"t", p.t}, {"multiplicity", p.multiplicity}, {"tetrahedron", record(p.tetra)}});
  return json{{"ell_floor", number(trajectory.ell_floor)},
              {"dt", trajectory.dt},
              {"reason", to_string(trajectory.reason)},
              {"diagnostics", trajectory.diagnostics},
              {"points", points}};
}

Tetrahedron tetrahedron_from_record(const json& j, double tol) {
  if (!j.is_object()) throw Error(ErrorCode::invalid_argument, "record: expected a JSON object");
  const bool has_angles = j.contains("angles");
  const bool has_lengths = j.contains("lengths");
  if (!has_angles && !has_lengths)
    throw Error(ErrorCode::invalid_argument, "record: needs \"angles\" or \"lengths\"");

  const Tetrahedron t = has_angles ? Tetrahedron::from_angles(read6<AngleTag>(j, "angles"))
                                   : Tetrahedron::from_lengths(read6<LengthTag>(j, "lengths"));
  if (has_angles && has_lengths) {
    const EdgeLengths given = read6<LengthTag>(j, "lengths");
    if (!(max_abs_difference(given, t.lengths()) <= tol))
      throw Error(ErrorCode::inconsistency, "record: lengths do not match angles");
  }
  if (j.contains("volume")) {
    if (!j["volume"].is_number()) throw Error(ErrorCode::invalid_argument, "record: \"volume\" must be a number");
    if (!(std::abs(j["volume"].get<double>() - t.volume()) <= tol))
      throw Error(ErrorCode::inconsistency, "record: volume does not match angles");
  }
  return t;
}

}  // namespace detail

std::string to_json(const Tetrahedron& t, int indent) { return detail::record(t).dump(indent); }

Tetrahedron tetrahedron_from_json(const std::string& text, double tol) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("record: ") + e.what());
  }
  try {
    return detail::tetrahedron_from_record(j, tol);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("record: ") + e.what());
  }
}

std::string to_json(const VerificationReport& report, int indent) { return detail::record(report).dump(indent); }

std::string to_json(const Trajectory& trajectory, int indent) {
  return detail::record(trajectory).dump(indent);
}

std::string to_csv(const Trajectory& trajectory) {
  std::string out = "t,l12,l13,l14,l34,l24,l23,volume\n";
  char buf[32];
  for (const auto& p : trajectory.points) {
    std::snprintf(buf, sizeof buf, "%.17g", p.t);
    out += buf;
    for (double x : p.tetra.lengths()) {
      std::snprintf(buf, sizeof buf, ",%.17g", x);
      out += buf;
    }
    std::snprintf(buf, sizeof buf, ",%.17g\n", p.tetra.volume());
    out += buf;
  }
  return out;
}

}  // namespace hypertet
