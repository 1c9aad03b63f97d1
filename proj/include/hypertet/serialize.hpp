#pragma once

// Text records: the Tetrahedron JSON record, verification reports as JSON,
// trajectories as CSV or JSON.

#include <string>

#include "hypertet/domain.hpp"
#include "hypertet/extremal.hpp"

namespace hypertet {

/// {"angles":[6],"lengths":[6],"volume":v}; indent < 0 gives one line.
std::string to_json(const Tetrahedron& t, int indent = -1);

/// Parses a Tetrahedron record. Either "angles" or "lengths" may be omitted;
/// fields that are present must agree with the rebuilt tetrahedron to `tol`
/// (Error(inconsistency) otherwise). Malformed input raises
/// Error(invalid_argument).
Tetrahedron tetrahedron_from_json(const std::string& text, double tol = 1e-9);

std::string to_json(const VerificationReport& report, int indent = -1);

/// Header t,l12,l13,l14,l34,l24,l23,volume then one row per point.
std::string to_csv(const Trajectory& trajectory);
std::string to_json(const Trajectory& trajectory, int indent = -1);

}  // namespace hypertet
