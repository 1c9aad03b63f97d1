#pragma once

#include "json.hpp"

#include "hypertet/domain.hpp"
#include "hypertet/extremal.hpp"

namespace hypertet::detail {

nlohmann::json record(const Tetrahedron& t);
nlohmann::json record(const VerificationReport& report);
nlohmann::json record(const Trajectory& trajectory);
Tetrahedron tetrahedron_from_record(const nlohmann::json& j, double tol);

/// Finite doubles as numbers, anything else as null.
nlohmann::json number(double x);

}  // namespace hypertet::detail
