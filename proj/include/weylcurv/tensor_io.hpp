#pragma once

#include <json.hpp>

#include <string>

#include "weylcurv/curvature.hpp"

namespace weylcurv {

/// {"rational": "num/den", "float": x}: lossless plus human-readable.
nlohmann::json rational_json(const Rational& r);

/// Tensor file schema: {"n": int, "components": [{"i","j","k","l","value"}]},
/// one entry per key with i<j, k<l, value a "num/den" string (or number).
/// Loading completes slot symmetry and validates the first Bianchi identity
/// exactly, rejecting with the defect value otherwise.
nlohmann::json tensor_to_json(const CurvatureTensor& r);
CurvatureTensor tensor_from_json(const nlohmann::json& j);

CurvatureTensor load_tensor_file(const std::string& path);
void save_tensor_file(const CurvatureTensor& r, const std::string& path);

nlohmann::json invariant_report_json(const InvariantReport& rep);

/// Generator specs: "sphere:N:LAMBDA", "hypersurface:a,b,c,...",
/// "conformal:a,b,c,...", "random:N:SEED:TERMS", "flat:N", "file:PATH".
CurvatureTensor tensor_from_spec(const std::string& spec);

}  // namespace weylcurv
