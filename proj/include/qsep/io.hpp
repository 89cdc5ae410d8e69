#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qsep/linalg.hpp"
#include "qsep/structure.hpp"

namespace qsep::io {

using nlohmann::json;

/// "%.12g" formatting used for every number the tools print.
std::string format_number(double x);

/// x rounded to 12 significant digits (so JSON dumps carry 12 digits);
/// magnitudes below 1e-14 become 0.
double round12(double x);

/// Row-major nested arrays of [re, im] pairs.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

/// Accepts either a bare matrix (side 4 is read as 2x2) or an object
/// {"dims": [dA, dB], "matrix": [...]}.
DensityMatrix state_from_json(const json& j, const Tolerances& tol = {});
json state_to_json(const DensityMatrix& rho);

/// Resolves a registry name ("werner:<p>", "E1".."E6", "iso:E", "iso:S",
/// "pure:<re,im,re,im,re,im,re,im>") or, failing that, a path to a JSON
/// state file. Throws qsep::Error("parse") for unknown names.
///
/// Werner parameters and amplitudes accept decimal numbers or fractions
/// such as 1/3. Pure-state amplitudes are given as four (re, im) pairs in
/// the order a11, a10, a01, a00; four plain numbers are read as real
/// amplitudes.
DensityMatrix parse_state_spec(std::string_view spec, const Tolerances& tol = {});

json report_to_json(const ClassificationReport& r);

}  // namespace qsep::io
