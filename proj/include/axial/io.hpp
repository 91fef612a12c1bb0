#pragma once

#include "axial/algebra.hpp"
#include "axial/axis.hpp"
#include "axial/constructions.hpp"
#include "axial/report.hpp"

#include <json.hpp>

#include <string>

namespace axial {

using ordered_json = nlohmann::ordered_json;

/// Algebra file format: {"dim": n, "basis": [labels],
/// "products": [{"i": i, "j": j, "coeffs": [n rational strings]}]}.
/// Omitted (i, j) pairs are zero products; duplicates are an input error.
AlgebraTable algebra_from_json(const nlohmann::json& j);
ordered_json algebra_to_json(const AlgebraTable& table);
AlgebraTable load_algebra(const std::string& path);
void save_algebra(const AlgebraTable& table, const std::string& path);

/// Fischer space file format: {"points": [labels], "lines": [[i,j,k], ...]}.
FischerSpace fischer_from_json(const nlohmann::json& j);
ordered_json fischer_to_json(const FischerSpace& space);
FischerSpace load_fischer_space(const std::string& path);

ordered_json element_to_json(const Element& v);
Element element_from_json(const nlohmann::json& j, std::size_t dim);

ordered_json subspace_to_json(const Subspace& s);
ordered_json profile_to_json(const AxisProfile& profile);

/// [{"identity_id": ..., "passed": ..., "residual": [rational strings]}],
/// plus a "note" key when a note is present.
ordered_json report_to_json(const VerificationReport& report);

std::string element_str(const AlgebraTable& table, const Element& v);

} // namespace axial
