#pragma once

// JSON formats of every artifact the CLI reads or writes.

#include <string>
#include <variant>

#include <json.hpp>

#include "coslab/s2_grid.hpp"
#include "coslab/s2_harmonics.hpp"
#include "coslab/s2_operators.hpp"
#include "coslab/starbody.hpp"
#include "coslab/zonal.hpp"

namespace coslab {

void to_json(nlohmann::json& j, const S2Grid& g);
void to_json(nlohmann::json& j, const GridFunction& f);
void to_json(nlohmann::json& j, const HarmonicCoeffs& c);
void to_json(nlohmann::json& j, const GrassmannFunctionS2& g);
void to_json(nlohmann::json& j, const ZonalFunction& z);
void to_json(nlohmann::json& j, const StarBody& b);
void to_json(nlohmann::json& j, const ClassVerdict& v);

/// Parsers; throw ParseError on malformed input.
GridFunction grid_function_from_json(const nlohmann::json& j);
HarmonicCoeffs harmonic_coeffs_from_json(const nlohmann::json& j);
GrassmannFunctionS2 grassmann_from_json(const nlohmann::json& j);
ZonalFunction zonal_from_json(const nlohmann::json& j);
StarBody star_body_from_json(const nlohmann::json& j);

/// Any function representation an `apply` input may carry, told apart by "kind".
using Representation = std::variant<GridFunction, HarmonicCoeffs, GrassmannFunctionS2, ZonalFunction>;
Representation representation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Representation& r);

nlohmann::json read_json_file(const std::string& path);
/// Writes `j` with 2-space indentation and a trailing newline.
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace coslab
