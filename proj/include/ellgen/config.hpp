#pragma once

#include <string>

#include "ellgen/surface.hpp"

namespace ellgen {

/// A parsed configuration file: the surface model and any assigned coefficients.
///
/// Format (one record per line, '#' starts a comment):
///
///     [surface]
///     c1sq = 5
///     c2 = 7
///     [curve]
///     E1 genus=0 self_int=-4 exceptional=true coeff=-1
///     [intersection]
///     E1 E4 1
struct ConfigFile {
  SurfaceModel model;
  Coefficients coeffs;
};

/// Throws ParseError (with the line number) on malformed text and on
/// duplicate or undeclared labels. Model invariants are left to validate().
ConfigFile parse_config(const std::string& text);

std::string render_config(const ConfigFile& cfg);

ConfigFile read_config_file(const std::string& path);

}  // namespace ellgen
