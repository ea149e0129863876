#pragma once

#include <string>

#include "dentedhex/counting.hpp"
#include "dentedhex/region.hpp"

namespace dhx {

enum class RenderKind { Region, FirstTiling, Paths };

// Deterministic SVG: one <polygon class="tri ..."> per cell, dents filled dark,
// forced lozenges shaded; tilings add <polygon class="loz">, paths add
// <polyline class="path">.  Geometry: vertex (i,j) -> (i + j/2, j*sqrt(3)/2),
// y growing southward (see docs/geometry.md).
std::string render_svg(const DentedHexParams& p, RenderKind kind);

// One text row per lattice row; cells read eastward.  Region view: 'A' up,
// 'V' down, '#' dent.  Tiling view labels each cell by its lozenge type
// ('/' same-row east pair, '\' same-row west pair, '=' stacked).  Paths view
// digits the cells crossed by each path, '.' elsewhere.
std::string render_ascii(const DentedHexParams& p, RenderKind kind);

}  // namespace dhx
