#pragma once

#include "pltopo/complex.hpp"

#include <string>

namespace pltopo {

/// SVG 1.1 drawing of a planar complex: first-layer lines, oriented edges
/// (arrowheads toward increasing F), shaded flat 2-cells and vertices.
/// Throws InputError unless the input dimension is 2.
std::string export_svg(const CanonicalComplex& cx);

} // namespace pltopo
