#pragma once

#include <string>

#include "tda/landscape.hpp"
#include "tda/persistence.hpp"

namespace tda::plot {

// Self-contained SVG documents on a fixed 640x480 canvas. Axis ranges cover
// the data padded by 5%; homological dimension selects the colour. Output is
// a pure function of the input, so identical inputs give identical bytes.

/// One marker (class "point") per finite point above the diagonal; essential
/// points sit on a dashed "inf" line at the top of the plot.
std::string persistence_diagram_svg(const PersistenceDiagram& diagram);

/// One horizontal bar (class "bar") per point, grouped by dimension.
std::string barcode_svg(const PersistenceDiagram& diagram);

/// One polyline (class "level") per landscape level.
std::string landscape_svg(const Landscape& landscape);

}  // namespace tda::plot
