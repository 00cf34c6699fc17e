#pragma once

#include <string>

#include "opforge/cubes.hpp"
#include "opforge/diagrams.hpp"
#include "opforge/overlap.hpp"

namespace opforge {

/// SVG 1.1 documents with fixed layout rules, so equal input gives
/// byte-identical output.
///
/// Diagrams get two panels. The side view (group id "time") draws each
/// muffler as a rectangle spanning its time interval vertically (time runs
/// upwards) and its outer disk's width horizontally; strands are vertical
/// lines. The cross-section (group id "cross-section") draws the forest as
/// nested circles, children evenly spaced along the parent's diameter.
/// Elements carry ids: "disk-NAME", "muffler-K", "strand-K".
std::string render_svg(const InfectionDiagram& d);
/// Dimension 1 as stacked slots, dimension 2 as boxes in the unit square.
/// Higher dimensions draw the projection to the first two axes.
std::string render_svg(const CubesElement& e);
/// One bar per interval, lanes in composition order.
std::string render_svg(const OverlapElement& e);

/// Plain-text versions: a time chart with one row per muffler or interval,
/// plus the forest for diagrams.
std::string render_ascii(const InfectionDiagram& d);
std::string render_ascii(const CubesElement& e);
std::string render_ascii(const OverlapElement& e);

}  // namespace opforge
