#pragma once

// JSON, text, DOT and SVG renderings of per-diagram results for the CLI.

#include <string>

#include "json.hpp"
#include "turaev/moves.hpp"
#include "turaev/surface.hpp"
#include "turaev/surgery.hpp"
#include "turaev/tangles.hpp"

namespace turaev::report {

using Json = nlohmann::ordered_json;

// Crossings, |s_A|, |s_B|, genus, adequacy and primality.
Json info(const PlanarDiagram& d);

Json cycle(const CycleStructure& cs);
Json descriptor(const Genus2Descriptor& g);
Json almost_alternating(const Outcome<AlmostAlternatingResult>& r);

// Genus one: the cycle of tangles (and, if inadequate, the almost-alternating
// pipeline); genus two: descriptor and case label; otherwise the genus alone.
// Composite or disconnected input gives {"refused": reason}.
Json classify(const PlanarDiagram& d);

Json arc(const CuttingArc& a);
Json ladder(const ReductionLadder& l);

// Loops meeting the diagram at most twice, plus the Hayashi complexity searched
// over dual cycles of length <= max_dual_len.
Json check(const SurfaceDiagram& s, int max_dual_len);

// One "path: value" line per leaf, in document order.
std::string text(const Json& j);

// Embedded decomposition graph. With collapse, chains of 2-tangles are drawn as
// single ribbon edges (prime diagrams only).
std::string decomposition_dot(const PlanarDiagram& d, bool collapse);
std::string decomposition_svg(const PlanarDiagram& d);

}  // namespace turaev::report
