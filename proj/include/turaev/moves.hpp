#pragma once

// Flypes and Reidemeister-II cancellation on cycles of 2-tangles, loop-crossing
// core arcs, and the almost-alternating reduction of inadequate genus-one diagrams.

#include <string>
#include <vector>

#include "turaev/diagram.hpp"
#include "turaev/surgery.hpp"
#include "turaev/tangles.hpp"

namespace turaev {

// A 2-tangle as free-standing codes: internal edges carry labels 1..m, and the
// slot on port p carries label -(p + 1).
struct TanglePayload {
  std::vector<Code> codes;

  int size() const { return static_cast<int>(codes.size()); }
  bool single() const { return codes.size() == 1; }
  // For a single crossing: 0 when its A-regions face west and east, 1 otherwise.
  int crossing_type() const;
  friend bool operator==(const TanglePayload&, const TanglePayload&) = default;
};

struct CycleOfTangles {
  std::vector<TanglePayload> pieces;
  std::vector<bool> twist;  // twist-region marker per piece

  int length() const { return static_cast<int>(pieces.size()); }
  int crossing_count() const;
};

CycleOfTangles cycle_of_tangles(const PlanarDiagram& d, const CycleStructure& cs);
PlanarDiagram reconstruct(const CycleOfTangles& c);

// 3D half-turn about the west-east axis: mirror of the projection plus a switch of
// every crossing; ports NW<->SW and NE<->SE.
TanglePayload flip(const TanglePayload& t);

// Move the single crossing at position i past position i+1, which is flipped.
// Throws DiagramError if position i is not a single crossing, and
// InvariantViolation if the reconstruction changes genus.
CycleOfTangles flype_adjacent(const CycleOfTangles& c, int i);

// Remove adjacent single crossings of opposite type inside the twist region
// (unmarked cycles: every single crossing), keeping at least two pieces.
CycleOfTangles rII_cancel(const CycleOfTangles& c);

bool is_almost_alternating(const PlanarDiagram& d);

struct TraceStep {
  std::string move;  // "classify", "flype", "rII", "rebuild"
  std::string detail;
  std::string pd;
};

struct AlmostAlternatingResult {
  PlanarDiagram diagram;
  int switch_crossing = -1;  // a crossing whose switch makes the diagram alternating
  std::vector<TraceStep> trace;
};

Outcome<AlmostAlternatingResult> almost_alternating_form(const PlanarDiagram& d);

// Arc in one face parallel to the shorter sub-arc of the state circle through the
// loop crossing c. Throws DiagramError if c is not a loop crossing.
FaceArc core_arc(const PlanarDiagram& d, int c);

}  // namespace turaev
