#pragma once

#include <string>

#include "turaev/diagram.hpp"
#include "turaev/surface.hpp"
#include "turaev/tangles.hpp"

namespace turaev::fixtures {

inline constexpr const char* kKink = "X[1,1,2,2]";
inline constexpr const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
// Trefoil with crossing 0 switched.
inline constexpr const char* kPseudoTrefoil = "X[5,1,4,2] X[3,6,4,1] X[5,2,6,3]";
// Rotations (y,x,a,b) and (b,a,x,y) with x=1, y=2, a=3, b=4; strand {x,b} over at both crossings.
inline constexpr const char* kClasp2 = "X[2,1,3,4] X[3,1,2,4]";

PlanarDiagram kink();
PlanarDiagram trefoil();
PlanarDiagram pseudo_trefoil();
PlanarDiagram clasp2();
// Two trefoils joined along one edge each.
PlanarDiagram connected_sum_of_trefoils();

// Cycle of four single crossings with signs (+,-,+,-).
PlanarDiagram cycle4();
// Inadequate genus-one cycle with sizes (3,1,1,1), signs (+,-,+,-).
PlanarDiagram aa6();

// Frozen genus-two constructions.
Genus2Recipe gen2a_recipe();  // trefoil joined to CYCLE4, then one inverse surgery: a 4-tangle in a cycle
Genus2Recipe gen2b_recipe();  // CYCLE4 joined to CYCLE4: only 2-tangles, one with four neighbours
Genus2Recipe annulus_recipe();  // a tangle with two boundary loops
PlanarDiagram gen2a();
PlanarDiagram gen2b();

// Alternating n x n grid of horizontal and vertical circles on the torus (n even).
SurfaceDiagram torus_grid(int n);
// The obstruction fixture: the 4 x 4 grid, whose faces pairwise share at most one edge.
inline SurfaceDiagram torus_grid() { return torus_grid(4); }

// Reads data/fixtures/<name>.pd from the source tree.
std::string fixture_text(const std::string& name);

}  // namespace turaev::fixtures
