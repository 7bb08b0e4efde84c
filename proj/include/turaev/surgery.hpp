#pragma once

// Arc surgery on planar diagrams, cutting arcs, and the genus-reduction ladder.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "turaev/diagram.hpp"

namespace turaev {

// An arc inside one face joining the midpoints of the edges at two positions of
// the face's boundary walk.
struct FaceArc {
  int face = 0;
  std::array<int, 2> positions{};  // positions[0] < positions[1]
};

struct CuttingArc {
  FaceArc arc;
  std::array<int, 2> edges{};  // edge indices at arc.positions
  int alpha = 0;               // common s_A circle
  int beta = 0;                // common s_B circle

  friend bool operator==(const CuttingArc&, const CuttingArc&) = default;
};

// The edge pair created by a surgery. Surgering along the arc joining these two
// edges (inside the face they share) undoes the surgery.
struct AttachingEdge {
  std::array<int, 2> new_labels{};
  std::array<int, 2> cut_labels{};
  int face = 0;  // face of the original diagram that held the arc
};

struct SurgeryResult {
  PlanarDiagram diagram;  // possibly disconnected
  std::vector<AttachingEdge> attaching;
};

// Cutting arcs: both edges non-alternating, on one s_A circle and one s_B circle.
// Refuses alternating, disconnected or composite input.
Outcome<std::vector<CuttingArc>> find_cutting_arcs(const PlanarDiagram& d);

// The arc joining the two vertices of an outermost bigon between an s_A circle
// and s_B; deterministic (smallest circle id, then face id, then position).
Outcome<CuttingArc> outermost_bigon_arc(const PlanarDiagram& d);

// Cut both edges at their midpoints and rejoin the four ends by two parallel
// copies of the arc; at each endpoint the end on the same side of the arc joins
// the corresponding end at the other endpoint.
SurgeryResult surger_arc(const PlanarDiagram& d, const FaceArc& arc);
// Several arcs at once; the arcs must involve pairwise distinct edges.
SurgeryResult surger_arcs(const PlanarDiagram& d, const std::vector<FaceArc>& arcs);

// Position of an edge on a face walk, or -1.
int position_on_face(const RotationSystem& d, int face, int edge);

// Join two diagrams along one edge each (the edges given by label). The pairing
// of the four ends is the one that keeps the result planar.
PlanarDiagram join_diagrams(const PlanarDiagram& a, int label_a, const PlanarDiagram& b, int label_b);

struct AttachmentSpec {
  std::array<int, 2> labels{};
  int face = -1;  // face holding both edges; -1 picks the lowest common face
};

// Surgery along an arc joining the two designated edges. When the edges lie in
// different components the components are joined instead.
PlanarDiagram inverse_surgery(const PlanarDiagram& d, const AttachmentSpec& spec);
PlanarDiagram inverse_surgery(const PlanarDiagram& d, const AttachingEdge& attaching);

struct SplitResult {
  CuttingArc arc;                      // in the black-normalised diagram D
  PlanarDiagram d1;                    // D surgered along arc
  AttachingEdge arc_attaching;
  std::vector<CompositeCircle> circles;  // composite circles of D1
  std::vector<int> nesting_order;      // circle indices, outermost to innermost
  std::vector<FaceArc> black_arcs;     // one per circle, inside a black face of D1
  PlanarDiagram d2;                    // D1 surgered along every black arc
  std::vector<AttachingEdge> d2_attaching;
  std::vector<PlanarDiagram> components;  // components of D2
  std::vector<int> component_genus;
};

// Surgery along the outermost-bigon arc, then along the black arc of every
// composite circle. Certifies concentricity, primality of every component and
// genus additivity; a failed certificate throws InvariantViolation.
Outcome<SplitResult> split_theorem61(const PlanarDiagram& d);

// Concentricity of a family of composite circles: a total nesting order, if one exists.
std::optional<std::vector<int>> nesting_order(const std::vector<CompositeCircle>& circles, int crossing_count);

struct LadderStep {
  enum class Kind { cutting_arc, prime_split } kind = Kind::cutting_arc;
  PlanarDiagram input;
  std::optional<CuttingArc> arc;
  std::vector<AttachingEdge> attaching;
  std::vector<PlanarDiagram> outputs;
};

struct ReductionLadder {
  std::vector<LadderStep> steps;
  std::vector<PlanarDiagram> terminals;

  int cutting_steps() const;
  bool all_terminals_alternating() const;
};

ReductionLadder reduce_ladder(const PlanarDiagram& d);

}  // namespace turaev
