#pragma once

// Planar link diagrams as rotation systems.
//
// A crossing is four slots in counterclockwise order, each holding an edge label.
// Slots 0 and 2 carry the under-strand, slots 1 and 3 the over-strand. A dart is a
// (crossing, slot) pair packed as 4 * crossing + slot; a corner is named by the dart
// that starts it, i.e. corner d is the region between slot(d) and slot(d) + 1.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "turaev/outcome.hpp"

namespace turaev {

using Code = std::array<int, 4>;

constexpr int crossing_of(int dart) { return dart >> 2; }
constexpr int slot_of(int dart) { return dart & 3; }
constexpr int make_dart(int crossing, int slot) { return 4 * crossing + (slot & 3); }
constexpr int ccw(int dart) { return (dart & ~3) | ((dart + 1) & 3); }
constexpr int cw(int dart) { return (dart & ~3) | ((dart + 3) & 3); }

struct Face {
  int id = 0;
  // Boundary walk. Position p sits in corner corners[p] and leaves it along the
  // edge at dart ccw(corners[p]); the next corner is the partner of that dart.
  std::vector<int> corners;

  int degree() const { return static_cast<int>(corners.size()); }
};

enum class Color : std::uint8_t { black, white };
using Coloring = std::vector<Color>;  // indexed by face id

enum class Sign : std::int8_t { negative = -1, positive = 1 };
inline Sign operator-(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

enum class EdgeKind : std::uint8_t { alternating, non_alternating };

// Combinatorial core shared by planar and surface diagrams: partner darts, edges,
// faces traced from the rotation, connected components.
class RotationSystem {
 public:
  RotationSystem() = default;

  int crossing_count() const { return static_cast<int>(codes_.size()); }
  int edge_count() const { return static_cast<int>(labels_.size()); }
  int dart_count() const { return 4 * crossing_count(); }
  const std::vector<Code>& codes() const { return codes_; }

  int partner(int dart) const { return partner_[dart]; }
  int edge_of(int dart) const { return edge_of_dart_[dart]; }
  int label(int edge) const { return labels_[edge]; }
  int edge_index(int label) const;  // -1 when absent
  std::array<int, 2> edge_darts(int edge) const { return edge_darts_[edge]; }

  const std::vector<Face>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int face_of_corner(int corner) const { return face_of_corner_[corner]; }
  // The faces on the two sides of an edge: face of corner x and face of corner y.
  std::array<int, 2> edge_faces(int edge) const;
  // Edges along a face walk, in walk order.
  std::vector<int> face_edges(int face) const;

  int component_count() const { return component_count_; }
  int component_of(int crossing) const { return component_of_[crossing]; }
  bool is_connected() const { return component_count_ == 1; }

  bool is_alternating_edge(int edge) const;
  bool is_alternating() const;

  friend bool operator==(const RotationSystem& a, const RotationSystem& b) { return a.codes_ == b.codes_; }

 protected:
  explicit RotationSystem(std::vector<Code> codes);
  // Euler characteristic V - E + F summed over components.
  int euler_characteristic() const { return crossing_count() - edge_count() + face_count(); }

 private:
  void trace_faces();
  void find_components();

  std::vector<Code> codes_;
  std::vector<int> labels_;  // sorted; edge index = rank of label
  std::vector<int> partner_;
  std::vector<int> edge_of_dart_;
  std::vector<std::array<int, 2>> edge_darts_;
  std::vector<Face> faces_;
  std::vector<int> face_of_corner_;
  std::vector<int> component_of_;
  int component_count_ = 0;
};

// A diagram on S^2 (or a disjoint union of such, one sphere per component, as
// produced by surgery). Every component satisfies V - E + F = 2.
class PlanarDiagram : public RotationSystem {
 public:
  PlanarDiagram() = default;
  explicit PlanarDiagram(std::vector<Code> codes);
};

// Text: whitespace-separated X[a,b,c,d] terms; '#' starts a comment line;
// "key: value" header lines are accepted (only genus-free is meaningful).
// JSON: {"crossings": [[a,b,c,d], ...]}. The result must be connected.
PlanarDiagram parse_pd(std::string_view text);
PlanarDiagram parse_pd_json(std::string_view text);

struct ParsedCodes {
  std::vector<Code> codes;
  bool genus_free = false;
};
// Grammar only; no structural validation. Detects JSON by a leading '{'.
ParsedCodes parse_codes(std::string_view text);

std::string to_pd_string(const std::vector<Code>& codes);
inline std::string to_pd_string(const RotationSystem& d) { return to_pd_string(d.codes()); }
std::string to_pd_json(const std::vector<Code>& codes);

const std::vector<Face>& faces(const PlanarDiagram& d);

// Proper 2-colouring; the face holding corner `anchor_corner` is black.
Coloring checkerboard(const RotationSystem& d, int anchor_corner = 0);

std::vector<EdgeKind> edge_alternation(const RotationSystem& d);

// sign(c) = + iff corner (slot 0, slot 1) of c is black.
std::vector<Sign> crossing_signs(const RotationSystem& d, const Coloring& coloring);

struct CompositeCircle {
  std::array<int, 2> edges{};  // edge indices, edges[0] < edges[1]
  std::array<int, 2> faces{};  // faces[0] < faces[1]
  std::vector<int> side1;      // crossings, sorted; side1 holds the smallest crossing
  std::vector<int> side2;
};

std::vector<CompositeCircle> composite_circles(const RotationSystem& d);
bool is_prime(const RotationSystem& d);

// Over/under exchanged at every crossing: slots shifted cyclically by one.
PlanarDiagram mirror(const PlanarDiagram& d);
// Over/under exchanged at one crossing.
PlanarDiagram switch_crossing(const PlanarDiagram& d, int crossing);

// Connected components as separate diagrams (labels kept).
std::vector<PlanarDiagram> components(const PlanarDiagram& d);

// Relabel edges 1..E in order of first appearance.
std::vector<Code> relabel_sequential(const std::vector<Code>& codes);

// Canonical code up to crossing relabeling and 180-degree crossing rotation
// (over/under preserved). Components are canonicalised separately and sorted.
std::vector<Code> canonical_code(const RotationSystem& d);
// Canonical code of the underlying projection (over/under ignored; all four
// rotations of each crossing identified).
std::vector<Code> canonical_projection(const RotationSystem& d);

bool same_diagram(const RotationSystem& a, const RotationSystem& b);

}  // namespace turaev
