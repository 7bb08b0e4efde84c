#pragma once

// Kauffman states, state circles, Turaev genus and the Turaev surface.
//
// Smoothing convention: A joins slots 0-1 and 2-3, B joins slots 1-2 and 3-0.

#include <cstdint>
#include <string>
#include <vector>

#include "turaev/diagram.hpp"
#include "turaev/surface.hpp"

namespace turaev {

enum class Smoothing : std::uint8_t { A, B };
using State = std::vector<Smoothing>;

inline State all_a(const RotationSystem& d) { return State(d.crossing_count(), Smoothing::A); }
inline State all_b(const RotationSystem& d) { return State(d.crossing_count(), Smoothing::B); }

// The slot joined to `slot` by the smoothing.
constexpr int smoothing_partner(Smoothing s, int slot) {
  return s == Smoothing::A ? (slot ^ 1) : ((slot & 1) ? (slot + 1) & 3 : (slot + 3) & 3);
}

struct StateCircle {
  // Exit darts in traversal order; step k runs along edge_of(darts[k]) from
  // darts[k] to its partner, then turns through the smoothing arc.
  std::vector<int> darts;
  int min_label = 0;
};

struct StateCircles {
  std::vector<StateCircle> circles;  // ordered by smallest edge label
  std::vector<int> circle_of_edge;
  std::vector<int> circle_of_dart;

  int count() const { return static_cast<int>(circles.size()); }
};

StateCircles state_circles(const RotationSystem& d, const State& s);

struct GenusData {
  int crossings = 0;
  int s_a = 0;
  int s_b = 0;
  int genus = 0;
};

// (c + 2 - |s_A| - |s_B|) / 2. Requires a connected diagram.
GenusData genus_data(const PlanarDiagram& d);
int turaev_genus(const PlanarDiagram& d);

struct TuraevCellComplex {
  int vertex_count = 0;
  int edge_count = 0;
  StateCircles a_cells;  // white 2-cells
  StateCircles b_cells;  // black 2-cells
  // Orientation witness: +1 keeps the traced direction, -1 reverses it. Every
  // edge is then run once in each direction by the oriented boundaries.
  std::vector<int> a_orientation;
  std::vector<int> b_orientation;
  // The diagram on F(D): rotation read off the oriented cells, each crossing
  // written so that its corner (0,1) lies in an A-cell (hence alternating on F).
  SurfaceDiagram surface;

  int cell_count() const { return a_cells.count() + b_cells.count(); }
  // V - E + F with F counted by tracing faces of `surface`.
  int euler_characteristic() const { return vertex_count - edge_count + surface.face_count(); }
  int genus() const { return (2 - euler_characteristic()) / 2; }
};

TuraevCellComplex build_turaev_complex(const PlanarDiagram& d);

enum class Adequacy { adequate, a_semi_adequate, b_semi_adequate, inadequate };
std::string to_string(Adequacy a);

struct AdequacyReport {
  std::vector<int> a_loops;   // crossings whose two A-arcs lie on one s_A circle
  std::vector<int> b_loops;
  std::vector<int> ab_loops;
  Adequacy verdict = Adequacy::adequate;
};

AdequacyReport loop_crossings(const RotationSystem& d);

}  // namespace turaev
