#pragma once

// Link diagrams cellularly embedded in closed orientable surfaces, given by a
// rotation system, plus the dual-loop searches used for Turaev-surface obstructions.

#include <string>
#include <string_view>
#include <vector>

#include "turaev/diagram.hpp"

namespace turaev {

// Same slot convention as PlanarDiagram, without the planarity requirement.
// The genus is whatever the rotation's Euler characteristic gives.
class SurfaceDiagram : public RotationSystem {
 public:
  SurfaceDiagram() = default;
  explicit SurfaceDiagram(std::vector<Code> codes);
  explicit SurfaceDiagram(const PlanarDiagram& d) : SurfaceDiagram(d.codes()) {}

  int genus() const { return (2 - euler_characteristic()) / 2; }
};

// Accepts the PD text/JSON formats; a "genus-free: true" header is allowed but not required.
SurfaceDiagram parse_surface(std::string_view text);

int surface_genus(const SurfaceDiagram& s);

// Z/2 first homology of the surface, with dual loops represented as sets of crossed edges.
class Homology {
 public:
  explicit Homology(const RotationSystem& s);

  int dimension() const { return dimension_; }
  // Intersection numbers with a fixed basis of primal cycles (spanning-tree
  // fundamental cycles); all zero iff the dual loop is null-homologous.
  std::vector<int> classify(const std::vector<int>& crossed_edges) const;
  bool is_trivial(const std::vector<int>& crossed_edges) const;

 private:
  int edge_count_ = 0;
  std::vector<std::vector<int>> primal_cycles_;  // edge index lists
  int dimension_ = 0;
};

struct DualLoop {
  std::vector<int> edges;  // crossed edges (indices), in loop order
  std::vector<int> faces;  // faces visited, in loop order
  std::vector<int> homology_class;
  bool nontrivial = false;
  int intersections() const { return static_cast<int>(edges.size()); }
};

struct LoopReport {
  std::vector<DualLoop> loops;
  int min_nontrivial_twice = -1;  // 2 if a nontrivial loop meets D exactly twice, else -1
  enum class Verdict { obstructed, unobstructed, not_applicable } verdict = Verdict::not_applicable;
};

std::string to_string(LoopReport::Verdict v);

// Dual cycles of length <= 2; refuses diagrams that are not alternating on the surface.
Outcome<LoopReport> two_intersection_loops(const SurfaceDiagram& s);

// All simple dual cycles (faces pairwise distinct) of length <= max_len, shortest first.
std::vector<DualLoop> simple_dual_cycles(const RotationSystem& s, int max_len);

struct Complexity {
  enum class Kind { exact, upper_bound, lower_bound } kind = Kind::exact;
  // exact / upper_bound: the minimum found; lower_bound: no loop up to max_len, value = max_len + 1.
  int value = 0;
};

std::string to_string(Complexity::Kind k);

// Minimum |l ∩ D| over homologically nontrivial simple dual cycles of length <= max_len.
Outcome<Complexity> hayashi_complexity(const SurfaceDiagram& s, int max_len);

}  // namespace turaev
