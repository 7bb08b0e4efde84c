#pragma once

// Exhaustive and seeded random generation of connected planar diagrams.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "turaev/diagram.hpp"

namespace turaev {

// Connected projections with exactly n crossings, one per canonical projection
// class, in canonical order.
std::vector<PlanarDiagram> enumerate_projections(int n);

// Every connected diagram with 1..max_crossings crossings up to relabeling,
// ordered by crossing count and then canonical code.
std::vector<PlanarDiagram> enumerate_diagrams(int max_crossings);

// Random spanning tree of crossings closed by a random non-crossing matching,
// then a random crossing mask. Connected and planar, exactly `crossings` crossings.
PlanarDiagram random_diagram(std::mt19937_64& rng, int crossings);

// `count` diagrams with crossing numbers drawn from 1..max_crossings.
std::vector<PlanarDiagram> random_corpus(std::uint64_t seed, int count, int max_crossings);

// One JSON object per diagram: canonical PD code and cached invariants.
std::string manifest_line(const PlanarDiagram& d);

}  // namespace turaev
