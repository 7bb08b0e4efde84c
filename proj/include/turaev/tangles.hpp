#pragma once

// Maximal alternating tangles, the embedded decomposition graph, and the
// genus-one and genus-two structure classifiers.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "turaev/diagram.hpp"

namespace turaev {

struct Tangle {
  int id = 0;
  std::vector<int> crossings;  // sorted
  Sign sign = Sign::positive;
  // Boundary loops; each is the cyclic counterclockwise list of the tangle's
  // darts on non-alternating edges.
  std::vector<std::vector<int>> boundary;
  bool simply_connected = true;

  int size() const { return static_cast<int>(crossings.size()); }
  int boundary_points() const;
  int valence() const { return boundary_points() / 2; }
};

struct ChannelEdge {
  int edge = 0;
  std::array<int, 2> darts{};    // edge_darts order
  std::array<int, 2> tangles{};  // tangle of each dart
};

struct TangleDecomposition {
  bool alternating = false;  // no channel; a single tangle holding every crossing
  std::vector<Tangle> tangles;
  std::vector<int> tangle_of_crossing;
  std::vector<ChannelEdge> channel;
  std::vector<int> channel_of_edge;  // -1 for alternating edges
  std::vector<int> channel_faces;    // faces with a non-alternating edge on their boundary

  // Tangle at the far end of the channel edge leaving through `dart`.
  int across(const RotationSystem& d, int dart) const;
};

// Requires a connected diagram. Throws InvariantViolation if a tangle has mixed signs.
TangleDecomposition decompose(const PlanarDiagram& d);

// Ports of a 2-tangle, counterclockwise: NW, SW, SE, NE. Along a cycle, NE of one
// position is joined to NW of the next and SE to SW.
enum Port { kNW = 0, kSW = 1, kSE = 2, kNE = 3 };

struct CycleStructure {
  std::vector<int> order;                    // tangle ids in cyclic order
  std::vector<std::array<int, 2>> links;     // links[i]: channel edges (edge ids) between order[i] and order[i+1]
  std::vector<Sign> signs;                   // per position
  std::vector<int> sizes;                    // crossings per position
  std::vector<std::array<int, 4>> ports;     // boundary darts of each position, indexed by Port
  Color signature_color = Color::black;      // colour with exactly two faces carrying the channel
  std::array<int, 2> signature_faces{};
  bool degenerate = false;                   // n = 2: four parallel channel edges
  int length() const { return static_cast<int>(order.size()); }
};

Outcome<CycleStructure> classify_genus1(const PlanarDiagram& d);

// A cycle of alternating twists: piece i has sizes[i] crossings of sign signs[i];
// twists of two or more crossings are vertical. Signs must alternate around an
// even-length cycle (the channel joins tangles of opposite sign).
PlanarDiagram gen_cycle(const std::vector<Sign>& signs, const std::vector<int>& sizes);

struct Ribbon {
  int length = 0;                  // number of 2-tangles in the chain
  std::array<int, 2> ends{-1, -1};  // reduced vertices; -1 -1 for a closed ribbon cycle
  bool even() const { return length % 2 == 0; }
};

struct Genus2Descriptor {
  std::vector<int> valences;     // sorted multiset over all tangles
  bool non_simply_connected = false;
  std::vector<int> vertex_valence;         // reduced vertices
  std::vector<Ribbon> ribbons;
  // Per reduced vertex: the cyclic sequence of channel ends, each entry the id of
  // the ribbon (or direct channel edge, numbered after the ribbons) it belongs to.
  std::vector<std::vector<int>> rotation;
  std::vector<int> rotation_vertex;  // reduced vertex of each rotation entry
  bool marked_vertex = false;  // no vertex of valence >= 3; a 2-tangle stands in
  int max_adjacent = 0;        // most distinct neighbouring tangles of one tangle
  std::string pattern;         // canonical discriminator key
  // Discriminator class looked up in the case table: "nsc", "v4:blocks",
  // "v4:nested", "v4:interleaved", "v3v3:even", "v3v3:odd", "v2:adj3", "v2:adj4";
  // anything else is unmatched.
  std::string configuration;
  int case_label = 0;          // 1..8, 0 = unmatched

  std::string summary() const;
};

Genus2Descriptor contract_ribbons(const PlanarDiagram& d, const TangleDecomposition& dec);
Outcome<Genus2Descriptor> classify_genus2(const PlanarDiagram& d);

// Case table: configuration -> label, loaded from data/case_table.json.
const std::map<std::string, int>& case_table();

struct Genus2Recipe {
  std::vector<Sign> signs;  // base cycle
  std::vector<int> sizes;
  // Pieces joined at an edge of the current diagram; a join adds labels max+1, max+2.
  struct Attachment {
    int edge_label = 0;
    std::string piece;  // PD text
    int piece_label = 1;
  };
  std::vector<Attachment> attachments;
  // Final surgery: arc in the face holding both labelled edges.
  std::array<int, 2> surgery_labels{0, 0};
};

Outcome<PlanarDiagram> gen_genus2(const Genus2Recipe& recipe);

}  // namespace turaev
