#include "turaev/tangles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "turaev/states.hpp"

namespace turaev {

int Tangle::boundary_points() const {
  int n = 0;
  for (const auto& loop : boundary) n += static_cast<int>(loop.size());
  return n;
}

int TangleDecomposition::across(const RotationSystem& d, int dart) const {
  return tangle_of_crossing[crossing_of(d.partner(dart))];
}

TangleDecomposition decompose(const PlanarDiagram& d) {
  if (!d.is_connected()) throw DiagramError(DiagramError::Kind::disconnected, "decomposition needs a connected diagram");
  TangleDecomposition dec;
  const int n = d.crossing_count();
  dec.tangle_of_crossing.assign(n, -1);
  dec.channel_of_edge.assign(d.edge_count(), -1);

  const auto signs = crossing_signs(d, checkerboard(d));
  for (int root = 0; root < n; ++root) {
    if (dec.tangle_of_crossing[root] >= 0) continue;
    Tangle t;
    t.id = static_cast<int>(dec.tangles.size());
    t.sign = signs[root];
    std::queue<int> todo;
    todo.push(root);
    dec.tangle_of_crossing[root] = t.id;
    while (!todo.empty()) {
      const int c = todo.front();
      todo.pop();
      t.crossings.push_back(c);
      if (signs[c] != t.sign) throw InvariantViolation("alternating tangle with mixed signs: " + to_pd_string(d));
      for (int s = 0; s < 4; ++s) {
        const int x = make_dart(c, s);
        if (!d.is_alternating_edge(d.edge_of(x))) continue;
        const int y = crossing_of(d.partner(x));
        if (dec.tangle_of_crossing[y] < 0) {
          dec.tangle_of_crossing[y] = t.id;
          todo.push(y);
        }
      }
    }
    std::sort(t.crossings.begin(), t.crossings.end());
    dec.tangles.push_back(std::move(t));
  }

  // Boundary loops: from a boundary dart, walk its face until the walk leaves on
  // a non-alternating edge; the walk never leaves the tangle.
  std::vector<bool> seen(d.dart_count(), false);
  for (auto& t : dec.tangles) {
    for (int c : t.crossings)
      for (int s = 0; s < 4; ++s) {
        const int start = make_dart(c, s);
        if (seen[start] || d.is_alternating_edge(d.edge_of(start))) continue;
        std::vector<int> loop;
        int x = start;
        do {
          seen[x] = true;
          loop.push_back(x);
          int u = ccw(x);
          while (d.is_alternating_edge(d.edge_of(u))) u = ccw(d.partner(u));
          x = u;
        } while (x != start);
        t.boundary.push_back(std::move(loop));
      }
    t.simply_connected = t.boundary.size() <= 1;
    if (t.boundary_points() % 2 != 0) throw InvariantViolation("tangle with an odd number of boundary points");
  }

  for (int e = 0; e < d.edge_count(); ++e) {
    if (d.is_alternating_edge(e)) continue;
    ChannelEdge ch;
    ch.edge = e;
    ch.darts = d.edge_darts(e);
    ch.tangles = {dec.tangle_of_crossing[crossing_of(ch.darts[0])], dec.tangle_of_crossing[crossing_of(ch.darts[1])]};
    dec.channel_of_edge[e] = static_cast<int>(dec.channel.size());
    dec.channel.push_back(ch);
  }
  dec.alternating = dec.channel.empty();

  for (int f = 0; f < d.face_count(); ++f) {
    const auto edges = d.face_edges(f);
    if (std::any_of(edges.begin(), edges.end(), [&](int e) { return !d.is_alternating_edge(e); }))
      dec.channel_faces.push_back(f);
  }
  return dec;
}

namespace {

// Rotation positions of `loop` whose channel edges lead to `other`.
std::vector<int> positions_towards(const RotationSystem& d, const TangleDecomposition& dec, const std::vector<int>& loop,
                                   int other) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(loop.size()); ++k)
    if (dec.across(d, loop[k]) == other) out.push_back(k);
  return out;
}

bool cyclically_adjacent(int a, int b, int n) { return (a + 1) % n == b || (b + 1) % n == a; }

}  // namespace

Outcome<CycleStructure> classify_genus1(const PlanarDiagram& d) {
  if (!d.is_connected()) return Refusal{"diagram is disconnected"};
  if (d.is_alternating()) return Refusal{"diagram is alternating"};
  if (!is_prime(d)) return Refusal{"diagram is composite"};
  const auto dec = decompose(d);
  for (const auto& t : dec.tangles) {
    if (!t.simply_connected) return Refusal{"tangle " + std::to_string(t.id) + " is not simply connected"};
    if (t.valence() != 2)
      return Refusal{"tangle " + std::to_string(t.id) + " has valence " + std::to_string(t.valence())};
  }
  const int n = static_cast<int>(dec.tangles.size());

  // West pair (towards the previous position) of each tangle, as the rotation index of NW.
  std::vector<int> west(n, -1), order;
  if (n == 2) {
    const auto& loop0 = dec.tangles[0].boundary[0];
    const auto& loop1 = dec.tangles[1].boundary[0];
    if (positions_towards(d, dec, loop0, 1).size() != 4) return Refusal{"channel is not a cycle"};
    // Position 0 takes rotation indices {0,1} as its west pair; the pairing must
    // be adjacent at tangle 1 as well.
    for (int shift = 0; shift < 2 && west[0] < 0; ++shift) {
      const int a = d.partner(loop0[shift]), b = d.partner(loop0[shift + 1]);
      const int ia = static_cast<int>(std::find(loop1.begin(), loop1.end(), a) - loop1.begin());
      const int ib = static_cast<int>(std::find(loop1.begin(), loop1.end(), b) - loop1.begin());
      if (!cyclically_adjacent(ia, ib, 4)) continue;
      west[0] = shift;
      // Tangle 1's west pair is the one meeting tangle 0's east pair.
      const int ea = d.partner(loop0[(shift + 2) % 4]);
      const int ja = static_cast<int>(std::find(loop1.begin(), loop1.end(), ea) - loop1.begin());
      const int jb = static_cast<int>(std::find(loop1.begin(), loop1.end(), d.partner(loop0[(shift + 3) % 4])) - loop1.begin());
      west[1] = (ja + 1) % 4 == jb ? ja : jb;
    }
    if (west[0] < 0) return Refusal{"channel pairs are not adjacent in rotation"};
    order = {0, 1};
  } else {
    // Every tangle meets exactly two others, twice each, through adjacent boundary points.
    std::vector<std::array<int, 2>> nbrs(n);
    for (const auto& t : dec.tangles) {
      const auto& loop = t.boundary[0];
      std::set<int> others;
      for (int x : loop) others.insert(dec.across(d, x));
      if (others.size() != 2) return Refusal{"channel is not a cycle"};
      int k = 0;
      for (int o : others) {
        auto pos = positions_towards(d, dec, loop, o);
        if (pos.size() != 2 || !cyclically_adjacent(pos[0], pos[1], 4))
          return Refusal{"channel is not a cycle of paired edges"};
        nbrs[t.id][k++] = o;
      }
    }
    order.push_back(0);
    int prev = nbrs[0][0], cur = 0;  // walk away from nbrs[0][0]
    while (true) {
      const int next = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
      if (next == 0) break;
      if (static_cast<int>(order.size()) == n) return Refusal{"channel is not a cycle"};
      order.push_back(next);
      prev = cur;
      cur = next;
    }
    if (static_cast<int>(order.size()) != n) return Refusal{"channel graph is not a single cycle"};
    for (int i = 0; i < n; ++i) {
      const int t = order[i], p = order[(i + n - 1) % n];
      const auto& loop = dec.tangles[t].boundary[0];
      auto pos = positions_towards(d, dec, loop, p);
      west[t] = (pos[0] + 1) % 4 == pos[1] ? pos[0] : pos[1];
    }
  }

  CycleStructure cs;
  cs.order = order;
  cs.degenerate = n == 2;
  for (int i = 0; i < n; ++i) {
    const auto& t = dec.tangles[order[i]];
    const auto& loop = t.boundary[0];
    std::array<int, 4> ports{};
    for (int p = 0; p < 4; ++p) ports[p] = loop[(west[t.id] + p) % 4];
    cs.ports.push_back(ports);
    cs.signs.push_back(t.sign);
    cs.sizes.push_back(t.size());
  }
  for (int i = 0; i < n; ++i) {
    const auto& here = cs.ports[i];
    const auto& next = cs.ports[(i + 1) % n];
    if (d.partner(here[kNE]) != next[kNW] || d.partner(here[kSE]) != next[kSW])
      throw InvariantViolation("cycle ports do not glue NE to NW and SE to SW: " + to_pd_string(d));
    cs.links.push_back({d.edge_of(here[kNE]), d.edge_of(here[kSE])});
  }

  // Exactly two faces of one colour carry every non-alternating edge.
  const auto color = checkerboard(d);
  bool found = false;
  for (Color c : {Color::black, Color::white}) {
    std::vector<int> fs;
    for (int f : dec.channel_faces)
      if (color[f] == c) fs.push_back(f);
    if (fs.size() == 2 && !found) {
      found = true;
      cs.signature_color = c;
      cs.signature_faces = {fs[0], fs[1]};
    }
  }
  if (!found) throw InvariantViolation("cycle of 2-tangles without the two-face channel signature: " + to_pd_string(d));
  return cs;
}

PlanarDiagram gen_cycle(const std::vector<Sign>& signs, const std::vector<int>& sizes) {
  const int n = static_cast<int>(signs.size());
  if (n < 2 || static_cast<int>(sizes.size()) != n)
    throw DiagramError(DiagramError::Kind::precondition, "a cycle needs at least two tangles and one size per tangle");
  if (std::all_of(signs.begin(), signs.end(), [&](Sign s) { return s == signs[0]; }))
    throw DiagramError(DiagramError::Kind::precondition, "constant signs give an alternating diagram");
  for (int i = 0; i < n; ++i) {
    if (sizes[i] < 1) throw DiagramError(DiagramError::Kind::precondition, "tangle sizes must be positive");
    if (signs[i] == signs[(i + 1) % n])
      throw DiagramError(DiagramError::Kind::precondition, "neighbouring tangles of a cycle have opposite signs");
  }

  int next_label = 1;
  // Gluing labels: top[i] joins NE_i to NW_{i+1}, bottom[i] joins SE_i to SW_{i+1}.
  std::vector<int> top(n), bottom(n);
  for (int i = 0; i < n; ++i) {
    top[i] = next_label++;
    bottom[i] = next_label++;
  }
  std::vector<Code> codes;
  for (int i = 0; i < n; ++i) {
    const int k = sizes[i];
    const int r = signs[i] == Sign::positive ? 0 : 1;
    // Local port labels of each crossing of the vertical twist, top to bottom.
    std::vector<std::array<int, 4>> local(k);
    local[0][kNW] = top[(i + n - 1) % n];
    local[0][kNE] = top[i];
    local[k - 1][kSW] = bottom[(i + n - 1) % n];
    local[k - 1][kSE] = bottom[i];
    for (int m = 0; m + 1 < k; ++m) {
      local[m][kSW] = local[m + 1][kNW] = next_label++;
      local[m][kSE] = local[m + 1][kNE] = next_label++;
    }
    for (int m = 0; m < k; ++m) {
      Code c{};
      for (int j = 0; j < 4; ++j) c[j] = local[m][(j + r) % 4];
      codes.push_back(c);
    }
  }
  PlanarDiagram d(std::move(codes));
  if (turaev_genus(d) != 1) throw InvariantViolation("generated cycle does not have genus one: " + to_pd_string(d));
  return d;
}

}  // namespace turaev
