#include "turaev/states.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace turaev {

StateCircles state_circles(const RotationSystem& d, const State& s) {
  if (static_cast<int>(s.size()) != d.crossing_count())
    throw DiagramError(DiagramError::Kind::precondition, "state size differs from the crossing count");
  StateCircles out;
  out.circle_of_dart.assign(d.dart_count(), -1);
  out.circle_of_edge.assign(d.edge_count(), -1);

  std::vector<StateCircle> raw;
  for (int start = 0; start < d.dart_count(); ++start) {
    if (out.circle_of_dart[start] >= 0) continue;
    const int id = static_cast<int>(raw.size());
    StateCircle circle;
    circle.min_label = std::numeric_limits<int>::max();
    int dart = start;
    do {
      const int arrive = d.partner(dart);
      out.circle_of_dart[dart] = id;
      out.circle_of_dart[arrive] = id;
      circle.darts.push_back(dart);
      circle.min_label = std::min(circle.min_label, d.label(d.edge_of(dart)));
      const int c = crossing_of(arrive);
      dart = make_dart(c, smoothing_partner(s[c], slot_of(arrive)));
    } while (dart != start);
    raw.push_back(std::move(circle));
  }

  std::vector<int> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return raw[a].min_label < raw[b].min_label; });
  std::vector<int> rank(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

  for (int& c : out.circle_of_dart) c = rank[c];
  for (int e = 0; e < d.edge_count(); ++e) out.circle_of_edge[e] = out.circle_of_dart[d.edge_darts(e)[0]];
  out.circles.reserve(raw.size());
  for (int i : order) out.circles.push_back(std::move(raw[i]));
  return out;
}

GenusData genus_data(const PlanarDiagram& d) {
  if (!d.is_connected())
    throw DiagramError(DiagramError::Kind::disconnected, "Turaev genus is defined for connected diagrams");
  GenusData g;
  g.crossings = d.crossing_count();
  g.s_a = state_circles(d, all_a(d)).count();
  g.s_b = state_circles(d, all_b(d)).count();
  const int twice = g.crossings + 2 - g.s_a - g.s_b;
  if (twice < 0 || twice % 2 != 0) throw InvariantViolation("c + 2 - |s_A| - |s_B| is not a non-negative even number");
  g.genus = twice / 2;
  return g;
}

int turaev_genus(const PlanarDiagram& d) { return genus_data(d).genus; }

namespace {

// Direction in which a cell runs along an edge: +1 from edge_darts[0] to edge_darts[1].
std::vector<int> edge_directions(const RotationSystem& d, const StateCircles& sc, int& cells_seen) {
  std::vector<int> dir(d.edge_count(), 0);
  for (const auto& circle : sc.circles)
    for (int dart : circle.darts) {
      const int e = d.edge_of(dart);
      dir[e] = (d.edge_darts(e)[0] == dart) ? 1 : -1;
    }
  cells_seen += sc.count();
  return dir;
}

}  // namespace

TuraevCellComplex build_turaev_complex(const PlanarDiagram& d) {
  if (!d.is_connected())
    throw DiagramError(DiagramError::Kind::disconnected, "Turaev surface is built for connected diagrams");
  TuraevCellComplex tc;
  tc.vertex_count = d.crossing_count();
  tc.edge_count = d.edge_count();
  tc.a_cells = state_circles(d, all_a(d));
  tc.b_cells = state_circles(d, all_b(d));

  int seen = 0;
  const auto dir_a = edge_directions(d, tc.a_cells, seen);
  const auto dir_b = edge_directions(d, tc.b_cells, seen);

  // Orient the cells: along every edge, orient(A-cell) * dir_a = -orient(B-cell) * dir_b.
  const int na = tc.a_cells.count(), nb = tc.b_cells.count();
  std::vector<std::vector<std::pair<int, int>>> adj(na + nb);  // (neighbour, required product)
  for (int e = 0; e < d.edge_count(); ++e) {
    const int a = tc.a_cells.circle_of_edge[e];
    const int b = na + tc.b_cells.circle_of_edge[e];
    const int rel = -dir_a[e] * dir_b[e];  // orient(b) = rel * orient(a)
    adj[a].push_back({b, rel});
    adj[b].push_back({a, rel});
  }
  std::vector<int> orient(na + nb, 0);
  for (int root = 0; root < na + nb; ++root) {
    if (orient[root]) continue;
    orient[root] = 1;
    std::queue<int> todo;
    todo.push(root);
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop();
      for (auto [y, rel] : adj[x]) {
        if (!orient[y]) {
          orient[y] = rel * orient[x];
          todo.push(y);
        } else if (orient[y] != rel * orient[x]) {
          throw InvariantViolation("Turaev surface cells admit no coherent orientation");
        }
      }
    }
  }
  tc.a_orientation.assign(orient.begin(), orient.begin() + na);
  tc.b_orientation.assign(orient.begin() + na, orient.end());

  // Oriented face permutation phi on exit darts, then rotation sigma(x) = phi(partner(x)).
  const int darts = d.dart_count();
  std::vector<int> phi(darts, -1), cell_of_exit(darts, -1);
  auto add_cells = [&](const StateCircles& sc, const std::vector<int>& o, int base) {
    for (int i = 0; i < sc.count(); ++i) {
      const auto& walk = sc.circles[i].darts;
      const int m = static_cast<int>(walk.size());
      std::vector<int> seq(m);
      for (int k = 0; k < m; ++k) seq[k] = (o[i] > 0) ? walk[k] : d.partner(walk[m - 1 - k]);
      for (int k = 0; k < m; ++k) {
        if (phi[seq[k]] >= 0) throw InvariantViolation("dart leaves two oriented cells");
        phi[seq[k]] = seq[(k + 1) % m];
        cell_of_exit[seq[k]] = base + i;
      }
    }
  };
  add_cells(tc.a_cells, tc.a_orientation, 0);
  add_cells(tc.b_cells, tc.b_orientation, na);

  std::vector<int> sigma(darts);
  for (int x = 0; x < darts; ++x) {
    sigma[x] = phi[d.partner(x)];
    if (crossing_of(sigma[x]) != crossing_of(x)) throw InvariantViolation("rotation leaves its crossing");
  }

  std::vector<Code> codes(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c) {
    // Corner x -> sigma(x) belongs to the cell whose boundary leaves through sigma(x).
    int start = -1;
    for (int s = 0; s < 4 && start < 0; ++s) {
      const int x = make_dart(c, s);
      if (cell_of_exit[sigma[x]] < na) start = x;
    }
    int x = start;
    for (int k = 0; k < 4; ++k) {
      codes[c][k] = d.label(d.edge_of(x));
      x = sigma[x];
    }
    if (x != start) throw InvariantViolation("rotation at a crossing is not a 4-cycle");
  }
  tc.surface = SurfaceDiagram(std::move(codes));
  return tc;
}

std::string to_string(Adequacy a) {
  switch (a) {
    case Adequacy::adequate: return "adequate";
    case Adequacy::a_semi_adequate: return "A-semi-adequate";
    case Adequacy::b_semi_adequate: return "B-semi-adequate";
    case Adequacy::inadequate: return "inadequate-diagram";
  }
  return "?";
}

AdequacyReport loop_crossings(const RotationSystem& d) {
  const auto sa = state_circles(d, all_a(d));
  const auto sb = state_circles(d, all_b(d));
  AdequacyReport r;
  for (int c = 0; c < d.crossing_count(); ++c) {
    // A-arcs: slots 0-1 and 2-3; B-arcs: slots 1-2 and 3-0.
    const bool a = sa.circle_of_dart[make_dart(c, 0)] == sa.circle_of_dart[make_dart(c, 2)];
    const bool b = sb.circle_of_dart[make_dart(c, 1)] == sb.circle_of_dart[make_dart(c, 3)];
    if (a) r.a_loops.push_back(c);
    if (b) r.b_loops.push_back(c);
    if (a && b) r.ab_loops.push_back(c);
  }
  if (r.a_loops.empty() && r.b_loops.empty()) r.verdict = Adequacy::adequate;
  else if (r.a_loops.empty()) r.verdict = Adequacy::a_semi_adequate;
  else if (r.b_loops.empty()) r.verdict = Adequacy::b_semi_adequate;
  else r.verdict = Adequacy::inadequate;
  return r;
}

}  // namespace turaev
