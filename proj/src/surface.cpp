#include "turaev/surface.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace turaev {

SurfaceDiagram::SurfaceDiagram(std::vector<Code> codes) : RotationSystem(std::move(codes)) {
  if (crossing_count() == 0) throw DiagramError(DiagramError::Kind::empty, "diagram has no crossings");
  if (!is_connected()) throw DiagramError(DiagramError::Kind::disconnected, "surface diagram is not connected");
}

SurfaceDiagram parse_surface(std::string_view text) { return SurfaceDiagram(parse_codes(text).codes); }

int surface_genus(const SurfaceDiagram& s) { return s.genus(); }

namespace {

// Fundamental cycles of a BFS spanning tree of the graph with `vertex_count`
// vertices whose edge e joins ends[e][0] and ends[e][1].
std::vector<std::vector<int>> fundamental_cycles(int vertex_count, const std::vector<std::array<int, 2>>& ends) {
  std::vector<std::vector<std::pair<int, int>>> adj(vertex_count);
  for (int e = 0; e < static_cast<int>(ends.size()); ++e) {
    adj[ends[e][0]].push_back({ends[e][1], e});
    if (ends[e][0] != ends[e][1]) adj[ends[e][1]].push_back({ends[e][0], e});
  }
  std::vector<int> parent_edge(vertex_count, -2), parent(vertex_count, -1), depth(vertex_count, 0);
  std::vector<bool> tree(ends.size(), false);
  for (int root = 0; root < vertex_count; ++root) {
    if (parent_edge[root] != -2) continue;
    parent_edge[root] = -1;
    std::queue<int> todo;
    todo.push(root);
    while (!todo.empty()) {
      int v = todo.front();
      todo.pop();
      for (auto [w, e] : adj[v]) {
        if (parent_edge[w] != -2) continue;
        parent_edge[w] = e;
        parent[w] = v;
        depth[w] = depth[v] + 1;
        tree[e] = true;
        todo.push(w);
      }
    }
  }
  std::vector<std::vector<int>> cycles;
  for (int e = 0; e < static_cast<int>(ends.size()); ++e) {
    if (tree[e]) continue;
    std::vector<int> cyc{e};
    int u = ends[e][0], v = ends[e][1];
    while (u != v) {
      if (depth[u] >= depth[v]) {
        cyc.push_back(parent_edge[u]);
        u = parent[u];
      } else {
        cyc.push_back(parent_edge[v]);
        v = parent[v];
      }
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

int rank_mod2(std::vector<std::vector<int>> rows) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != rank && rows[r][col])
        for (int k = col; k < cols; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

}  // namespace

Homology::Homology(const RotationSystem& s) : edge_count_(s.edge_count()) {
  std::vector<std::array<int, 2>> primal(s.edge_count()), dual(s.edge_count());
  for (int e = 0; e < s.edge_count(); ++e) {
    auto [x, y] = s.edge_darts(e);
    primal[e] = {crossing_of(x), crossing_of(y)};
    dual[e] = s.edge_faces(e);
  }
  primal_cycles_ = fundamental_cycles(s.crossing_count(), primal);
  const auto dual_cycles = fundamental_cycles(s.face_count(), dual);

  // Rank of the intersection pairing between dual and primal cycle spaces.
  std::vector<std::vector<int>> pairing;
  for (const auto& dc : dual_cycles) pairing.push_back(classify(dc));
  dimension_ = rank_mod2(std::move(pairing));
}

std::vector<int> Homology::classify(const std::vector<int>& crossed_edges) const {
  std::vector<int> parity(edge_count_, 0);
  for (int e : crossed_edges) parity[e] ^= 1;
  std::vector<int> out;
  out.reserve(primal_cycles_.size());
  for (const auto& cyc : primal_cycles_) {
    int x = 0;
    for (int e : cyc) x ^= parity[e];
    out.push_back(x);
  }
  return out;
}

bool Homology::is_trivial(const std::vector<int>& crossed_edges) const {
  const auto cls = classify(crossed_edges);
  return std::all_of(cls.begin(), cls.end(), [](int x) { return x == 0; });
}

std::vector<DualLoop> simple_dual_cycles(const RotationSystem& s, int max_len) {
  std::vector<std::vector<std::pair<int, int>>> adj(s.face_count());  // (face, edge)
  for (int e = 0; e < s.edge_count(); ++e) {
    auto [f, g] = s.edge_faces(e);
    adj[f].push_back({g, e});
    if (f != g) adj[g].push_back({f, e});
  }
  std::vector<DualLoop> out;
  if (max_len >= 1)
    for (int e = 0; e < s.edge_count(); ++e) {
      auto [f, g] = s.edge_faces(e);
      if (f == g) out.push_back(DualLoop{{e}, {f}, {}, false});
    }

  for (int len = 2; len <= max_len; ++len) {
    for (int start = 0; start < s.face_count(); ++start) {
      std::vector<int> faces{start}, edges;
      std::vector<bool> on_path(s.face_count(), false);
      on_path[start] = true;
      std::function<void()> extend = [&]() {
        const int here = faces.back();
        const int depth = static_cast<int>(edges.size());
        for (auto [next, e] : adj[here]) {
          if (next == here) continue;
          if (depth + 1 == len) {
            // Close the cycle; each cycle is met in two directions, keep one.
            if (next == start && len >= 2 && (edges.empty() || edges.front() < e)) {
              if (len == 2 && edges.front() == e) continue;
              DualLoop loop;
              loop.faces = faces;
              loop.edges = edges;
              loop.edges.push_back(e);
              out.push_back(std::move(loop));
            }
            continue;
          }
          if (next <= start || on_path[next]) continue;
          on_path[next] = true;
          faces.push_back(next);
          edges.push_back(e);
          extend();
          edges.pop_back();
          faces.pop_back();
          on_path[next] = false;
        }
      };
      extend();
    }
  }
  return out;
}

std::string to_string(LoopReport::Verdict v) {
  switch (v) {
    case LoopReport::Verdict::obstructed: return "obstructed";
    case LoopReport::Verdict::unobstructed: return "unobstructed";
    case LoopReport::Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

std::string to_string(Complexity::Kind k) {
  switch (k) {
    case Complexity::Kind::exact: return "exact";
    case Complexity::Kind::upper_bound: return "upper-bound";
    case Complexity::Kind::lower_bound: return "lower-bound";
  }
  return "?";
}

Outcome<LoopReport> two_intersection_loops(const SurfaceDiagram& s) {
  if (!s.is_alternating()) return Refusal{"diagram is not alternating on the surface"};
  LoopReport report;
  if (s.genus() == 0) {
    report.verdict = LoopReport::Verdict::not_applicable;
    return report;
  }
  const Homology h(s);
  report.loops = simple_dual_cycles(s, 2);
  for (auto& loop : report.loops) {
    loop.homology_class = h.classify(loop.edges);
    loop.nontrivial = std::any_of(loop.homology_class.begin(), loop.homology_class.end(), [](int x) { return x; });
    if (loop.nontrivial && loop.intersections() == 2) report.min_nontrivial_twice = 2;
  }
  report.verdict = report.min_nontrivial_twice == 2 ? LoopReport::Verdict::unobstructed : LoopReport::Verdict::obstructed;
  return report;
}

Outcome<Complexity> hayashi_complexity(const SurfaceDiagram& s, int max_len) {
  if (s.genus() == 0) return Refusal{"surface has genus 0"};
  const Homology h(s);
  // Lengths in increasing order, so the first nontrivial loop is minimal.
  for (const auto& loop : simple_dual_cycles(s, max_len)) {
    if (h.is_trivial(loop.edges)) continue;
    Complexity c;
    c.value = loop.intersections();
    // A separating loop meets D an even number of times, so nothing nontrivial
    // and essential can undercut a length <= 2 hit.
    c.kind = c.value <= 2 ? Complexity::Kind::exact : Complexity::Kind::upper_bound;
    return c;
  }
  return Complexity{Complexity::Kind::lower_bound, max_len + 1};
}

}  // namespace turaev
