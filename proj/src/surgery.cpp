#include "turaev/surgery.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "turaev/states.hpp"

namespace turaev {

namespace {

int max_label(const RotationSystem& d) { return d.edge_count() ? d.label(d.edge_count() - 1) : 0; }

Refusal check_reducible(const PlanarDiagram& d, bool& ok) {
  ok = false;
  if (!d.is_connected()) return {"diagram is disconnected"};
  if (d.is_alternating()) return {"diagram is alternating"};
  if (!is_prime(d)) return {"diagram is composite"};
  ok = true;
  return {};
}

}  // namespace

int position_on_face(const RotationSystem& d, int face, int edge) {
  const auto& corners = d.faces()[face].corners;
  for (int p = 0; p < static_cast<int>(corners.size()); ++p)
    if (d.edge_of(ccw(corners[p])) == edge) return p;
  return -1;
}

Outcome<std::vector<CuttingArc>> find_cutting_arcs(const PlanarDiagram& d) {
  bool ok = false;
  auto why = check_reducible(d, ok);
  if (!ok) return why;
  const auto sa = state_circles(d, all_a(d));
  const auto sb = state_circles(d, all_b(d));
  std::vector<CuttingArc> out;
  for (const auto& face : d.faces()) {
    const auto edges = d.face_edges(face.id);
    for (int i = 0; i < face.degree(); ++i) {
      if (d.is_alternating_edge(edges[i])) continue;
      for (int j = i + 1; j < face.degree(); ++j) {
        if (d.is_alternating_edge(edges[j]) || edges[i] == edges[j]) continue;
        if (sa.circle_of_edge[edges[i]] != sa.circle_of_edge[edges[j]]) continue;
        if (sb.circle_of_edge[edges[i]] != sb.circle_of_edge[edges[j]]) continue;
        out.push_back(CuttingArc{{face.id, {i, j}}, {edges[i], edges[j]}, sa.circle_of_edge[edges[i]],
                                 sb.circle_of_edge[edges[i]]});
      }
    }
  }
  if (out.empty()) throw InvariantViolation("prime non-alternating diagram without a cutting arc: " + to_pd_string(d));
  return out;
}

Outcome<CuttingArc> outermost_bigon_arc(const PlanarDiagram& d) {
  auto arcs = find_cutting_arcs(d);
  if (!arcs) return arcs.refusal();
  const auto sa = state_circles(d, all_a(d));
  const auto sb = state_circles(d, all_b(d));

  for (int alpha = 0; alpha < sa.count(); ++alpha) {
    // Points of alpha ∩ s_B in order along alpha: midpoints of its non-alternating edges.
    std::vector<int> points;
    for (int dart : sa.circles[alpha].darts) {
      const int e = d.edge_of(dart);
      if (!d.is_alternating_edge(e)) points.push_back(e);
    }
    if (points.size() < 2) continue;
    std::optional<CuttingArc> best;
    const int k = static_cast<int>(points.size());
    for (int i = 0; i < k; ++i) {
      const int e1 = points[i], e2 = points[(i + 1) % k];
      if (e1 == e2 || sb.circle_of_edge[e1] != sb.circle_of_edge[e2]) continue;
      // Consecutive points on alpha joined by the same beta bound a bigon; its
      // vertices lie on the face that alpha runs along between them.
      for (const auto& arc : *arcs) {
        const bool match = (arc.edges[0] == e1 && arc.edges[1] == e2) || (arc.edges[0] == e2 && arc.edges[1] == e1);
        if (!match) continue;
        auto key = [](const CuttingArc& a) { return std::make_pair(a.arc.face, a.arc.positions); };
        if (!best || key(arc) < key(*best)) best = arc;
      }
    }
    if (best) return *best;
  }
  throw InvariantViolation("no outermost bigon arc in a prime diagram: " + to_pd_string(d));
}

SurgeryResult surger_arcs(const PlanarDiagram& d, const std::vector<FaceArc>& arcs) {
  std::vector<Code> codes = d.codes();
  auto set_label = [&](int dart, int label) { codes[crossing_of(dart)][slot_of(dart)] = label; };
  int next = max_label(d) + 1;
  std::set<int> used;
  SurgeryResult result;
  for (const auto& arc : arcs) {
    if (arc.face < 0 || arc.face >= d.face_count())
      throw DiagramError(DiagramError::Kind::precondition, "arc refers to a missing face");
    const auto& corners = d.faces()[arc.face].corners;
    const int deg = static_cast<int>(corners.size());
    const int i = arc.positions[0], j = arc.positions[1];
    if (i < 0 || j < 0 || i >= deg || j >= deg || i == j)
      throw DiagramError(DiagramError::Kind::precondition, "arc positions are not on the face");
    const int u1 = ccw(corners[i]), v1 = d.partner(u1);
    const int u2 = ccw(corners[j]), v2 = d.partner(u2);
    const int e1 = d.edge_of(u1), e2 = d.edge_of(u2);
    if (e1 == e2) throw DiagramError(DiagramError::Kind::precondition, "arc endpoints lie on the same edge");
    if (!used.insert(e1).second || !used.insert(e2).second)
      throw DiagramError(DiagramError::Kind::precondition, "simultaneous arcs share an edge");
    const int la = next++, lb = next++;
    set_label(v1, la);
    set_label(u2, la);
    set_label(v2, lb);
    set_label(u1, lb);
    result.attaching.push_back(AttachingEdge{{la, lb}, {d.label(e1), d.label(e2)}, arc.face});
  }
  result.diagram = PlanarDiagram(std::move(codes));
  return result;
}

SurgeryResult surger_arc(const PlanarDiagram& d, const FaceArc& arc) { return surger_arcs(d, {arc}); }

PlanarDiagram join_diagrams(const PlanarDiagram& a, int label_a, const PlanarDiagram& b, int label_b) {
  const int ea = a.edge_index(label_a), eb = b.edge_index(label_b);
  if (ea < 0 || eb < 0) throw DiagramError(DiagramError::Kind::precondition, "join edge label not found");
  const int shift = max_label(a);
  const int n = a.crossing_count();
  std::vector<Code> base = a.codes();
  for (auto c : b.codes()) {
    for (int& l : c) l += shift;
    base.push_back(c);
  }
  const auto [a1, a2] = a.edge_darts(ea);
  auto [b1, b2] = b.edge_darts(eb);
  b1 += 4 * n;
  b2 += 4 * n;
  const int top = shift + max_label(b);
  for (int variant = 0; variant < 2; ++variant) {
    std::vector<Code> codes = base;
    auto put = [&](int dart, int label) { codes[crossing_of(dart)][slot_of(dart)] = label; };
    put(a1, top + 1);
    put(variant ? b2 : b1, top + 1);
    put(a2, top + 2);
    put(variant ? b1 : b2, top + 2);
    try {
      return PlanarDiagram(std::move(codes));
    } catch (const DiagramError& ex) {
      if (ex.kind() != DiagramError::Kind::nonplanar) throw;
    }
  }
  throw InvariantViolation("no planar pairing joins the two diagrams");
}

PlanarDiagram inverse_surgery(const PlanarDiagram& d, const AttachmentSpec& spec) {
  const int e1 = d.edge_index(spec.labels[0]), e2 = d.edge_index(spec.labels[1]);
  if (e1 < 0 || e2 < 0 || e1 == e2)
    throw DiagramError(DiagramError::Kind::precondition, "attachment edges are missing or equal");
  const int c1 = d.component_of(crossing_of(d.edge_darts(e1)[0]));
  const int c2 = d.component_of(crossing_of(d.edge_darts(e2)[0]));
  if (c1 != c2) {
    auto parts = components(d);
    PlanarDiagram joined = join_diagrams(parts[c1], spec.labels[0], parts[c2], spec.labels[1]);
    // join_diagrams shifted the second part's labels; restore uniqueness over the rest.
    std::vector<Code> codes = joined.codes();
    int top = 0;
    for (const auto& c : codes)
      for (int l : c) top = std::max(top, l);
    for (int k = 0; k < static_cast<int>(parts.size()); ++k) {
      if (k == c1 || k == c2) continue;
      for (auto c : parts[k].codes()) {
        for (int& l : c) l += top;
        codes.push_back(c);
      }
    }
    return PlanarDiagram(std::move(codes));
  }
  int face = spec.face;
  if (face < 0) {
    auto f1 = d.edge_faces(e1), f2 = d.edge_faces(e2);
    for (int f : {std::min(f1[0], f1[1]), std::max(f1[0], f1[1])})
      if (face < 0 && (f == f2[0] || f == f2[1])) face = f;
  }
  if (face < 0) throw DiagramError(DiagramError::Kind::precondition, "attachment edges share no face");
  int p1 = position_on_face(d, face, e1), p2 = position_on_face(d, face, e2);
  if (p1 < 0 || p2 < 0) throw DiagramError(DiagramError::Kind::precondition, "attachment edges are not on the face");
  if (p1 > p2) std::swap(p1, p2);
  return surger_arc(d, FaceArc{face, {p1, p2}}).diagram;
}

PlanarDiagram inverse_surgery(const PlanarDiagram& d, const AttachingEdge& attaching) {
  return inverse_surgery(d, AttachmentSpec{attaching.new_labels, -1});
}

std::optional<std::vector<int>> nesting_order(const std::vector<CompositeCircle>& circles, int crossing_count) {
  const int k = static_cast<int>(circles.size());
  if (k == 0) return std::vector<int>{};
  std::vector<std::vector<int>> signature(crossing_count, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int c : circles[i].side2) signature[c][i] = 1;
  std::vector<std::vector<int>> regions = signature;
  std::sort(regions.begin(), regions.end());
  regions.erase(std::unique(regions.begin(), regions.end()), regions.end());
  if (static_cast<int>(regions.size()) != k + 1) return std::nullopt;
  // Adjacent regions differ in exactly one circle; the adjacency must form a path.
  const int r = k + 1;
  std::vector<std::vector<std::pair<int, int>>> adj(r);
  int edges = 0;
  for (int x = 0; x < r; ++x)
    for (int y = x + 1; y < r; ++y) {
      int diff = -1, count = 0;
      for (int i = 0; i < k; ++i)
        if (regions[x][i] != regions[y][i]) {
          diff = i;
          ++count;
        }
      if (count == 1) {
        adj[x].push_back({y, diff});
        adj[y].push_back({x, diff});
        ++edges;
      }
    }
  if (edges != k) return std::nullopt;
  int end = -1;
  for (int x = 0; x < r; ++x) {
    if (adj[x].size() > 2) return std::nullopt;
    if (adj[x].size() <= 1 && end < 0) end = x;
  }
  if (end < 0) return std::nullopt;
  std::vector<int> order;
  int prev = -1, at = end;
  while (true) {
    int step = -1;
    for (auto [y, circle] : adj[at])
      if (y != prev) {
        step = y;
        order.push_back(circle);
        break;
      }
    if (step < 0) break;
    prev = at;
    at = step;
  }
  if (static_cast<int>(order.size()) != k) return std::nullopt;
  return order;
}

Outcome<SplitResult> split_theorem61(const PlanarDiagram& d) {
  bool ok = false;
  auto why = check_reducible(d, ok);
  if (!ok) return why;
  const int genus = turaev_genus(d);

  SplitResult r;
  r.arc = *outermost_bigon_arc(d);
  auto first = surger_arc(d, r.arc.arc);
  r.d1 = std::move(first.diagram);
  r.arc_attaching = first.attaching.front();
  if (!r.d1.is_connected()) throw InvariantViolation("cutting-arc surgery disconnected a prime diagram: " + to_pd_string(d));
  if (turaev_genus(r.d1) != genus - 1) throw InvariantViolation("cutting-arc surgery did not lower the genus by one");

  // The arc's face is black; in D1 the corner entered just after the first arc
  // endpoint lies in one half of that face.
  const auto& corners = d.faces()[r.arc.arc.face].corners;
  const int black_corner = d.partner(ccw(corners[r.arc.arc.positions[0]]));
  const Coloring color = checkerboard(r.d1, black_corner);

  r.circles = composite_circles(r.d1);
  auto order = nesting_order(r.circles, r.d1.crossing_count());
  if (!order) throw InvariantViolation("composite circles of D1 are not concentric: " + to_pd_string(d));
  r.nesting_order = *order;

  std::set<int> black_faces_used;
  for (const auto& cc : r.circles) {
    const int black = color[cc.faces[0]] == Color::black ? cc.faces[0] : cc.faces[1];
    if (color[black] != Color::black) throw InvariantViolation("composite circle without a black face");
    if (!black_faces_used.insert(black).second)
      throw InvariantViolation("a black face of D1 meets two composite circles: " + to_pd_string(d));
    int p1 = position_on_face(r.d1, black, cc.edges[0]), p2 = position_on_face(r.d1, black, cc.edges[1]);
    if (p1 > p2) std::swap(p1, p2);
    r.black_arcs.push_back(FaceArc{black, {p1, p2}});
  }
  auto second = surger_arcs(r.d1, r.black_arcs);
  r.d2 = std::move(second.diagram);
  r.d2_attaching = std::move(second.attaching);
  r.components = components(r.d2);
  int sum = 0;
  for (const auto& comp : r.components) {
    if (!is_prime(comp)) throw InvariantViolation("a component of D2 is composite: " + to_pd_string(d));
    r.component_genus.push_back(turaev_genus(comp));
    sum += r.component_genus.back();
  }
  if (sum != genus - 1) throw InvariantViolation("genus of D2 components does not add up to g - 1");
  return r;
}

int ReductionLadder::cutting_steps() const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(),
                                        [](const LadderStep& s) { return s.kind == LadderStep::Kind::cutting_arc; }));
}

bool ReductionLadder::all_terminals_alternating() const {
  return std::all_of(terminals.begin(), terminals.end(), [](const PlanarDiagram& t) { return t.is_alternating(); });
}

ReductionLadder reduce_ladder(const PlanarDiagram& d) {
  if (!d.is_connected()) throw DiagramError(DiagramError::Kind::disconnected, "ladder needs a connected diagram");
  ReductionLadder ladder;
  std::vector<PlanarDiagram> work{d};
  while (!work.empty()) {
    PlanarDiagram cur = std::move(work.back());
    work.pop_back();
    if (cur.is_alternating()) {
      ladder.terminals.push_back(std::move(cur));
      continue;
    }
    LadderStep step;
    step.input = cur;
    if (!is_prime(cur)) {
      step.kind = LadderStep::Kind::prime_split;
      const auto circle = composite_circles(cur).front();
      int p1 = position_on_face(cur, circle.faces[0], circle.edges[0]);
      int p2 = position_on_face(cur, circle.faces[0], circle.edges[1]);
      if (p1 > p2) std::swap(p1, p2);
      auto res = surger_arc(cur, FaceArc{circle.faces[0], {p1, p2}});
      step.attaching = res.attaching;
      step.outputs = components(res.diagram);
    } else {
      auto split = split_theorem61(cur);
      step.kind = LadderStep::Kind::cutting_arc;
      step.arc = split->arc;
      step.attaching.push_back(split->arc_attaching);
      for (const auto& a : split->d2_attaching) step.attaching.push_back(a);
      step.outputs = split->components;
    }
    for (auto it = step.outputs.rbegin(); it != step.outputs.rend(); ++it) work.push_back(*it);
    ladder.steps.push_back(std::move(step));
  }
  return ladder;
}

}  // namespace turaev
