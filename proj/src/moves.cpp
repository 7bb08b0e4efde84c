#include "turaev/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "turaev/states.hpp"

namespace turaev {

int TanglePayload::crossing_type() const {
  if (!single()) throw DiagramError(DiagramError::Kind::precondition, "crossing type of a multi-crossing tangle");
  return (-codes[0][0] - 1) % 2;
}

int CycleOfTangles::crossing_count() const {
  int n = 0;
  for (const auto& p : pieces) n += p.size();
  return n;
}

CycleOfTangles cycle_of_tangles(const PlanarDiagram& d, const CycleStructure& cs) {
  const auto dec = decompose(d);
  CycleOfTangles out;
  for (int i = 0; i < cs.length(); ++i) {
    const auto& t = dec.tangles[cs.order[i]];
    std::map<int, int> port_of_dart;
    for (int p = 0; p < 4; ++p) port_of_dart[cs.ports[i][p]] = p;
    std::map<int, int> relabel;
    TanglePayload payload;
    for (int c : t.crossings) {
      Code code{};
      for (int s = 0; s < 4; ++s) {
        const int x = make_dart(c, s);
        if (auto it = port_of_dart.find(x); it != port_of_dart.end()) {
          code[s] = -(it->second + 1);
        } else {
          const int e = d.edge_of(x);
          auto [it2, fresh] = relabel.try_emplace(e, static_cast<int>(relabel.size()) + 1);
          code[s] = it2->second;
        }
      }
      payload.codes.push_back(code);
    }
    out.pieces.push_back(std::move(payload));
  }
  out.twist.assign(out.pieces.size(), false);
  return out;
}

PlanarDiagram reconstruct(const CycleOfTangles& c) {
  const int n = c.length();
  if (n < 2) throw DiagramError(DiagramError::Kind::precondition, "a cycle needs at least two tangles");
  std::vector<int> top(n), bottom(n);
  int next = 1;
  for (int i = 0; i < n; ++i) {
    top[i] = next++;
    bottom[i] = next++;
  }
  std::vector<Code> codes;
  for (int i = 0; i < n; ++i) {
    const int prev = (i + n - 1) % n;
    const std::array<int, 4> port_label{top[prev], bottom[prev], bottom[i], top[i]};  // NW, SW, SE, NE
    int internal = 0;
    for (const auto& code : c.pieces[i].codes) {
      Code out{};
      for (int s = 0; s < 4; ++s) {
        if (code[s] < 0) {
          out[s] = port_label[-code[s] - 1];
        } else {
          out[s] = next + code[s] - 1;
          internal = std::max(internal, code[s]);
        }
      }
      codes.push_back(out);
    }
    next += internal;
  }
  return PlanarDiagram(std::move(codes));
}

TanglePayload flip(const TanglePayload& t) {
  TanglePayload out;
  for (const auto& c : t.codes) {
    // Reverse the rotation, then switch: [a,b,c,d] -> [a,d,c,b] -> [b,a,d,c].
    Code f{c[1], c[0], c[3], c[2]};
    for (int& l : f)
      if (l < 0) l = -((-l - 1) ^ 1) - 1;  // NW<->SW, SE<->NE
    out.codes.push_back(f);
  }
  return out;
}

CycleOfTangles flype_adjacent(const CycleOfTangles& c, int i) {
  const int n = c.length();
  if (i < 0 || i >= n) throw DiagramError(DiagramError::Kind::precondition, "flype position out of range");
  if (!c.pieces[i].single()) throw DiagramError(DiagramError::Kind::precondition, "flype needs a single-crossing tangle");
  const int j = (i + 1) % n;
  CycleOfTangles out = c;
  out.pieces[i] = flip(c.pieces[j]);
  out.pieces[j] = c.pieces[i];
  out.twist[i] = c.twist[j];
  out.twist[j] = c.twist[i];
  if (turaev_genus(reconstruct(out)) != turaev_genus(reconstruct(c)))
    throw InvariantViolation("flype changed the Turaev genus: " + to_pd_string(reconstruct(c)));
  return out;
}

CycleOfTangles rII_cancel(const CycleOfTangles& c) {
  const bool marked = std::any_of(c.twist.begin(), c.twist.end(), [](bool b) { return b; });
  auto eligible = [&](const CycleOfTangles& x, int k) { return x.pieces[k].single() && (!marked || x.twist[k]); };
  CycleOfTangles cur = c;
  const int genus = turaev_genus(reconstruct(c));
  bool changed = true;
  while (changed && cur.length() > 2) {
    changed = false;
    const int n = cur.length();
    for (int i = 0; i < n && !changed; ++i) {
      const int j = (i + 1) % n;
      if (!eligible(cur, i) || !eligible(cur, j)) continue;
      if (cur.pieces[i].crossing_type() == cur.pieces[j].crossing_type()) continue;
      if (n - 2 < 2) continue;
      CycleOfTangles next;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) {
          next.pieces.push_back(cur.pieces[k]);
          next.twist.push_back(cur.twist[k]);
        }
      if (turaev_genus(reconstruct(next)) != genus) continue;
      cur = std::move(next);
      changed = true;
    }
  }
  return cur;
}

bool is_almost_alternating(const PlanarDiagram& d) {
  if (d.is_alternating()) return false;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (switch_crossing(d, c).is_alternating()) return true;
  return false;
}

namespace {

int alternating_switch(const PlanarDiagram& d) {
  for (int c = 0; c < d.crossing_count(); ++c)
    if (switch_crossing(d, c).is_alternating()) return c;
  return -1;
}

bool contiguous(const std::vector<bool>& marks) {
  const int n = static_cast<int>(marks.size());
  int starts = 0, count = 0;
  for (int i = 0; i < n; ++i) {
    if (marks[i]) ++count;
    if (marks[i] && !marks[(i + n - 1) % n]) ++starts;
  }
  return count == n || starts <= 1;
}

}  // namespace

Outcome<AlmostAlternatingResult> almost_alternating_form(const PlanarDiagram& d) {
  if (!d.is_connected()) return Refusal{"diagram is disconnected"};
  if (!is_prime(d)) return Refusal{"diagram is composite"};
  if (turaev_genus(d) != 1) return Refusal{"Turaev genus is not one"};
  const auto adequacy = loop_crossings(d);
  if (adequacy.verdict != Adequacy::inadequate) return Refusal{"diagram is " + to_string(adequacy.verdict)};
  auto cs = classify_genus1(d);
  if (!cs) throw InvariantViolation("prime genus-one diagram is not a cycle of 2-tangles: " + cs.refusal().reason);

  AlmostAlternatingResult result;
  result.trace.push_back({"classify", "cycle of " + std::to_string(cs->length()) + " tangles", to_pd_string(d)});
  auto finish = [&](const PlanarDiagram& out) -> Outcome<AlmostAlternatingResult> {
    const auto dec = decompose(out);
    const bool two = dec.tangles.size() == 2 &&
                     std::any_of(dec.tangles.begin(), dec.tangles.end(), [](const Tangle& t) { return t.size() == 1; });
    if (!two) return Refusal{"pipeline ended with " + std::to_string(dec.tangles.size()) +
                             " maximal tangles: " + to_pd_string(out)};
    const int c = alternating_switch(out);
    if (c < 0) throw InvariantViolation("two-tangle cycle with a single crossing is not almost alternating");
    result.diagram = out;
    result.switch_crossing = c;
    return result;
  };
  if (cs->length() == 2) return finish(d);

  CycleOfTangles cyc = cycle_of_tangles(d, *cs);
  std::vector<bool> is_loop(d.crossing_count(), false);
  for (int c : adequacy.a_loops) is_loop[c] = true;
  for (int c : adequacy.b_loops) is_loop[c] = true;
  const auto dec = decompose(d);
  for (int i = 0; i < cs->length(); ++i) {
    const auto& t = dec.tangles[cs->order[i]];
    cyc.twist[i] = t.size() == 1 && is_loop[t.crossings[0]];
  }
  for (int c = 0; c < d.crossing_count(); ++c)
    if (is_loop[c] && dec.tangles[dec.tangle_of_crossing[c]].size() != 1)
      return Refusal{"loop crossing inside a larger tangle: " + to_pd_string(d)};

  // Carry every marked crossing forward until it meets the run holding the first mark.
  const int n = cyc.length();
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  int anchor = -1;
  for (int i = 0; i < n && anchor < 0; ++i)
    if (cyc.twist[i]) anchor = i;
  int guard = 0;
  while (!contiguous(cyc.twist)) {
    if (++guard > n * n * 4) throw InvariantViolation("flype collection did not terminate");
    const int apos = static_cast<int>(std::find(id.begin(), id.end(), anchor) - id.begin());
    // The front of the anchor run.
    int front = apos;
    while (cyc.twist[(front + 1) % n] && (front + 1) % n != apos) front = (front + 1) % n;
    int pick = -1;
    for (int k = 1; k < n && pick < 0; ++k) {
      const int i = (front + k) % n;
      if (cyc.twist[i] && !cyc.twist[(i + 1) % n]) pick = i;
    }
    if (pick < 0) break;
    cyc = flype_adjacent(cyc, pick);
    std::swap(id[pick], id[(pick + 1) % n]);
    result.trace.push_back({"flype", "position " + std::to_string(pick), to_pd_string(reconstruct(cyc))});
  }
  const int before = cyc.crossing_count();
  cyc = rII_cancel(cyc);
  result.trace.push_back({"rII", std::to_string((before - cyc.crossing_count()) / 2) + " pairs cancelled",
                          to_pd_string(reconstruct(cyc))});
  const PlanarDiagram out = reconstruct(cyc);
  if (turaev_genus(out) != 1) throw InvariantViolation("move pipeline changed the Turaev genus");
  result.trace.push_back({"rebuild", std::to_string(decompose(out).tangles.size()) + " maximal tangles", to_pd_string(out)});
  auto done = finish(out);
  // Cancellation can expose new loop crossings; run again on the smaller diagram.
  if (!done && out.crossing_count() < d.crossing_count() && is_prime(out) &&
      loop_crossings(out).verdict == Adequacy::inadequate) {
    auto again = almost_alternating_form(out);
    if (!again) return again;
    AlmostAlternatingResult merged = *again;
    merged.trace.insert(merged.trace.begin(), result.trace.begin(), result.trace.end());
    return merged;
  }
  return done;
}

FaceArc core_arc(const PlanarDiagram& d, int c) {
  if (c < 0 || c >= d.crossing_count()) throw DiagramError(DiagramError::Kind::precondition, "crossing out of range");
  const auto adequacy = loop_crossings(d);
  const bool a_loop = std::count(adequacy.a_loops.begin(), adequacy.a_loops.end(), c) > 0;
  const bool b_loop = std::count(adequacy.b_loops.begin(), adequacy.b_loops.end(), c) > 0;
  if (!a_loop && !b_loop) throw DiagramError(DiagramError::Kind::precondition, "crossing is not a loop crossing");
  const Smoothing sm = a_loop ? Smoothing::A : Smoothing::B;
  const State state(d.crossing_count(), sm);
  const auto circles = state_circles(d, state);
  const auto& walk = circles.circles[circles.circle_of_dart[make_dart(c, a_loop ? 0 : 1)]].darts;

  // Split the circle at its two visits to c into two sub-arcs of leaving darts.
  const int m = static_cast<int>(walk.size());
  std::vector<int> leave;
  for (int k = 0; k < m; ++k)
    if (crossing_of(walk[k]) == c) leave.push_back(k);
  if (leave.size() != 2) throw InvariantViolation("loop crossing visited " + std::to_string(leave.size()) + " times");

  struct Candidate {
    int length;
    FaceArc arc;
  };
  std::vector<Candidate> found;
  for (int part = 0; part < 2; ++part) {
    const int from = leave[part], to = leave[1 - part];
    const int len = (to - from + m) % m;  // edges in this sub-arc
    if (len < 2) continue;
    // Corners turned at the intermediate crossings; all must lie in one face.
    std::set<int> corner_faces;
    for (int k = 1; k < len; ++k) {
      const int arrive = d.partner(walk[(from + k - 1) % m]);
      const int exit = walk[(from + k) % m];
      const int corner = ccw(arrive) == exit ? arrive : exit;
      corner_faces.insert(d.face_of_corner(corner));
    }
    if (corner_faces.size() != 1) continue;
    const int face = *corner_faces.begin();
    int p1 = position_on_face(d, face, d.edge_of(walk[from]));
    int p2 = position_on_face(d, face, d.edge_of(walk[(to + m - 1) % m]));
    if (p1 < 0 || p2 < 0 || p1 == p2) continue;
    if (p1 > p2) std::swap(p1, p2);
    found.push_back({len, FaceArc{face, {p1, p2}}});
  }
  if (found.empty()) throw InvariantViolation("no sub-arc of the loop circle runs inside one face: " + to_pd_string(d));
  std::sort(found.begin(), found.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.length, x.arc.face) < std::tie(y.length, y.arc.face);
  });
  return found.front().arc;
}

}  // namespace turaev
