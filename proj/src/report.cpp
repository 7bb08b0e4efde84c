#include "turaev/report.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "turaev/states.hpp"

namespace turaev::report {

namespace {

const char* sign_text(Sign s) { return s == Sign::positive ? "+" : "-"; }

Json pd_list(const std::vector<PlanarDiagram>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) out.push_back(to_pd_string(d));
  return out;
}

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

Json info(const PlanarDiagram& d) {
  Json j;
  j["crossings"] = d.crossing_count();
  j["connected"] = d.is_connected();
  if (d.is_connected()) {
    const auto g = genus_data(d);
    j["s_a"] = g.s_a;
    j["s_b"] = g.s_b;
    j["genus"] = g.genus;
  }
  j["alternating"] = d.is_alternating();
  j["prime"] = is_prime(d);
  const auto adequacy = loop_crossings(d);
  j["adequacy"] = to_string(adequacy.verdict);
  j["a_loops"] = adequacy.a_loops;
  j["b_loops"] = adequacy.b_loops;
  return j;
}

Json cycle(const CycleStructure& cs) {
  Json j;
  j["summary"] = "cycle of " + std::to_string(cs.length()) + " tangles";
  j["length"] = cs.length();
  j["order"] = cs.order;
  Json signs = Json::array();
  for (Sign s : cs.signs) signs.push_back(sign_text(s));
  j["signs"] = signs;
  j["sizes"] = cs.sizes;
  j["degenerate"] = cs.degenerate;
  j["signature_color"] = cs.signature_color == Color::black ? "black" : "white";
  j["signature_faces"] = cs.signature_faces;
  return j;
}

Json descriptor(const Genus2Descriptor& g) {
  Json j;
  j["valences"] = g.valences;
  j["non_simply_connected"] = g.non_simply_connected;
  j["vertex_valence"] = g.vertex_valence;
  Json ribbons = Json::array();
  for (const auto& r : g.ribbons) {
    Json rj;
    rj["length"] = r.length;
    rj["parity"] = r.even() ? "even" : "odd";
    rj["ends"] = r.ends;
    ribbons.push_back(rj);
  }
  j["ribbons"] = ribbons;
  j["rotation"] = g.rotation;
  j["marked_vertex"] = g.marked_vertex;
  j["max_adjacent"] = g.max_adjacent;
  j["pattern"] = g.pattern;
  j["configuration"] = g.configuration;
  if (g.case_label) j["case"] = g.case_label;
  else j["case"] = "unmatched";
  return j;
}

Json almost_alternating(const Outcome<AlmostAlternatingResult>& r) {
  Json j;
  if (!r) {
    j["status"] = "refused";
    j["reason"] = r.refusal().reason;
    return j;
  }
  j["status"] = "ok";
  j["pd"] = to_pd_string(r->diagram);
  j["switch_crossing"] = r->switch_crossing;
  j["almost_alternating"] = is_almost_alternating(r->diagram);
  Json trace = Json::array();
  for (const auto& s : r->trace) trace.push_back(Json{{"move", s.move}, {"detail", s.detail}, {"pd", s.pd}});
  j["trace"] = trace;
  return j;
}

Json classify(const PlanarDiagram& d) {
  Json j;
  if (!d.is_connected()) {
    j["refused"] = "diagram is disconnected";
    return j;
  }
  if (!is_prime(d)) {
    j["refused"] = "composite";
    return j;
  }
  const int genus = turaev_genus(d);
  j["genus"] = genus;
  if (genus == 0) {
    j["structure"] = "alternating";
  } else if (genus == 1) {
    const auto cs = classify_genus1(d);
    if (!cs) {
      // Should not happen: a genus-one diagram that is not a cycle.
      j["structure"] = "unclassified";
      j["reason"] = cs.refusal().reason;
      return j;
    }
    j["structure"] = "cycle";
    j["cycle"] = cycle(*cs);
    if (loop_crossings(d).verdict == Adequacy::inadequate) j["almost_alternating"] = almost_alternating(almost_alternating_form(d));
  } else if (genus == 2) {
    const auto g = classify_genus2(d);
    j["structure"] = "genus-two";
    j["descriptor"] = descriptor(*g);
  } else {
    j["structure"] = "not classified";
  }
  return j;
}

Json arc(const CuttingArc& a) {
  Json j;
  j["face"] = a.arc.face;
  j["positions"] = a.arc.positions;
  j["edges"] = a.edges;
  j["alpha"] = a.alpha;
  j["beta"] = a.beta;
  return j;
}

Json ladder(const ReductionLadder& l) {
  Json j;
  Json steps = Json::array();
  for (const auto& s : l.steps) {
    Json sj;
    sj["kind"] = s.kind == LadderStep::Kind::cutting_arc ? "cutting-arc" : "prime-split";
    sj["input"] = to_pd_string(s.input);
    sj["genus"] = turaev_genus(s.input);
    if (s.arc) sj["arc"] = arc(*s.arc);
    Json att = Json::array();
    for (const auto& a : s.attaching)
      att.push_back(Json{{"new_labels", a.new_labels}, {"cut_labels", a.cut_labels}, {"face", a.face}});
    sj["attaching"] = att;
    sj["outputs"] = pd_list(s.outputs);
    steps.push_back(sj);
  }
  j["steps"] = steps;
  j["cutting_steps"] = l.cutting_steps();
  j["terminals"] = pd_list(l.terminals);
  j["all_terminals_alternating"] = l.all_terminals_alternating();
  return j;
}

Json check(const SurfaceDiagram& s, int max_dual_len) {
  Json j;
  j["crossings"] = s.crossing_count();
  j["surface_genus"] = s.genus();
  j["alternating"] = s.is_alternating();
  const auto loops = two_intersection_loops(s);
  if (!loops) {
    j["refused"] = loops.refusal().reason;
    return j;
  }
  j["verdict"] = to_string(loops->verdict);
  if (loops->verdict == LoopReport::Verdict::not_applicable) return j;
  Json lj = Json::array();
  for (const auto& l : loops->loops)
    lj.push_back(Json{{"edges", l.edges}, {"faces", l.faces}, {"nontrivial", l.nontrivial}});
  j["short_loops"] = lj;
  const auto c = hayashi_complexity(s, max_dual_len);
  if (c) j["complexity"] = Json{{"value", c->value}, {"kind", to_string(c->kind)}, {"max_dual_len", max_dual_len}};
  return j;
}

std::string text(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

std::string decomposition_dot(const PlanarDiagram& d, bool collapse) {
  std::ostringstream out;
  out << "graph decomposition {\n  node [shape=circle, style=filled, fillcolor=palegreen];\n";
  const auto dec = decompose(d);
  if (!collapse || dec.alternating || !is_prime(d)) {
    for (const auto& t : dec.tangles)
      out << "  t" << t.id << " [label=\"T" << t.id << "\\nv" << t.valence() << " " << sign_text(t.sign)
          << (t.simply_connected ? "" : " annulus") << "\"];\n";
    for (const auto& e : dec.channel)
      out << "  t" << e.tangles[0] << " -- t" << e.tangles[1] << " [label=\"" << d.label(e.edge) << "\"];\n";
    out << "}\n";
    return out.str();
  }
  const auto g = contract_ribbons(d, dec);
  for (std::size_t v = 0; v < g.vertex_valence.size(); ++v)
    out << "  v" << v << " [label=\"v" << g.vertex_valence[v] << "\"];\n";
  for (std::size_t r = 0; r < g.ribbons.size(); ++r) {
    const auto& rb = g.ribbons[r];
    if (rb.ends[0] < 0) {
      out << "  r" << r << " [shape=doublecircle, label=\"ribbon cycle " << rb.length << "\"];\n";
      continue;
    }
    out << "  v" << rb.ends[0] << " -- v" << rb.ends[1] << " [style=bold, label=\"ribbon " << rb.length << "\"];\n";
  }
  // Direct channel edges: ids past the ribbons, seen at two rotation entries.
  std::map<int, std::vector<int>> seen;
  for (std::size_t k = 0; k < g.rotation.size(); ++k)
    for (int id : g.rotation[k])
      if (id >= static_cast<int>(g.ribbons.size())) seen[id].push_back(g.rotation_vertex[k]);
  for (const auto& [id, vs] : seen)
    if (vs.size() == 2) out << "  v" << vs[0] << " -- v" << vs[1] << ";\n";
  out << "}\n";
  return out.str();
}

std::string decomposition_svg(const PlanarDiagram& d) {
  const auto dec = decompose(d);
  const int n = static_cast<int>(dec.tangles.size());
  const double cx = 200, cy = 200, radius = n > 1 ? 140 : 0;
  auto pos = [&](int t) {
    const double a = 2 * M_PI * t / std::max(n, 1) - M_PI / 2;
    return std::array<double, 2>{cx + radius * std::cos(a), cy + radius * std::sin(a)};
  };
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  std::map<std::pair<int, int>, int> multiplicity;
  for (const auto& e : dec.channel) {
    const int a = std::min(e.tangles[0], e.tangles[1]), b = std::max(e.tangles[0], e.tangles[1]);
    const int k = multiplicity[{a, b}]++;
    const auto p = pos(a), q = pos(b);
    // Parallel edges fan out as quadratic curves.
    const double mx = (p[0] + q[0]) / 2, my = (p[1] + q[1]) / 2;
    const double dx = q[1] - p[1], dy = p[0] - q[0];
    const double len = std::max(1.0, std::hypot(dx, dy));
    const double off = (k % 2 ? -1 : 1) * 18.0 * ((k + 1) / 2);
    out << "  <path d=\"M " << p[0] << ' ' << p[1] << " Q " << mx + off * dx / len << ' ' << my + off * dy / len << ' '
        << q[0] << ' ' << q[1] << "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  for (const auto& t : dec.tangles) {
    const auto p = pos(t.id);
    out << "  <circle cx=\"" << p[0] << "\" cy=\"" << p[1] << "\" r=\"22\" fill=\"#7fc97f\" stroke=\"#1b7837\"/>\n";
    out << "  <text x=\"" << p[0] << "\" y=\"" << p[1] + 5 << "\" text-anchor=\"middle\" font-size=\"12\">"
        << t.valence() << sign_text(t.sign) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace turaev::report
