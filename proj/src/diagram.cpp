#include "turaev/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace turaev {

namespace {

std::string describe_label_count(int label, int count) {
  std::ostringstream os;
  os << "edge label " << label << " appears " << count << " times (expected 2)";
  return os.str();
}

}  // namespace

RotationSystem::RotationSystem(std::vector<Code> codes) : codes_(std::move(codes)) {
  std::map<int, int> count;
  for (const auto& code : codes_)
    for (int label : code) ++count[label];
  for (auto [label, n] : count)
    if (n != 2) throw DiagramError(DiagramError::Kind::multiplicity, describe_label_count(label, n));

  labels_.reserve(count.size());
  for (const auto& kv : count) labels_.push_back(kv.first);

  const int darts = dart_count();
  partner_.assign(darts, -1);
  edge_of_dart_.assign(darts, -1);
  edge_darts_.assign(labels_.size(), {-1, -1});
  for (int d = 0; d < darts; ++d) {
    const int e = edge_index(codes_[crossing_of(d)][slot_of(d)]);
    edge_of_dart_[d] = e;
    auto& ends = edge_darts_[e];
    if (ends[0] < 0) {
      ends[0] = d;
    } else {
      ends[1] = d;
      partner_[ends[0]] = d;
      partner_[d] = ends[0];
    }
  }
  trace_faces();
  find_components();
}

int RotationSystem::edge_index(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

void RotationSystem::trace_faces() {
  const int darts = dart_count();
  face_of_corner_.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (face_of_corner_[start] >= 0) continue;
    Face face;
    face.id = static_cast<int>(faces_.size());
    int corner = start;
    do {
      face_of_corner_[corner] = face.id;
      face.corners.push_back(corner);
      corner = partner_[ccw(corner)];
    } while (corner != start);
    faces_.push_back(std::move(face));
  }
}

void RotationSystem::find_components() {
  const int n = crossing_count();
  component_of_.assign(n, -1);
  component_count_ = 0;
  for (int s = 0; s < n; ++s) {
    if (component_of_[s] >= 0) continue;
    std::queue<int> todo;
    todo.push(s);
    component_of_[s] = component_count_;
    while (!todo.empty()) {
      const int c = todo.front();
      todo.pop();
      for (int slot = 0; slot < 4; ++slot) {
        const int other = crossing_of(partner_[make_dart(c, slot)]);
        if (component_of_[other] < 0) {
          component_of_[other] = component_count_;
          todo.push(other);
        }
      }
    }
    ++component_count_;
  }
}

std::array<int, 2> RotationSystem::edge_faces(int edge) const {
  const auto [x, y] = edge_darts_[edge];
  return {face_of_corner_[x], face_of_corner_[y]};
}

std::vector<int> RotationSystem::face_edges(int face) const {
  std::vector<int> out;
  out.reserve(faces_[face].corners.size());
  for (int corner : faces_[face].corners) out.push_back(edge_of_dart_[ccw(corner)]);
  return out;
}

bool RotationSystem::is_alternating_edge(int edge) const {
  const auto [x, y] = edge_darts_[edge];
  return (slot_of(x) & 1) != (slot_of(y) & 1);
}

bool RotationSystem::is_alternating() const {
  for (int e = 0; e < edge_count(); ++e)
    if (!is_alternating_edge(e)) return false;
  return true;
}

PlanarDiagram::PlanarDiagram(std::vector<Code> codes) : RotationSystem(std::move(codes)) {
  if (crossing_count() == 0) throw DiagramError(DiagramError::Kind::empty, "diagram has no crossings");
  // Faces are traced per component, so planarity means V - E + F = 2 per component.
  if (euler_characteristic() != 2 * component_count()) {
    std::ostringstream os;
    os << "rotation is not planar: V - E + F = " << euler_characteristic() << " over "
       << component_count() << " component(s)";
    throw DiagramError(DiagramError::Kind::nonplanar, os.str());
  }
}

ParsedCodes parse_codes(std::string_view text) {
  ParsedCodes out;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw DiagramError(DiagramError::Kind::syntax, std::string("invalid JSON: ") + ex.what());
    }
    if (!j.contains("crossings") || !j["crossings"].is_array())
      throw DiagramError(DiagramError::Kind::syntax, "JSON diagram needs a \"crossings\" array");
    for (const auto& row : j["crossings"]) {
      if (!row.is_array() || row.size() != 4)
        throw DiagramError(DiagramError::Kind::syntax, "each crossing needs exactly four labels");
      Code code{};
      for (int i = 0; i < 4; ++i) {
        if (!row[i].is_number_integer() || row[i].get<long long>() <= 0)
          throw DiagramError(DiagramError::Kind::syntax, "edge labels must be positive integers");
        code[i] = row[i].get<int>();
      }
      out.codes.push_back(code);
    }
    if (j.contains("genus-free")) out.genus_free = j["genus-free"].get<bool>();
    return out;
  }

  std::istringstream lines{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    auto colon = line.find(':');
    if (colon != std::string::npos && line.find('[') == std::string::npos) {
      std::string key = line.substr(pos, colon - pos);
      std::string value = line.substr(colon + 1);
      value.erase(0, value.find_first_not_of(" \t"));
      value.erase(value.find_last_not_of(" \t\r") + 1);
      if (key == "genus-free") out.genus_free = (value == "true");
      continue;
    }
    std::size_t i = pos;
    auto fail = [&](const std::string& msg) {
      std::ostringstream os;
      os << "line " << line_no << ", column " << (i + 1) << ": " << msg;
      throw DiagramError(DiagramError::Kind::syntax, os.str());
    };
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      if (line[i] != 'X' || i + 1 >= line.size() || line[i + 1] != '[') fail("expected X[");
      i += 2;
      Code code{};
      for (int k = 0; k < 4; ++k) {
        while (i < line.size() && line[i] == ' ') ++i;
        if (i >= line.size() || !std::isdigit(static_cast<unsigned char>(line[i]))) fail("expected a positive integer");
        long long v = 0;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
          v = v * 10 + (line[i] - '0');
          if (v > 1'000'000'000) fail("label too large");
          ++i;
        }
        if (v == 0) fail("edge labels must be positive");
        code[k] = static_cast<int>(v);
        while (i < line.size() && line[i] == ' ') ++i;
        const char want = (k == 3) ? ']' : ',';
        if (i >= line.size() || line[i] != want) fail(std::string("expected '") + want + "'");
        ++i;
      }
      out.codes.push_back(code);
    }
  }
  return out;
}

PlanarDiagram parse_pd(std::string_view text) {
  auto parsed = parse_codes(text);
  PlanarDiagram d(std::move(parsed.codes));
  if (!d.is_connected())
    throw DiagramError(DiagramError::Kind::disconnected, "diagram is not connected");
  return d;
}

PlanarDiagram parse_pd_json(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || text[first] != '{')
    throw DiagramError(DiagramError::Kind::syntax, "expected a JSON object");
  return parse_pd(text);
}

std::string to_pd_string(const std::vector<Code>& codes) {
  std::ostringstream os;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) os << ' ';
    os << "X[" << codes[i][0] << ',' << codes[i][1] << ',' << codes[i][2] << ',' << codes[i][3] << ']';
  }
  return os.str();
}

std::string to_pd_json(const std::vector<Code>& codes) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& c : codes) j["crossings"].push_back({c[0], c[1], c[2], c[3]});
  return j.dump();
}

const std::vector<Face>& faces(const PlanarDiagram& d) { return d.faces(); }

Coloring checkerboard(const RotationSystem& d, int anchor_corner) {
  Coloring color(d.face_count(), Color::black);
  std::vector<bool> seen(d.face_count(), false);
  // Face adjacency through edges.
  std::vector<std::vector<int>> adj(d.face_count());
  for (int e = 0; e < d.edge_count(); ++e) {
    auto [f, g] = d.edge_faces(e);
    adj[f].push_back(g);
    adj[g].push_back(f);
  }
  auto flood = [&](int root, Color c) {
    std::queue<int> todo;
    todo.push(root);
    seen[root] = true;
    color[root] = c;
    while (!todo.empty()) {
      int f = todo.front();
      todo.pop();
      for (int g : adj[f]) {
        const Color want = color[f] == Color::black ? Color::white : Color::black;
        if (!seen[g]) {
          seen[g] = true;
          color[g] = want;
          todo.push(g);
        } else if (color[g] != want) {
          throw InvariantViolation("face adjacency is not bipartite");
        }
      }
    }
  };
  if (d.face_count() > 0) flood(d.face_of_corner(anchor_corner), Color::black);
  // Other components (surgery output) are anchored at their own lowest corner.
  for (int corner = 0; corner < d.dart_count(); ++corner) {
    int f = d.face_of_corner(corner);
    if (!seen[f]) flood(f, Color::black);
  }
  return color;
}

std::vector<EdgeKind> edge_alternation(const RotationSystem& d) {
  std::vector<EdgeKind> out(d.edge_count());
  for (int e = 0; e < d.edge_count(); ++e)
    out[e] = d.is_alternating_edge(e) ? EdgeKind::alternating : EdgeKind::non_alternating;
  return out;
}

std::vector<Sign> crossing_signs(const RotationSystem& d, const Coloring& coloring) {
  std::vector<Sign> out(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c)
    out[c] = coloring[d.face_of_corner(make_dart(c, 0))] == Color::black ? Sign::positive : Sign::negative;
  return out;
}

std::vector<CompositeCircle> composite_circles(const RotationSystem& d) {
  // Group edges by the unordered pair of faces they separate.
  std::map<std::pair<int, int>, std::vector<int>> by_faces;
  for (int e = 0; e < d.edge_count(); ++e) {
    auto [f, g] = d.edge_faces(e);
    if (f > g) std::swap(f, g);
    by_faces[{f, g}].push_back(e);
  }
  std::vector<CompositeCircle> out;
  const int n = d.crossing_count();
  for (const auto& [fg, edges] : by_faces) {
    if (fg.first == fg.second) continue;  // bridge; impossible for 4-valent plane graphs
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const int e1 = edges[i], e2 = edges[j];
        std::vector<int> side(n, -1);
        std::queue<int> todo;
        todo.push(0);
        side[0] = 0;
        while (!todo.empty()) {
          int c = todo.front();
          todo.pop();
          for (int s = 0; s < 4; ++s) {
            int dart = make_dart(c, s);
            int e = d.edge_of(dart);
            if (e == e1 || e == e2) continue;
            int o = crossing_of(d.partner(dart));
            if (side[o] < 0) {
              side[o] = 0;
              todo.push(o);
            }
          }
        }
        CompositeCircle cc;
        cc.edges = {e1, e2};
        cc.faces = {fg.first, fg.second};
        for (int c = 0; c < n; ++c) (side[c] == 0 ? cc.side1 : cc.side2).push_back(c);
        if (cc.side2.empty())
          throw InvariantViolation("two faces share two edges but the edges do not separate the crossings");
        out.push_back(std::move(cc));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.edges < b.edges; });
  return out;
}

bool is_prime(const RotationSystem& d) {
  std::map<std::pair<int, int>, int> shared;
  for (int e = 0; e < d.edge_count(); ++e) {
    auto [f, g] = d.edge_faces(e);
    if (f > g) std::swap(f, g);
    if (f != g && ++shared[{f, g}] >= 2) return false;
  }
  return true;
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<Code> codes = d.codes();
  for (auto& c : codes) c = {c[3], c[0], c[1], c[2]};
  return PlanarDiagram(std::move(codes));
}

PlanarDiagram switch_crossing(const PlanarDiagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count())
    throw DiagramError(DiagramError::Kind::precondition, "no crossing " + std::to_string(crossing));
  std::vector<Code> codes = d.codes();
  auto& c = codes[crossing];
  c = {c[3], c[0], c[1], c[2]};
  return PlanarDiagram(std::move(codes));
}

std::vector<PlanarDiagram> components(const PlanarDiagram& d) {
  std::vector<std::vector<Code>> parts(d.component_count());
  for (int c = 0; c < d.crossing_count(); ++c) parts[d.component_of(c)].push_back(d.codes()[c]);
  std::vector<PlanarDiagram> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.emplace_back(std::move(p));
  return out;
}

std::vector<Code> relabel_sequential(const std::vector<Code>& codes) {
  std::map<int, int> fresh;
  std::vector<Code> out = codes;
  for (auto& c : out)
    for (int& label : c) {
      auto [it, inserted] = fresh.emplace(label, static_cast<int>(fresh.size()) + 1);
      label = it->second;
    }
  return out;
}

bool same_diagram(const RotationSystem& a, const RotationSystem& b) {
  return a.crossing_count() == b.crossing_count() && canonical_code(a) == canonical_code(b);
}

}  // namespace turaev
