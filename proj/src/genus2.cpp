#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "turaev/states.hpp"
#include "turaev/surgery.hpp"
#include "turaev/tangles.hpp"

namespace turaev {

namespace {

// Chain-link structure of a valence-2 tangle: its boundary splits into two
// adjacent pairs, each pair running in parallel to one neighbouring tangle.
struct Link {
  bool chain = false;
  std::array<std::array<int, 2>, 2> sides{};  // darts of each side, boundary order
};

int index_in(const std::vector<int>& loop, int dart) {
  return static_cast<int>(std::find(loop.begin(), loop.end(), dart) - loop.begin());
}

// Loop of tangle t containing dart x.
const std::vector<int>& loop_of(const TangleDecomposition& dec, int t, int x) {
  for (const auto& loop : dec.tangles[t].boundary)
    if (std::find(loop.begin(), loop.end(), x) != loop.end()) return loop;
  throw InvariantViolation("dart missing from its tangle boundary");
}

bool parallel_pair(const RotationSystem& d, const TangleDecomposition& dec, int x, int y) {
  const int tx = dec.across(d, x), ty = dec.across(d, y);
  if (tx != ty) return false;
  const int px = d.partner(x), py = d.partner(y);
  const auto& loop = loop_of(dec, tx, px);
  const int n = static_cast<int>(loop.size());
  const int i = index_in(loop, px), j = index_in(loop, py);
  if (j >= n) return false;
  return (i + 1) % n == j || (j + 1) % n == i;
}

Link chain_link(const RotationSystem& d, const TangleDecomposition& dec, const Tangle& t) {
  Link link;
  if (!t.simply_connected || t.valence() != 2) return link;
  const auto& b = t.boundary[0];
  for (int s = 0; s < 2 && !link.chain; ++s) {
    const std::array<int, 2> p{b[s], b[s + 1]}, q{b[(s + 2) % 4], b[(s + 3) % 4]};
    if (parallel_pair(d, dec, p[0], p[1]) && parallel_pair(d, dec, q[0], q[1])) {
      link.chain = true;
      link.sides = {p, q};
    }
  }
  return link;
}

// Smallest rotation of a word after relabeling symbols by first occurrence.
std::vector<int> canonical_word(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> best;
  for (int r = 0; r < n; ++r) {
    std::map<int, int> relabel;
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) {
      auto [it, fresh] = relabel.try_emplace(word[(r + k) % n], static_cast<int>(relabel.size()));
      w[k] = it->second;
    }
    if (best.empty() || w < best) best = w;
  }
  return best;
}

std::string word_string(const std::vector<int>& w) {
  std::string s;
  for (int x : w) s += static_cast<char>('a' + x);
  return s;
}

// Collapse consecutive equal symbols (cyclically) of a word.
std::vector<int> collapse(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  if (n == 0) return {};
  int start = 0;
  while (start < n && word[start] == word[(start + n - 1) % n]) ++start;
  if (start == n) return {word[0]};
  std::vector<int> out;
  for (int k = 0; k < n; ++k) {
    const int x = word[(start + k) % n];
    if (out.empty() || out.back() != x) out.push_back(x);
  }
  return out;
}

// Cyclic arrangement, around the valence-4 tangle v, of the components left
// when v is removed: "blocks", "nested" or "interleaved".
std::string arrangement(const RotationSystem& d, const TangleDecomposition& dec, int v,
                        const std::map<int, int>& end_of_dart) {
  const int n = static_cast<int>(dec.tangles.size());
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (s == v || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = comps;
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      for (const auto& loop : dec.tangles[t].boundary)
        for (int x : loop) {
          const int u = dec.across(d, x);
          if (u != v && comp[u] < 0) {
            comp[u] = comps;
            stack.push_back(u);
          }
        }
    }
    ++comps;
  }
  std::vector<int> end_comp;
  std::map<int, std::set<int>> ends_per_comp;
  int last = -1;
  const auto& loop = dec.tangles[v].boundary[0];
  for (std::size_t k = 0; k < loop.size(); ++k) {
    const int e = end_of_dart.at(loop[k]);
    if (e == last) continue;
    last = e;
    const int c = comp[dec.across(d, loop[k])];
    end_comp.push_back(c);
    ends_per_comp[c].insert(e);
  }
  const auto blocks = collapse(end_comp);
  if (blocks.size() >= 4) return "interleaved";
  for (const auto& [c, es] : ends_per_comp)
    if (es.size() != 2 || blocks.size() < 2) return "nested";
  return "blocks";
}

std::string configuration(const RotationSystem& d, const TangleDecomposition& dec, const Genus2Descriptor& g,
                          int singles, const std::map<int, int>& end_of_dart) {
  if (g.non_simply_connected) return "nsc";
  std::vector<int> high;
  for (const auto& t : dec.tangles)
    if (t.valence() >= 3) high.push_back(t.id);
  std::vector<int> high_valence;
  for (int t : high) high_valence.push_back(dec.tangles[t].valence());
  if (high_valence == std::vector<int>{4}) return "v4:" + arrangement(d, dec, high[0], end_of_dart);
  if (high_valence == std::vector<int>{3, 3}) {
    // Unbundled direct channel edges have length zero.
    bool odd = false, even = singles > 0;
    for (const auto& r : g.ribbons) (r.even() ? even : odd) = true;
    if (odd && even) return "v3v3:mixed";
    return odd ? "v3v3:odd" : "v3v3:even";
  }
  if (high.empty()) return g.max_adjacent >= 4 ? "v2:adj4" : "v2:adj3";
  std::string s = "v";
  for (int v : high_valence) s += std::to_string(v);
  return s;
}

}  // namespace

std::string Genus2Descriptor::summary() const {
  std::ostringstream ss;
  ss << "valences=";
  for (std::size_t i = 0; i < valences.size(); ++i) ss << (i ? "," : "") << valences[i];
  ss << " nsc=" << non_simply_connected << " ribbons=" << ribbons.size() << " pattern=" << pattern
     << " configuration=" << configuration << " case=" << case_label;
  return ss.str();
}

Genus2Descriptor contract_ribbons(const PlanarDiagram& d, const TangleDecomposition& dec) {
  Genus2Descriptor g;
  const int n = static_cast<int>(dec.tangles.size());
  std::vector<Link> links(n);
  for (const auto& t : dec.tangles) {
    g.valences.push_back(t.valence());
    g.non_simply_connected |= !t.simply_connected;
    links[t.id] = chain_link(d, dec, t);
    std::set<int> nbrs;
    for (const auto& loop : t.boundary)
      for (int x : loop) nbrs.insert(dec.across(d, x));
    g.max_adjacent = std::max(g.max_adjacent, static_cast<int>(nbrs.size()));
  }
  std::sort(g.valences.begin(), g.valences.end());

  std::vector<int> vertex_of(n, -1), vertices;
  for (int t = 0; t < n; ++t)
    if (!links[t].chain) {
      vertex_of[t] = static_cast<int>(vertices.size());
      vertices.push_back(t);
    }

  // Side of a chain link holding dart x.
  auto side_of = [&](int t, int x) {
    for (int s = 0; s < 2; ++s)
      if (links[t].sides[s][0] == x || links[t].sides[s][1] == x) return s;
    throw InvariantViolation("dart on no side of its chain link");
  };

  // Channel label of every dart on a vertex boundary: ribbons first, then direct edges.
  std::map<int, int> label_of_dart;
  std::map<int, int> end_of_dart;  // darts entering the same ribbon end share an id
  int ends = 0;
  std::vector<bool> link_used(n, false);
  for (int v : vertices)
    for (const auto& loop : dec.tangles[v].boundary)
      for (int x : loop) {
        if (label_of_dart.count(x)) continue;
        const int u = dec.across(d, x);
        if (!links[u].chain) continue;
        // Follow the ribbon starting with the parallel pair containing x.
        const int y = d.partner(x);
        int t = u, s = side_of(u, y);
        Ribbon r;
        const int id = static_cast<int>(g.ribbons.size());
        std::array<int, 2> start_pair{d.partner(links[u].sides[s][0]), d.partner(links[u].sides[s][1])};
        while (true) {
          link_used[t] = true;
          ++r.length;
          const auto& out = links[t].sides[1 - s];
          const int next = dec.across(d, out[0]);
          if (!links[next].chain) {
            for (int z : out) {
              label_of_dart[d.partner(z)] = id;
              end_of_dart[d.partner(z)] = ends + 1;
            }
            r.ends = {vertex_of[v], vertex_of[next]};
            break;
          }
          s = side_of(next, d.partner(out[0]));
          t = next;
        }
        for (int z : start_pair) {
          label_of_dart[z] = id;
          end_of_dart[z] = ends;
        }
        ends += 2;
        g.ribbons.push_back(r);
      }
  // Maximal runs of parallel channel edges joining two vertices directly are
  // ribbons of length zero; the remaining direct edges are numbered after all ribbons.
  for (int v : vertices)
    for (const auto& loop : dec.tangles[v].boundary) {
      const int m = static_cast<int>(loop.size());
      auto linked = [&](int k) {
        const int x = loop[k], y = loop[(k + 1) % m];
        return m >= 2 && x != y && !label_of_dart.count(x) && !label_of_dart.count(y) && parallel_pair(d, dec, x, y);
      };
      int start = 0;
      while (start < m && linked((start + m - 1) % m)) ++start;
      if (start == m) start = 0;
      for (int k = 0; k < m;) {
        int len = 1;
        while (len < m && linked((start + k + len - 1) % m)) ++len;
        if (len >= 2) {
          const int id = static_cast<int>(g.ribbons.size());
          for (int i = 0; i < len; ++i) {
            const int x = loop[(start + k + i) % m];
            label_of_dart[x] = label_of_dart[d.partner(x)] = id;
            end_of_dart[x] = ends;
            end_of_dart[d.partner(x)] = ends + 1;
          }
          ends += 2;
          g.ribbons.push_back(Ribbon{0, {vertex_of[v], vertex_of[dec.across(d, loop[(start + k) % m])]}});
        }
        k += len;
      }
    }
  std::vector<int> singles;
  for (int v : vertices)
    for (const auto& loop : dec.tangles[v].boundary)
      for (int x : loop)
        if (!label_of_dart.count(x)) {
          label_of_dart[x] = label_of_dart[d.partner(x)] = -1 - static_cast<int>(singles.size());
          end_of_dart[x] = ends++;
          end_of_dart[d.partner(x)] = ends++;
          singles.push_back(x);
        }
  for (auto& [x, label] : label_of_dart)
    if (label < 0) label = static_cast<int>(g.ribbons.size()) - 1 - label;

  // Chain links not reached from any vertex form closed ribbons.
  for (int t = 0; t < n; ++t) {
    if (!links[t].chain || link_used[t]) continue;
    Ribbon r;
    int cur = t, s = 0;
    do {
      link_used[cur] = true;
      ++r.length;
      const auto& out = links[cur].sides[1 - s];
      const int next = dec.across(d, out[0]);
      s = side_of(next, d.partner(out[0]));
      cur = next;
    } while (cur != t);
    g.ribbons.push_back(r);
  }
  g.marked_vertex = vertices.empty();

  std::vector<std::string> vertex_words;
  for (int v : vertices) {
    g.vertex_valence.push_back(dec.tangles[v].valence());
    std::string w;
    for (const auto& loop : dec.tangles[v].boundary) {
      std::vector<int> lw;
      for (int x : loop) lw.push_back(label_of_dart.at(x));
      g.rotation.push_back(lw);
      g.rotation_vertex.push_back(vertex_of[v]);
      w += (w.empty() ? "" : "|") + word_string(canonical_word(lw));
    }
    vertex_words.push_back("v" + std::to_string(dec.tangles[v].valence()) + ":" + w);
  }
  std::sort(vertex_words.begin(), vertex_words.end());
  std::ostringstream key;
  if (g.non_simply_connected) key << "nsc;";
  for (const auto& w : vertex_words) key << w << ";";
  std::vector<std::string> rib;
  for (const auto& r : g.ribbons) rib.push_back(std::string(r.ends[0] < 0 ? "o" : "r") + (r.even() ? "e" : "o"));
  std::sort(rib.begin(), rib.end());
  for (const auto& r : rib) key << r;
  if (!singles.empty()) key << "s" << singles.size();
  g.pattern = key.str();
  g.configuration = configuration(d, dec, g, static_cast<int>(singles.size()), end_of_dart);
  return g;
}

const std::map<std::string, int>& case_table() {
  static const std::map<std::string, int> table = [] {
    std::map<std::string, int> t;
    std::ifstream in(std::string(TURAEV_DATA_DIR) + "/case_table.json");
    if (!in) return t;
    const auto j = nlohmann::json::parse(in);
    for (const auto& [k, v] : j.at("patterns").items()) t[k] = v.get<int>();
    return t;
  }();
  return table;
}

Outcome<Genus2Descriptor> classify_genus2(const PlanarDiagram& d) {
  if (!d.is_connected()) return Refusal{"diagram is disconnected"};
  if (!is_prime(d)) return Refusal{"diagram is composite"};
  const int genus = turaev_genus(d);
  if (genus != 2) return Refusal{"Turaev genus is " + std::to_string(genus) + ", not two"};
  const auto dec = decompose(d);
  Genus2Descriptor g = contract_ribbons(d, dec);
  const auto& table = case_table();
  const auto it = table.find(g.configuration);
  g.case_label = it == table.end() ? 0 : it->second;
  return g;
}

Outcome<PlanarDiagram> gen_genus2(const Genus2Recipe& recipe) {
  if (recipe.signs.empty()) return Refusal{"empty recipe"};
  PlanarDiagram d = gen_cycle(recipe.signs, recipe.sizes);
  for (const auto& a : recipe.attachments) d = join_diagrams(d, a.edge_label, parse_pd(a.piece), a.piece_label);
  if (recipe.surgery_labels[0] != 0) d = inverse_surgery(d, AttachmentSpec{recipe.surgery_labels, -1});
  if (!d.is_connected()) throw DiagramError(DiagramError::Kind::precondition, "recipe gives a disconnected diagram");
  if (!is_prime(d)) throw DiagramError(DiagramError::Kind::precondition, "recipe gives a composite diagram: " + to_pd_string(d));
  const int g = turaev_genus(d);
  if (g != 2)
    throw DiagramError(DiagramError::Kind::precondition,
                       "recipe gives Turaev genus " + std::to_string(g) + ": " + to_pd_string(d));
  return d;
}

}  // namespace turaev
