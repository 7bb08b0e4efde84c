#include "turaev/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "json.hpp"
#include "turaev/states.hpp"

namespace turaev {

namespace {

// A partially paired rotation system grown by always pairing the lowest free dart.
class PartialMap {
 public:
  explicit PartialMap(int max_crossings) : partner_(4 * max_crossings, -1), max_(max_crossings) {}

  int crossings() const { return crossings_; }
  int max_crossings() const { return max_; }

  int lowest_free() const {
    for (int x = 0; x < 4 * crossings_; ++x)
      if (partner_[x] < 0) return x;
    return -1;
  }

  // Free darts that can be paired with x without leaving the sphere: those on
  // the face holding x (the map stays connected, so no other component exists).
  std::vector<int> same_face_free(int x) const {
    std::vector<int> out = face_order_free(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool is_free(int x) const { return partner_[x] < 0; }

  // Free darts met walking the face of x, in walk order, excluding x.
  std::vector<int> face_order_free(int x) const {
    std::vector<int> out;
    int c = x;
    do {
      const int u = ccw(c);
      if (partner_[u] < 0) {
        if (u != x) out.push_back(u);
        c = u;
      } else {
        c = partner_[u];
      }
    } while (c != x);
    return out;
  }

  void pair(int x, int y) {
    partner_[x] = y;
    partner_[y] = x;
  }
  void unpair(int x, int y) {
    partner_[x] = -1;
    partner_[y] = -1;
  }
  int free_count() const {
    int n = 0;
    for (int x = 0; x < 4 * crossings_; ++x) n += partner_[x] < 0;
    return n;
  }

  // With every crossing placed, each face must hold an even number of free darts.
  bool faces_even() const {
    std::vector<bool> seen(4 * crossings_, false);
    for (int start = 0; start < 4 * crossings_; ++start) {
      if (seen[start]) continue;
      int free = 0, c = start;
      do {
        seen[c] = true;
        const int u = ccw(c);
        if (partner_[u] < 0) {
          ++free;
          c = u;
        } else {
          c = partner_[u];
        }
      } while (c != start);
      if (free % 2) return false;
    }
    return true;
  }

  void add_crossing() { ++crossings_; }
  void remove_crossing() { --crossings_; }

  std::vector<Code> codes() const {
    std::vector<Code> out(crossings_);
    std::vector<int> label(4 * crossings_, 0);
    int next = 1;
    for (int x = 0; x < 4 * crossings_; ++x) {
      if (label[x]) continue;
      label[x] = label[partner_[x]] = next++;
    }
    for (int x = 0; x < 4 * crossings_; ++x) out[crossing_of(x)][slot_of(x)] = label[x];
    return out;
  }

 private:
  std::vector<int> partner_;
  int max_;
  int crossings_ = 0;
};

// Options for the lowest free dart: existing free darts first, then a new crossing (-1).
std::vector<int> options(const PartialMap& m, int x) {
  auto opts = m.same_face_free(x);
  if (m.crossings() < m.max_crossings()) opts.push_back(-1);
  return opts;
}

void grow(PartialMap& m, const std::function<void(const PartialMap&)>& visit) {
  const int x = m.lowest_free();
  if (x < 0) {
    if (m.crossings() == m.max_crossings()) visit(m);
    return;
  }
  if (m.crossings() == m.max_crossings() && !m.faces_even()) return;
  for (int y : options(m, x)) {
    if (y >= 0) {
      // Closing the map early leaves no room for the remaining crossings.
      if (m.crossings() < m.max_crossings() && m.free_count() == 2) continue;
      m.pair(x, y);
      grow(m, visit);
      m.unpair(x, y);
    } else {
      const int fresh = make_dart(m.crossings(), 0);
      m.add_crossing();
      m.pair(x, fresh);
      grow(m, visit);
      m.unpair(x, fresh);
      m.remove_crossing();
    }
  }
}

std::vector<Code> switched(const std::vector<Code>& codes, std::uint64_t mask) {
  std::vector<Code> out = codes;
  for (std::size_t c = 0; c < out.size(); ++c)
    if (mask >> c & 1) out[c] = {codes[c][3], codes[c][0], codes[c][1], codes[c][2]};
  return out;
}

}  // namespace

std::vector<PlanarDiagram> enumerate_projections(int n) {
  if (n <= 0) return {};
  std::set<std::vector<Code>> seen;
  PartialMap m(n);
  m.add_crossing();
  grow(m, [&](const PartialMap& full) { seen.insert(canonical_projection(PlanarDiagram(full.codes()))); });
  std::vector<PlanarDiagram> out;
  for (const auto& codes : seen) out.emplace_back(codes);
  return out;
}

std::vector<PlanarDiagram> enumerate_diagrams(int max_crossings) {
  std::vector<PlanarDiagram> out;
  for (int n = 1; n <= max_crossings; ++n) {
    std::set<std::vector<Code>> seen;
    for (const auto& p : enumerate_projections(n))
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        seen.insert(canonical_code(PlanarDiagram(switched(p.codes(), mask))));
    for (const auto& codes : seen) out.emplace_back(codes);
  }
  return out;
}

namespace {

// Random non-crossing perfect matching of points [lo, hi) (hi - lo even).
void random_matching(std::mt19937_64& rng, const std::vector<int>& pts, int lo, int hi, std::vector<std::array<int, 2>>& out) {
  if (lo >= hi) return;
  const int pairs = (hi - lo) / 2;
  const int j = lo + 1 + 2 * static_cast<int>(rng() % pairs);
  out.push_back({pts[lo], pts[j]});
  random_matching(rng, pts, lo + 1, j, out);
  random_matching(rng, pts, j + 1, hi, out);
}

}  // namespace

PlanarDiagram random_diagram(std::mt19937_64& rng, int crossings) {
  if (crossings <= 0) throw DiagramError(DiagramError::Kind::empty, "random diagram needs at least one crossing");
  // A random spanning tree of crossings has one face; a non-crossing matching of
  // its free darts closes it up on the sphere. Matchings with a kink are redrawn
  // a bounded number of times.
  PartialMap m(crossings);
  m.add_crossing();
  while (m.crossings() < crossings) {
    std::vector<int> free;
    for (int x = 0; x < 4 * m.crossings(); ++x)
      if (m.is_free(x)) free.push_back(x);
    const int at = free[rng() % free.size()];
    const int fresh = make_dart(m.crossings(), static_cast<int>(rng() % 4));
    m.add_crossing();
    m.pair(at, fresh);
  }
  const int first = m.lowest_free();
  std::vector<int> around{first};
  for (int x : m.face_order_free(first)) around.push_back(x);
  std::vector<std::array<int, 2>> chords;
  for (int attempt = 0; attempt < 50; ++attempt) {
    chords.clear();
    random_matching(rng, around, 0, static_cast<int>(around.size()), chords);
    const bool kink = std::any_of(chords.begin(), chords.end(),
                                  [](const std::array<int, 2>& c) { return crossing_of(c[0]) == crossing_of(c[1]); });
    if (!kink) break;
  }
  for (const auto& c : chords) m.pair(c[0], c[1]);
  std::uint64_t mask = 0;
  for (int c = 0; c < crossings; ++c) mask |= (rng() & 1) << c;
  return PlanarDiagram(switched(m.codes(), mask));
}

std::vector<PlanarDiagram> random_corpus(std::uint64_t seed, int count, int max_crossings) {
  std::mt19937_64 rng(seed);
  std::vector<PlanarDiagram> out;
  if (max_crossings <= 0) return out;
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(rng() % max_crossings);
    out.push_back(random_diagram(rng, n));
  }
  return out;
}

std::string manifest_line(const PlanarDiagram& d) {
  nlohmann::ordered_json j;
  j["pd"] = to_pd_string(canonical_code(d));
  j["crossings"] = d.crossing_count();
  if (d.is_connected()) {
    const auto g = genus_data(d);
    j["s_a"] = g.s_a;
    j["s_b"] = g.s_b;
    j["genus"] = g.genus;
  }
  j["alternating"] = d.is_alternating();
  j["prime"] = is_prime(d);
  j["adequacy"] = to_string(loop_crossings(d).verdict);
  return j.dump();
}

}  // namespace turaev
