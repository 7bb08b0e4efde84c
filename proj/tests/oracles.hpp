#pragma once

// Independent reference computations for tests: everything here works from the
// raw PD codes with a union-find, without the rotation-system machinery.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "turaev/diagram.hpp"

namespace oracle {

using turaev::Code;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) { return parent_[x] == x ? x : parent_[x] = find(parent_[x]); }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Edge labels compressed to 0..E-1.
inline std::map<int, int> label_index(const std::vector<Code>& codes) {
  std::map<int, int> idx;
  for (const auto& c : codes)
    for (int x : c) idx.try_emplace(x, static_cast<int>(idx.size()));
  return idx;
}

// Circles of a state: b[c] true smooths crossing c the B way. A joins the edges at
// slots (0,1) and (2,3); B joins (1,2) and (3,0).
inline int circle_count(const std::vector<Code>& codes, const std::vector<bool>& b) {
  auto idx = label_index(codes);
  UnionFind uf(static_cast<int>(idx.size()));
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const auto& c = codes[i];
    if (b[i]) {
      uf.unite(idx[c[1]], idx[c[2]]);
      uf.unite(idx[c[3]], idx[c[0]]);
    } else {
      uf.unite(idx[c[0]], idx[c[1]]);
      uf.unite(idx[c[2]], idx[c[3]]);
    }
  }
  std::set<int> roots;
  for (const auto& [label, i] : idx) roots.insert(uf.find(i));
  return static_cast<int>(roots.size());
}

inline int s_a(const std::vector<Code>& codes) { return circle_count(codes, std::vector<bool>(codes.size(), false)); }
inline int s_b(const std::vector<Code>& codes) { return circle_count(codes, std::vector<bool>(codes.size(), true)); }
inline int genus(const std::vector<Code>& codes) {
  return (static_cast<int>(codes.size()) + 2 - s_a(codes) - s_b(codes)) / 2;
}

// Loop crossings by recounting: c is an A-loop iff re-smoothing c alone in the
// all-A state splits a circle (its two A-arcs touch the same circle).
struct Loops {
  std::vector<int> a, b;
};

inline Loops loop_crossings(const std::vector<Code>& codes) {
  Loops out;
  const int n = static_cast<int>(codes.size());
  const int sa = s_a(codes), sb = s_b(codes);
  for (int c = 0; c < n; ++c) {
    std::vector<bool> state(n, false);
    state[c] = true;
    if (circle_count(codes, state) == sa + 1) out.a.push_back(c);
    std::vector<bool> flipped(n, true);
    flipped[c] = false;
    if (circle_count(codes, flipped) == sb + 1) out.b.push_back(c);
  }
  return out;
}

// Every perfect matching of 4n darts that gives a connected planar diagram,
// collected up to canonical projection. Brute force; only for tiny n.
inline std::set<std::vector<Code>> brute_projections(int n) {
  std::set<std::vector<Code>> out;
  std::vector<int> partner(4 * n, -1);
  auto emit = [&] {
    std::vector<Code> codes(n);
    std::vector<int> label(4 * n, 0);
    int next = 1;
    for (int x = 0; x < 4 * n; ++x)
      if (!label[x]) label[x] = label[partner[x]] = next++;
    for (int x = 0; x < 4 * n; ++x) codes[x / 4][x % 4] = label[x];
    try {
      turaev::PlanarDiagram d(codes);
      if (d.is_connected()) out.insert(turaev::canonical_projection(d));
    } catch (const turaev::DiagramError&) {
    }
  };
  auto rec = [&](auto&& self) -> void {
    int x = 0;
    while (x < 4 * n && partner[x] >= 0) ++x;
    if (x == 4 * n) return emit();
    for (int y = x + 1; y < 4 * n; ++y) {
      if (partner[y] >= 0) continue;
      partner[x] = y;
      partner[y] = x;
      self(self);
      partner[x] = partner[y] = -1;
    }
  };
  rec(rec);
  return out;
}

// A relabeling: crossings permuted by `perm`, labels renamed by `rename`, and
// each crossing's code rotated by two slots when `rotate` says so (a half-turn
// keeps over/under positions).
inline std::vector<Code> relabel(const std::vector<Code>& codes, const std::vector<int>& perm,
                                 const std::map<int, int>& rename, const std::vector<bool>& rotate) {
  std::vector<Code> out(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    Code c = codes[i];
    for (int& x : c) x = rename.at(x);
    if (rotate[i]) c = {c[2], c[3], c[0], c[1]};
    out[perm[i]] = c;
  }
  return out;
}

}  // namespace oracle
