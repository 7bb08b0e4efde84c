#include <algorithm>

#include "turaev/diagram.hpp"

namespace turaev {

namespace {

// Code read off by breadth-first search from a root dart. New crossings are
// entered with their offset fixed by the arrival slot: rounded down to an even
// slot when over/under must be kept, taken as-is for projections.
std::vector<Code> code_from_root(const RotationSystem& d, const std::vector<int>& members, int root,
                                 bool keep_crossing_type) {
  const int n = d.crossing_count();
  std::vector<int> index(n, -1), offset(n, 0), order;
  order.reserve(members.size());
  index[crossing_of(root)] = 0;
  offset[crossing_of(root)] = slot_of(root);
  order.push_back(crossing_of(root));
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int c = order[k];
    for (int j = 0; j < 4; ++j) {
      const int p = d.partner(make_dart(c, offset[c] + j));
      const int pc = crossing_of(p);
      if (index[pc] >= 0) continue;
      index[pc] = static_cast<int>(order.size());
      offset[pc] = keep_crossing_type ? (slot_of(p) & ~1) : slot_of(p);
      order.push_back(pc);
    }
  }
  std::vector<int> edge_label(d.edge_count(), 0);
  int next = 1;
  std::vector<Code> out(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int c = order[k];
    for (int j = 0; j < 4; ++j) {
      const int e = d.edge_of(make_dart(c, offset[c] + j));
      if (edge_label[e] == 0) edge_label[e] = next++;
      out[k][j] = edge_label[e];
    }
  }
  return out;
}

std::vector<Code> canonical_impl(const RotationSystem& d, bool keep_crossing_type) {
  std::vector<std::vector<int>> members(d.component_count());
  for (int c = 0; c < d.crossing_count(); ++c) members[d.component_of(c)].push_back(c);

  std::vector<std::vector<Code>> parts;
  for (const auto& m : members) {
    std::vector<Code> best;
    for (int c : m) {
      for (int s = 0; s < 4; ++s) {
        if (keep_crossing_type && (s & 1)) continue;
        auto code = code_from_root(d, m, make_dart(c, s), keep_crossing_type);
        if (best.empty() || code < best) best = std::move(code);
      }
    }
    parts.push_back(std::move(best));
  }
  std::sort(parts.begin(), parts.end());
  std::vector<Code> out;
  int shift = 0;
  for (const auto& p : parts) {
    int top = 0;
    for (auto c : p) {
      for (int& l : c) {
        top = std::max(top, l);
        l += shift;
      }
      out.push_back(c);
    }
    shift += top;
  }
  return out;
}

}  // namespace

std::vector<Code> canonical_code(const RotationSystem& d) { return canonical_impl(d, true); }

std::vector<Code> canonical_projection(const RotationSystem& d) { return canonical_impl(d, false); }

}  // namespace turaev
