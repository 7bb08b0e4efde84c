#include "turaev/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "turaev/surgery.hpp"

namespace turaev::fixtures {

PlanarDiagram kink() { return parse_pd(kKink); }
PlanarDiagram trefoil() { return parse_pd(kTrefoil); }
PlanarDiagram pseudo_trefoil() { return parse_pd(kPseudoTrefoil); }
PlanarDiagram clasp2() { return parse_pd(kClasp2); }

PlanarDiagram connected_sum_of_trefoils() { return join_diagrams(trefoil(), 1, trefoil(), 1); }

namespace {
const std::vector<Sign> kAlternatingSigns{Sign::positive, Sign::negative, Sign::positive, Sign::negative};
}

PlanarDiagram cycle4() { return gen_cycle(kAlternatingSigns, {1, 1, 1, 1}); }
PlanarDiagram aa6() { return gen_cycle(kAlternatingSigns, {3, 1, 1, 1}); }

Genus2Recipe gen2a_recipe() {
  Genus2Recipe r;
  r.signs = kAlternatingSigns;
  r.sizes = {1, 1, 1, 1};
  r.attachments.push_back({1, kTrefoil, 1});
  r.surgery_labels = {3, 11};
  return r;
}

Genus2Recipe gen2b_recipe() {
  Genus2Recipe r;
  r.signs = kAlternatingSigns;
  r.sizes = {1, 1, 1, 1};
  r.attachments.push_back({1, to_pd_string(cycle4()), 4});
  r.surgery_labels = {3, 10};
  return r;
}

Genus2Recipe annulus_recipe() {
  Genus2Recipe r;
  r.signs = {Sign::positive, Sign::negative};
  r.sizes = {1, 2};
  r.attachments.push_back({1, kPseudoTrefoil, 6});
  r.surgery_labels = {5, 10};
  return r;
}

PlanarDiagram gen2a() { return *gen_genus2(gen2a_recipe()); }
PlanarDiagram gen2b() { return *gen_genus2(gen2b_recipe()); }

SurfaceDiagram torus_grid(int n) {
  if (n < 2 || n % 2 != 0) throw DiagramError(DiagramError::Kind::precondition, "torus grid size must be even and >= 2");
  auto wrap = [n](int k) { return ((k % n) + n) % n; };
  auto h = [&](int i, int j) { return 1 + wrap(i) * n + wrap(j); };          // (i,j) -> (i,j+1)
  auto v = [&](int i, int j) { return 1 + n * n + wrap(i) * n + wrap(j); };  // (i,j) -> (i+1,j)
  std::vector<Code> codes;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int east = h(i, j), west = h(i, j - 1), north = v(i, j), south = v(i - 1, j);
      if ((i + j) % 2 == 0) codes.push_back({east, north, west, south});
      else codes.push_back({north, west, south, east});
    }
  return SurfaceDiagram(std::move(codes));
}

std::string fixture_text(const std::string& name) {
  const std::string path = std::string(TURAEV_DATA_DIR) + "/fixtures/" + name + ".pd";
  std::ifstream in(path);
  if (!in) throw DiagramError(DiagramError::Kind::precondition, "missing fixture file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace turaev::fixtures
