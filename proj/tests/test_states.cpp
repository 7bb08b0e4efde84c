#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "turaev/enumerate.hpp"
#include "turaev/fixtures.hpp"
#include "turaev/states.hpp"

using namespace turaev;

TEST_CASE("fixture state circles and genus") {
  struct Row {
    PlanarDiagram d;
    int sa, sb, genus;
  };
  // Values from the union-find oracle, cross-checked by hand for the trefoil
  // (3 Seifert-like A circles, 2 B circles).
  const std::vector<Row> rows = {
      {fixtures::kink(), 2, 1, 0},
      {fixtures::trefoil(), 3, 2, 0},
      {fixtures::pseudo_trefoil(), 2, 1, 1},
      {fixtures::clasp2(), 1, 1, 1},
      {fixtures::cycle4(), 2, 2, 1},
  };
  for (const auto& r : rows) {
    CAPTURE(to_pd_string(r.d));
    CHECK(oracle::s_a(r.d.codes()) == r.sa);
    CHECK(oracle::s_b(r.d.codes()) == r.sb);
    const auto g = genus_data(r.d);
    CHECK(g.crossings == r.d.crossing_count());
    CHECK(g.s_a == r.sa);
    CHECK(g.s_b == r.sb);
    CHECK(g.genus == r.genus);
  }
}

TEST_CASE("state circle tracer agrees with the union-find oracle") {
  std::mt19937_64 rng(17);
  auto check = [&](const PlanarDiagram& d) {
    CHECK(state_circles(d, all_a(d)).count() == oracle::s_a(d.codes()));
    CHECK(state_circles(d, all_b(d)).count() == oracle::s_b(d.codes()));
    State s(d.crossing_count());
    std::vector<bool> b(d.crossing_count());
    for (int i = 0; i < d.crossing_count(); ++i) {
      b[i] = rng() & 1;
      s[i] = b[i] ? Smoothing::B : Smoothing::A;
    }
    CHECK(state_circles(d, s).count() == oracle::circle_count(d.codes(), b));
  };
  for (const auto& d : enumerate_diagrams(4)) check(d);
  for (const auto& d : random_corpus(9, 300, 12)) check(d);
}

TEST_CASE("state circles partition edges and darts") {
  const auto d = fixtures::pseudo_trefoil();
  const auto sc = state_circles(d, all_a(d));
  std::size_t darts = 0;
  for (const auto& c : sc.circles) darts += c.darts.size();
  CHECK(darts == static_cast<std::size_t>(d.edge_count()));
  for (int e = 0; e < d.edge_count(); ++e) {
    CHECK(sc.circle_of_edge[e] >= 0);
    CHECK(sc.circle_of_edge[e] < sc.count());
  }
  for (std::size_t i = 1; i < sc.circles.size(); ++i) CHECK(sc.circles[i - 1].min_label < sc.circles[i].min_label);
  CHECK_THROWS_AS(state_circles(d, State(2, Smoothing::A)), DiagramError);
}

TEST_CASE("Turaev complex genus equals the state-count formula") {
  for (const auto& d : enumerate_diagrams(4)) {
    const auto tc = build_turaev_complex(d);
    CHECK(tc.vertex_count == d.crossing_count());
    CHECK(tc.edge_count == d.edge_count());
    CHECK(tc.cell_count() == oracle::s_a(d.codes()) + oracle::s_b(d.codes()));
    CHECK(tc.genus() == oracle::genus(d.codes()));
    CHECK(tc.surface.genus() == tc.genus());
    CHECK(tc.surface.is_alternating());
    for (int o : tc.a_orientation) CHECK((o == 1 || o == -1));
  }
}

TEST_CASE("genus needs a connected diagram") {
  const PlanarDiagram two({{1, 1, 2, 2}, {3, 4, 4, 3}});
  CHECK_THROWS_AS(genus_data(two), DiagramError);
}

TEST_CASE("adequacy against brute-force recounting") {
  auto check = [](const PlanarDiagram& d) {
    const auto ours = loop_crossings(d);
    const auto ref = oracle::loop_crossings(d.codes());
    CHECK(ours.a_loops == ref.a);
    CHECK(ours.b_loops == ref.b);
    Adequacy want = Adequacy::adequate;
    if (!ref.a.empty() && !ref.b.empty()) want = Adequacy::inadequate;
    else if (!ref.a.empty()) want = Adequacy::b_semi_adequate;
    else if (!ref.b.empty()) want = Adequacy::a_semi_adequate;
    CHECK(ours.verdict == want);
  };
  for (const auto& d : enumerate_diagrams(4)) check(d);
  for (const auto& d : random_corpus(10, 300, 12)) check(d);
}

TEST_CASE("adequacy verdicts of fixtures") {
  CHECK(loop_crossings(fixtures::trefoil()).verdict == Adequacy::adequate);
  const auto p = loop_crossings(fixtures::pseudo_trefoil());
  CHECK(p.verdict == Adequacy::inadequate);
  CHECK(p.a_loops == std::vector<int>{0});
  CHECK(p.b_loops == std::vector<int>{0, 1, 2});
  CHECK(p.ab_loops == std::vector<int>{0});
  CHECK(to_string(Adequacy::inadequate) == "inadequate-diagram");
}
