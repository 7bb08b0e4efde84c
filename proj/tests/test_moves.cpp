#include "doctest.h"
#include "oracles.hpp"
#include "turaev/enumerate.hpp"
#include "turaev/fixtures.hpp"
#include "turaev/moves.hpp"
#include "turaev/states.hpp"

using namespace turaev;

namespace {

const Sign P = Sign::positive, N = Sign::negative;

// Alternation straight from the codes: each label sits at slots of different parity.
bool alternating_codes(const std::vector<Code>& codes) {
  std::map<int, std::vector<int>> parity;
  for (const auto& c : codes)
    for (int k = 0; k < 4; ++k) parity[c[k]].push_back(k % 2);
  for (const auto& [l, p] : parity)
    if (p[0] == p[1]) return false;
  return true;
}

bool almost_alternating_oracle(const std::vector<Code>& codes) {
  if (alternating_codes(codes)) return false;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    auto s = codes;
    s[i] = {codes[i][3], codes[i][0], codes[i][1], codes[i][2]};
    if (alternating_codes(s)) return true;
  }
  return false;
}

CycleOfTangles cycle_of(const PlanarDiagram& d) { return cycle_of_tangles(d, *classify_genus1(d)); }

}  // namespace

TEST_CASE("is_almost_alternating matches the code-level oracle") {
  for (const auto& d : enumerate_diagrams(5)) CHECK(is_almost_alternating(d) == almost_alternating_oracle(d.codes()));
  CHECK(is_almost_alternating(fixtures::pseudo_trefoil()));
  CHECK_FALSE(is_almost_alternating(fixtures::trefoil()));
}

TEST_CASE("payload round trip") {
  for (const auto& d : {fixtures::pseudo_trefoil(), fixtures::cycle4(), fixtures::aa6(), gen_cycle({P, N, P, N, P, N}, {2, 1, 3, 1, 1, 2})}) {
    const auto c = cycle_of(d);
    CHECK(c.crossing_count() == d.crossing_count());
    const auto back = reconstruct(c);
    CHECK(turaev_genus(back) == 1);
    CHECK(canonical_code(back) == canonical_code(d));
  }
  CycleOfTangles one;
  one.pieces.push_back(TanglePayload{{{-1, -2, -3, -4}}});
  one.twist.push_back(false);
  CHECK_THROWS_AS(reconstruct(one), DiagramError);
}

TEST_CASE("flip is an involution that keeps a single crossing's type") {
  const auto c = cycle_of(fixtures::aa6());
  for (const auto& p : c.pieces) {
    CHECK(flip(flip(p)) == p);
    if (p.single()) CHECK(flip(p).crossing_type() == p.crossing_type());
    else CHECK_THROWS_AS(p.crossing_type(), DiagramError);
  }
}

TEST_CASE("flypes preserve genus and crossing count") {
  const auto c = cycle_of(gen_cycle({P, N, P, N}, {1, 2, 1, 3}));
  for (int i = 0; i < c.length(); ++i) {
    if (!c.pieces[i].single()) {
      CHECK_THROWS_AS(flype_adjacent(c, i), DiagramError);
      continue;
    }
    const auto f = flype_adjacent(c, i);
    CHECK(f.crossing_count() == c.crossing_count());
    CHECK(turaev_genus(reconstruct(f)) == 1);
    CHECK(f.pieces[(i + 1) % c.length()] == c.pieces[i]);
  }
  CHECK_THROWS_AS(flype_adjacent(c, -1), DiagramError);
  CHECK_THROWS_AS(flype_adjacent(c, c.length()), DiagramError);
}

TEST_CASE("RII cancellation keeps genus and at least two pieces") {
  const auto c = cycle_of(gen_cycle({P, N, P, N, P, N}, {1, 1, 1, 1, 1, 1}));
  const auto r = rII_cancel(c);
  CHECK(r.length() >= 2);
  CHECK(r.length() <= c.length());
  CHECK((c.length() - r.length()) % 2 == 0);
  CHECK(turaev_genus(reconstruct(r)) == 1);
}

TEST_CASE("almost-alternating form of named fixtures") {
  for (const auto& d : {fixtures::pseudo_trefoil(), fixtures::aa6()}) {
    const auto r = almost_alternating_form(d);
    REQUIRE_MESSAGE(r.ok(), r.refusal().reason);
    CHECK(is_almost_alternating(r->diagram));
    CHECK(almost_alternating_oracle(r->diagram.codes()));
    CHECK(switch_crossing(r->diagram, r->switch_crossing).is_alternating());
    CHECK(turaev_genus(r->diagram) == 1);
    REQUIRE_FALSE(r->trace.empty());
    CHECK(r->trace.front().move == "classify");
  }
}

TEST_CASE("almost-alternating refusals") {
  CHECK_FALSE(almost_alternating_form(fixtures::trefoil()).ok());
  CHECK_FALSE(almost_alternating_form(fixtures::connected_sum_of_trefoils()).ok());
  CHECK_FALSE(almost_alternating_form(fixtures::gen2a()).ok());
  // Adequate genus-one cycle: no loop crossings to remove.
  const auto adequate = gen_cycle({P, N, P, N}, {2, 2, 2, 2});
  if (loop_crossings(adequate).verdict != Adequacy::inadequate) CHECK_FALSE(almost_alternating_form(adequate).ok());
}

TEST_CASE("core arcs of loop crossings") {
  const auto d = fixtures::pseudo_trefoil();
  const auto loops = loop_crossings(d);
  for (int c : loops.ab_loops) {
    const auto arc = core_arc(d, c);
    CHECK(arc.face >= 0);
    CHECK(arc.face < d.face_count());
    CHECK(arc.positions[0] < arc.positions[1]);
    CHECK(arc.positions[1] < d.faces()[arc.face].degree());
  }
  CHECK_THROWS_AS(core_arc(fixtures::trefoil(), 0), DiagramError);
  CHECK_THROWS_AS(core_arc(d, 7), DiagramError);
}
