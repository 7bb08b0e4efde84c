// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>

#include "oracles.hpp"
#include "turaev/enumerate.hpp"
#include "turaev/fixtures.hpp"
#include "turaev/moves.hpp"
#include "turaev/report.hpp"
#include "turaev/states.hpp"

using namespace turaev;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr int kRandomCount = 1000;
constexpr int kRandomMax = 12;

struct Tally {
  long checked = 0;
  long failures = 0;
  std::vector<std::string> notes;

  void fail(const std::string& what) {
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (!ok) fail(what());
  }
};

int failed_criteria = 0;

void report_line(int id, const std::string& name, const Tally& t, const std::string& extra = "") {
  const bool ok = t.failures == 0 && t.checked > 0;
  if (!ok) ++failed_criteria;
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << name << ": " << t.checked << " checks, " << t.failures
            << " failures" << (extra.empty() ? "" : "; " + extra) << std::endl;
  for (const auto& n : t.notes) std::cout << "       " << n << std::endl;
}

// Runs body and turns an escaped exception into a recorded failure.
void guarded(Tally& t, const PlanarDiagram& d, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    ++t.checked;
    t.fail(to_pd_string(d) + ": " + e.what());
  }
}

int genus_sum(const PlanarDiagram& d) {
  int g = 0;
  for (const auto& part : components(d)) g += oracle::genus(part.codes());
  return g;
}

bool prime_connected(const PlanarDiagram& d) { return d.is_connected() && is_prime(d); }

PlanarDiagram relabeled(const PlanarDiagram& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(d.crossing_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> fresh(d.edge_count());
  std::iota(fresh.begin(), fresh.end(), 1);
  std::shuffle(fresh.begin(), fresh.end(), rng);
  std::map<int, int> rename;
  for (int e = 0; e < d.edge_count(); ++e) rename[d.label(e)] = fresh[e];
  std::vector<bool> rot(d.crossing_count());
  for (std::size_t i = 0; i < rot.size(); ++i) rot[i] = rng() & 1;
  return PlanarDiagram(oracle::relabel(d.codes(), perm, rename, rot));
}

// Every cycle with alternating signs, length 2..6 and sizes 1..3 (lengths up to 4)
// or 1..2 (length 6).
std::vector<PlanarDiagram> cycle_battery() {
  std::vector<PlanarDiagram> out;
  for (int n : {2, 4, 6}) {
    const int top = n <= 4 ? 3 : 2;
    std::vector<int> sizes(n, 1);
    while (true) {
      for (Sign first : {Sign::positive, Sign::negative}) {
        std::vector<Sign> signs(n);
        for (int i = 0; i < n; ++i) signs[i] = i % 2 ? -first : first;
        out.push_back(gen_cycle(signs, sizes));
      }
      int k = 0;
      while (k < n && sizes[k] == top) sizes[k++] = 1;
      if (k == n) break;
      ++sizes[k];
    }
  }
  return out;
}

// Every accepted recipe: a base cycle, one joined piece, one inverse surgery.
std::vector<PlanarDiagram> genus2_battery() {
  const std::vector<std::pair<std::vector<Sign>, std::vector<int>>> bases = {
      {{Sign::positive, Sign::negative, Sign::positive, Sign::negative}, {1, 1, 1, 1}},
      {{Sign::positive, Sign::negative}, {1, 1}},
      {{Sign::positive, Sign::negative}, {1, 2}},
  };
  const std::vector<std::string> pieces = {fixtures::kTrefoil, fixtures::kClasp2, fixtures::kPseudoTrefoil,
                                           to_pd_string(fixtures::cycle4())};
  std::vector<PlanarDiagram> out;
  for (const auto& [signs, sizes] : bases)
    for (const auto& piece : pieces) {
      const int base_edges = 2 * static_cast<int>(std::accumulate(sizes.begin(), sizes.end(), 0));
      const int piece_edges = parse_pd(piece).edge_count();
      for (int e = 1; e <= base_edges; ++e)
        for (int pl = 1; pl <= piece_edges; ++pl) {
          const int top = base_edges + piece_edges + 2;
          for (int a = 1; a <= top; ++a)
            for (int b = a + 1; b <= top; ++b) {
              Genus2Recipe r;
              r.signs = signs;
              r.sizes = sizes;
              r.attachments.push_back({e, piece, pl});
              r.surgery_labels = {a, b};
              try {
                out.push_back(*gen_genus2(r));
              } catch (const DiagramError&) {
                // Recipe rejected (composite, wrong genus, or edges without a common face).
              }
            }
        }
    }
  return out;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(TURAEV_CLI) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  return out;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<PlanarDiagram> corpus = enumerate_diagrams(6);
  const std::size_t exhaustive = corpus.size();
  for (auto& d : random_corpus(kSeed, kRandomCount, kRandomMax)) corpus.push_back(std::move(d));
  std::cout << "corpus: " << exhaustive << " exhaustive (<= 6 crossings) + " << kRandomCount << " random (<= "
            << kRandomMax << " crossings, seed " << kSeed << ")" << std::endl;

  std::vector<PlanarDiagram> prime;
  for (const auto& d : corpus)
    if (prime_connected(d)) prime.push_back(d);

  {
    Tally t;
    for (const auto& d : corpus)
      guarded(t, d, [&] {
        const int formula = genus_data(d).genus;
        const auto tc = build_turaev_complex(d);
        const int chi = tc.euler_characteristic();
        t.expect((2 - chi) % 2 == 0 && (2 - chi) / 2 == formula,
                 [&] { return to_pd_string(d) + ": formula " + std::to_string(formula) + ", chi " + std::to_string(chi); });
      });
    report_line(1, "Euler/genus cross-check", t);
  }

  {
    Tally t;
    for (const auto& d : corpus) {
      if (d.is_alternating()) t.expect(turaev_genus(d) == 0, [&] { return "alternating with genus > 0: " + to_pd_string(d); });
      else if (is_prime(d))
        t.expect(turaev_genus(d) >= 1, [&] { return "prime non-alternating with genus 0: " + to_pd_string(d); });
    }
    report_line(2, "alternating iff genus 0 (prime)", t);
  }

  {
    Tally t;
    for (const auto& d : prime) {
      if (d.is_alternating()) continue;
      guarded(t, d, [&] {
        const auto arcs = find_cutting_arcs(d);
        t.expect(arcs.ok() && !arcs->empty(), [&] { return "no cutting arc: " + to_pd_string(d); });
        const auto arc = outermost_bigon_arc(d);
        if (!arc) return t.fail("no outermost arc: " + to_pd_string(d));
        const auto res = surger_arc(d, arc->arc);
        t.expect(oracle::s_a(res.diagram.codes()) == oracle::s_a(d.codes()) + 1 &&
                     oracle::s_b(res.diagram.codes()) == oracle::s_b(d.codes()) + 1 &&
                     genus_sum(res.diagram) == turaev_genus(d) - 1,
                 [&] { return "surgery counts off: " + to_pd_string(d); });
      });
    }
    report_line(3, "cutting arc surgery", t);
  }

  {
    Tally t;
    std::vector<PlanarDiagram> pool = enumerate_diagrams(7);
    for (std::size_t i = exhaustive; i < corpus.size(); ++i) pool.push_back(corpus[i]);
    long genus_one = 0;
    for (const auto& d : pool) {
      if (!prime_connected(d)) continue;
      guarded(t, d, [&] {
        const int g = turaev_genus(d);
        genus_one += g == 1;
        const bool cycle = classify_genus1(d).ok();
        t.expect(cycle == (g == 1), [&] { return "cycle=" + std::to_string(cycle) + " genus=" + std::to_string(g) + ": " + to_pd_string(d); });
      });
    }
    const auto battery = cycle_battery();
    for (const auto& d : battery)
      t.expect(turaev_genus(d) == 1 && classify_genus1(d).ok(), [&] { return "gen_cycle genus: " + to_pd_string(d); });
    report_line(4, "cycle of 2-tangles iff genus 1", t,
                std::to_string(genus_one) + " genus-one corpus diagrams (exhaustive <= 7 + random), " +
                    std::to_string(battery.size()) + " gen_cycle outputs");
  }

  {
    Tally t;
    for (const auto& d : prime) {
      if (d.is_alternating()) continue;
      guarded(t, d, [&] {
        const int g = turaev_genus(d);
        const auto r = split_theorem61(d);
        if (!r) return t.fail(r.refusal().reason + ": " + to_pd_string(d));
        bool ok = r->nesting_order.size() == r->circles.size();
        int sum = 0;
        for (std::size_t i = 0; i < r->components.size(); ++i) {
          ok &= is_prime(r->components[i]);
          ok &= r->component_genus[i] == oracle::genus(r->components[i].codes());
          sum += r->component_genus[i];
        }
        t.expect(ok && sum == g - 1, [&] { return "certificate failed: " + to_pd_string(d); });
      });
    }
    report_line(5, "split certificate (concentric, prime parts, genus sum g-1)", t);
  }

  {
    Tally t;
    std::vector<PlanarDiagram> pool = genus2_battery();
    const std::size_t generated = pool.size();
    for (const auto& d : enumerate_diagrams(7)) pool.push_back(d);
    for (std::size_t i = exhaustive; i < corpus.size(); ++i) pool.push_back(corpus[i]);
    std::map<int, int> labels;
    long genus_two = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const auto& d = pool[i];
      if (!prime_connected(d) || turaev_genus(d) != 2) continue;
      guarded(t, d, [&] {
        ++genus_two;
        const auto g = classify_genus2(d);
        if (!g) return t.fail(g.refusal().reason);
        ++labels[g->case_label];
        t.expect(g->case_label >= 1 && g->case_label <= 8, [&] { return "unmatched " + g->pattern + ": " + to_pd_string(d); });
        for (const auto& other : {mirror(d), relabeled(d, i)}) {
          const auto h = classify_genus2(other);
          t.expect(h.ok() && h->pattern == g->pattern && h->configuration == g->configuration && h->case_label == g->case_label,
                   [&] { return "descriptor not invariant: " + to_pd_string(d); });
        }
      });
    }
    std::string hist;
    for (const auto& [k, v] : labels) hist += (hist.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(v);
    report_line(6, "genus-two case labels", t,
                std::to_string(genus_two) + " genus-two diagrams (" + std::to_string(generated) + " from gen_genus2), labels " + hist);
  }

  {
    Tally t;
    long refused = 0, eligible = 0;
    std::vector<std::string> refusals;
    for (const auto& [name, d] : {std::pair{"PSEUDOTREF", fixtures::pseudo_trefoil()}, std::pair{"AA6", fixtures::aa6()}}) {
      const auto r = almost_alternating_form(d);
      t.expect(r.ok() && is_almost_alternating(r->diagram),
               [&, name = name] { return std::string(name) + ": " + (r.ok() ? "not almost alternating" : r.refusal().reason); });
    }
    for (const auto& d : prime) {
      if (turaev_genus(d) != 1 || loop_crossings(d).verdict != Adequacy::inadequate) continue;
      ++eligible;
      guarded(t, d, [&] {
        const auto r = almost_alternating_form(d);
        if (!r) {
          ++refused;
          if (refusals.size() < 3) refusals.push_back(to_pd_string(d) + " -> " + r.refusal().reason);
          return;
        }
        t.expect(is_almost_alternating(r->diagram), [&] { return "output not almost alternating: " + to_pd_string(d); });
      });
    }
    report_line(7, "almost-alternating form", t,
                std::to_string(eligible) + " inadequate genus-one diagrams, " + std::to_string(refused) + " refused (logged)");
    for (const auto& r : refusals) std::cout << "       refused: " << r << std::endl;
  }

  {
    Tally t;
    for (const auto& d : prime) {
      if (d.is_alternating()) continue;
      guarded(t, d, [&] {
        const auto c = hayashi_complexity(build_turaev_complex(d).surface, 2);
        t.expect(c.ok() && c->value == 2 && c->kind == Complexity::Kind::exact, [&] { return "complexity != 2: " + to_pd_string(d); });
      });
    }
    const auto grid = fixtures::torus_grid();
    const auto loops = two_intersection_loops(grid);
    const auto c = hayashi_complexity(grid, 6);
    t.expect(loops.ok() && loops->verdict == LoopReport::Verdict::obstructed && c.ok() && c->value > 2,
             [] { return std::string("TORUSGRID not obstructed"); });
    report_line(8, "Hayashi complexity 2 / TORUSGRID obstructed", t,
                "TORUSGRID minimum " + (c.ok() ? std::to_string(c->value) + " (" + to_string(c->kind) + ")" : "n/a"));
  }

  {
    Tally t;
    for (const auto& d : corpus) {
      const auto& codes = d.codes();
      t.expect(state_circles(d, all_a(d)).count() == oracle::s_a(codes) && state_circles(d, all_b(d)).count() == oracle::s_b(codes),
               [&] { return "circle count mismatch: " + to_pd_string(d); });
      const auto ours = loop_crossings(d);
      const auto ref = oracle::loop_crossings(codes);
      t.expect(ours.a_loops == ref.a && ours.b_loops == ref.b, [&] { return "adequacy mismatch: " + to_pd_string(d); });
    }
    report_line(9, "oracle equivalence (circles, adequacy)", t);
  }

  {
    Tally t;
    auto manifest = [] {
      std::string out;
      for (const auto& d : random_corpus(kSeed, 300, kRandomMax)) out += manifest_line(d) + "\n";
      return out;
    };
    auto reports = [] {
      std::string out;
      for (const auto& d : random_corpus(kSeed + 1, 100, 9)) out += report::classify(d).dump() + "\n";
      return out;
    };
    t.expect(manifest() == manifest(), [] { return std::string("library manifest differs between runs"); });
    t.expect(reports() == reports(), [] { return std::string("classify reports differ between runs"); });
    const std::string args = "corpus --max-crossings 5 --random 200 --seed 99";
    const auto first = run_cli(args + " --jobs 1");
    t.expect(!first.empty() && first == run_cli(args + " --jobs 1") && first == run_cli(args + " --jobs 4"),
             [] { return std::string("CLI corpus output differs between runs"); });
    report_line(10, "determinism", t);
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failed_criteria ? "FAILED " : "ALL PASSED ") << "(" << failed_criteria << " criteria failed, "
            << static_cast<int>(secs) << " s)" << std::endl;
  return failed_criteria ? 1 : 0;
}
