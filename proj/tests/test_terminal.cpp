#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "lemmas.hpp"
#include "surface_ising/pfaffian.hpp"
#include "surface_ising/terminal.hpp"

using namespace surface_ising;
using namespace surface_ising::testing;

namespace {

int count_kind(const TerminalGraph& gt, TerminalEdgeKind kind) {
  return static_cast<int>(std::count_if(gt.edges().begin(), gt.edges().end(), [kind](const TerminalEdge& e) { return e.kind == kind; }));
}

}  // namespace

TEST_CASE("terminal graph sizes") {
  TerminalGraph torus(torus_lattice(1, 1, kX, kY));
  CHECK(torus.terminal_count() == 4);
  CHECK(count_kind(torus, TerminalEdgeKind::Short) == 6);
  CHECK(count_kind(torus, TerminalEdgeKind::Long) == 2);

  TerminalGraph edge(single_edge());
  CHECK(edge.terminal_count() == 2);
  CHECK(count_kind(edge, TerminalEdgeKind::Short) == 0);
  CHECK(count_kind(edge, TerminalEdgeKind::Long) == 1);

  TerminalGraph path(path2());
  CHECK(path.terminal_count() == 4);
  CHECK(count_kind(path, TerminalEdgeKind::Short) == 1);
  CHECK(count_kind(path, TerminalEdgeKind::Long) == 2);

  auto lonely = single_edge();
  lonely.vertices.push_back({2, {}});
  CHECK_THROWS_AS(TerminalGraph{lonely}, std::invalid_argument);
  CHECK_THROWS_AS(TerminalGraph{diagonal_loop()}, std::invalid_argument);
}

TEST_CASE("standard dimer is perfect and every terminal has one long edge") {
  for (const auto& g : named_instances()) {
    TerminalGraph gt(normalize(g));
    CHECK(is_perfect_matching(gt, gt.standard_dimer()));
    std::vector<int> longs(static_cast<std::size_t>(gt.terminal_count()), 0);
    for (const auto& e : gt.edges()) {
      if (e.kind != TerminalEdgeKind::Long) continue;
      ++longs[static_cast<std::size_t>(e.a)];
      ++longs[static_cast<std::size_t>(e.b)];
      CHECK(e.a != e.b);
    }
    CHECK(std::all_of(longs.begin(), longs.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("chords interleave") {
  TerminalGraph k4(torus_lattice(1, 1, kX, kY));
  CHECK(chord_cross(k4, k4.short_edge(0, 1, 3), k4.short_edge(0, 2, 4)) == 1);
  CHECK(chord_cross(k4, k4.short_edge(0, 1, 2), k4.short_edge(0, 3, 4)) == 0);
  TerminalGraph k5(star(5));
  CHECK(chord_cross(k5, k5.short_edge(0, 1, 4), k5.short_edge(0, 2, 3)) == 0);
  CHECK(chord_cross(k5, k5.short_edge(0, 1, 4), k5.short_edge(0, 3, 5)) == 1);
  TerminalGraph two(path2());
  CHECK(chord_cross(two, 2, 0) == 0);  // a long edge never counts
}

TEST_CASE("dimer sign lemma on complete graphs") {
  for (int n = 1; n <= 5; ++n) CHECK(dimer_sign_lemma(n) == "");
  int count = 0;
  std::vector<std::pair<int, int>> cur;
  for_each_pairing({1, 2, 3, 4, 5, 6, 7, 8}, cur, [&count](const auto&) { ++count; });
  CHECK(count == 105);
}

TEST_CASE("outside crossing parity") {
  TerminalGraph torus(torus_lattice(1, 1, kX, kY));
  CHECK(t_out_parity(torus, torus.standard_dimer()) == 1);
  CHECK(t_in_parity(torus, torus.standard_dimer()) == 0);

  // A single loop of class a_1 + b_1 crosses itself once.
  const IntersectionForm form(diagonal_loop().signature);
  const Z2Vector c = edge_class(diagonal_loop(), form, 0);
  CHECK(c == Z2Vector{3, 2});
  CHECK(eval_form(form, zero_form(form.signature()), c) == 1);

  CHECK_THROWS_AS(t_out_parity(torus, {0}), std::invalid_argument);
}

TEST_CASE("pairwise and global outside parities agree") {
  auto instances = named_instances();
  instances.push_back(torus_lattice(2, 2, kX, kY));
  for (const auto& g : instances) {
    TerminalGraph gt(normalize(g));
    if (gt.terminal_count() > 16) continue;
    const QuadraticForm q0 = zero_form(g.signature);
    for (const auto& d : enumerate_matchings(gt)) {
      REQUIRE(t_out_parity(gt, d) == t_out_parity_global(gt, d));
      if (g.signature.kind == SurfaceKind::Orientable) CHECK(t_out_parity(gt, d) == eval_form(gt.form(), q0, matching_class(gt, d)));
      bool shared = false;
      for (int e : d) {
        for (int f : d) {
          if (e < f && gt.edge(e).kind == TerminalEdgeKind::Short && gt.edge(f).kind == TerminalEdgeKind::Short &&
              gt.terminals()[static_cast<std::size_t>(gt.edge(e).a)].vertex == gt.terminals()[static_cast<std::size_t>(gt.edge(f).a)].vertex) {
            shared = true;
          }
        }
      }
      if (!shared) CHECK(t_in_parity(gt, d) == 0);
    }
  }
}

TEST_CASE("inside face cycles") {
  TerminalGraph one(torus_lattice(1, 1, kX, kY));
  CHECK(inside_face_cycles(one).empty());

  TerminalGraph two(torus_lattice(2, 2, kX, kY));
  const auto faces = inside_face_cycles(two);
  REQUIRE(faces.size() == 1);
  CHECK(faces[0].steps.size() == 8);  // the central square: 4 long edges and 4 corner short edges
  CHECK(is_closed_walk(two, faces[0]));

  TerminalGraph tri(triangle());
  const auto t = inside_face_cycles(tri);
  REQUIRE(t.size() == 1);
  CHECK(t[0].steps.size() == 6);
  CHECK(is_closed_walk(tri, t[0]));

  TerminalGraph grid(planar_grid(3, 3, kX, kY));
  const auto g = inside_face_cycles(grid);
  CHECK(g.size() == 4);
  for (const auto& c : g) CHECK(is_closed_walk(grid, c));
}

TEST_CASE("outside face cycles") {
  TerminalGraph torus(torus_lattice(1, 1, kX, kY));
  for (int e = 0; e < 2; ++e) {
    const FaceCycle c = outside_face_cycle(torus, e);
    CHECK(c.outside_edge == e);
    CHECK(is_closed_walk(torus, c));
    int longs = 0;
    for (const Step& s : c.steps) longs += torus.edge(s.edge).kind == TerminalEdgeKind::Long ? 1 : 0;
    CHECK(longs == 1);
  }
  for (const auto& g : {torus_lattice(2, 3, kX, kY), klein_lattice(2, 2, kX, kY), rp2_wheel(2, 4, kX, kY)}) {
    TerminalGraph gt(g);
    for (const Edge& e : g.edges) {
      if (e.is_outside()) CHECK(is_closed_walk(gt, outside_face_cycle(gt, e.id)));
    }
  }
  CHECK_THROWS_AS(outside_face_cycle(TerminalGraph(planar_grid(2, 2, kX, kY)), 0), std::invalid_argument);
}

TEST_CASE("face cycles use rotation-consecutive short edges") {
  for (const auto& g : {torus_lattice(2, 2, kX, kY), klein_lattice(2, 3, kX, kY), planar_grid(3, 3, kX, kY)}) {
    TerminalGraph gt(g);
    auto faces = inside_face_cycles(gt);
    for (const Edge& e : g.edges) {
      if (e.is_outside()) faces.push_back(outside_face_cycle(gt, e.id));
    }
    for (const auto& f : faces) {
      for (const Step& s : f.steps) {
        const TerminalEdge& te = gt.edge(s.edge);
        if (te.kind != TerminalEdgeKind::Short) continue;
        const auto& ta = gt.terminals()[static_cast<std::size_t>(te.a)];
        const auto& tb = gt.terminals()[static_cast<std::size_t>(te.b)];
        const int d = gt.degree(ta.vertex);
        CHECK(((tb.label - ta.label == 1) || (ta.label == 1 && tb.label == d)));
      }
    }
  }
}
