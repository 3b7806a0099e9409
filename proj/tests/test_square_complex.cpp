#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "common.hpp"
#include "sqci/corpus.hpp"
#include "sqci/square_complex.hpp"

using namespace sqci;
using testutil::load;

namespace {

// floating point rank, independent of the exact elimination
int float_rank(std::vector<std::vector<double>> m) {
  int rank = 0;
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    for (int r = rank; r < rows; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
    if (std::fabs(m[piv][c]) < 1e-9) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      double f = m[r][c] / m[rank][c];
      if (f != 0)
        for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// betti1 of the whole complex (b0 subtracted) with dense floating point ranks
int betti1_oracle(const SquareComplex& c, int* b0 = nullptr) {
  int V = static_cast<int>(c.vertices.size()), E = static_cast<int>(c.edges.size());
  std::vector<std::vector<double>> d1(V, std::vector<double>(E, 0));
  for (int e = 0; e < E; ++e) {
    d1[c.edges[e].u][e] -= 1;
    d1[c.edges[e].v][e] += 1;
  }
  std::vector<std::vector<double>> d2(E, std::vector<double>(c.squares.size(), 0));
  for (size_t s = 0; s < c.squares.size(); ++s)
    for (int i = 0; i < 4; ++i) d2[c.squares[s].e[i]][s] += c.squares[s].dir[i];
  int r1 = float_rank(d1), r2 = float_rank(d2);
  if (b0) *b0 = V - r1;
  return E - r1 - r2;
}

int disjoint_edge_pairs(const SimplicialGraph& g) {
  int n = 0;
  auto& es = g.edges();
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      n += a != c && a != d && b != c && b != d;
    }
  return n;
}

int hyperplane_count_oracle(const SimplicialGraph& g) {
  int total = 0;
  VSet all(g.size());
  for (int i = 0; i < g.size(); ++i) all[i] = i;
  for (auto [a, b] : g.edges()) total += 2 * static_cast<int>(components(g, set_difference(all, {a, b})).size());
  return total;
}

// cubical subdivision: each edge halved, each square quartered
SquareComplex subdivide(const SquareComplex& c) {
  SquareComplex s;
  for (auto& v : c.vertices) s.add_vertex(v);
  std::vector<int> mid(c.edges.size());
  std::vector<std::array<int, 2>> half(c.edges.size());
  for (size_t e = 0; e < c.edges.size(); ++e) {
    mid[e] = s.add_vertex("m" + std::to_string(e));
    half[e] = {s.add_edge(c.edges[e].u, mid[e]), s.add_edge(mid[e], c.edges[e].v)};
  }
  for (size_t q = 0; q < c.squares.size(); ++q) {
    auto& sq = c.squares[q];
    auto corners = c.corners(sq);
    int centre = s.add_vertex("c" + std::to_string(q));
    std::array<int, 4> spoke;
    for (int i = 0; i < 4; ++i) spoke[i] = s.add_edge(mid[sq.e[i]], centre);
    for (int i = 0; i < 4; ++i) {
      int prev = (i + 3) % 4;
      // half of edge i touching corner i, half of edge prev touching corner i
      auto touching = [&](int e, int corner) {
        return c.edges[sq.e[e]].u == corner && half[sq.e[e]][0] >= 0 &&
                       s.edges[half[sq.e[e]][0]].u == corner
                   ? half[sq.e[e]][0]
                   : half[sq.e[e]][1];
      };
      int h1 = touching(i, corners[i]);
      int h0 = touching(prev, corners[i]);
      s.add_square({h1, spoke[i], spoke[prev], h0});
    }
  }
  return s;
}

}  // namespace

TEST_CASE("D2 of the tripod is a 12-cycle") {
  auto c = build_d2(load("misc/t3.graph"));
  CHECK(c.vertices.size() == 12);
  CHECK(c.edges.size() == 12);
  CHECK(c.squares.empty());
  CHECK(betti1(c).betti1 == 1);
  CHECK(npc_check(c).pass);
}

TEST_CASE("D2 cell counts match the closed formulas") {
  for (auto& e : load_corpus(SQCI_CORPUS_DIR)) {
    const auto& g = e.graph;
    if (g.size() < 2 || g.size() > 14) continue;
    CAPTURE(e.file);
    auto c = build_d2(g);
    int n = g.size();
    CHECK(static_cast<int>(c.vertices.size()) == n * (n - 1));
    CHECK(static_cast<int>(c.edges.size()) == 2 * g.edge_count() * (n - 2));
    CHECK(static_cast<int>(c.squares.size()) == 2 * disjoint_edge_pairs(g));
  }
  auto k3 = build_d2(load("misc/k3.graph"));
  CHECK(k3.vertices.size() == 6);
  CHECK(k3.edges.size() == 6);
  CHECK(k3.squares.empty());
}

TEST_CASE("D2 of one edge is two points") {
  auto c = build_d2(load("misc/edge.graph"));
  CHECK(c.vertices.size() == 2);
  CHECK(c.edges.empty());
  auto b = betti1(c);
  CHECK_FALSE(b.connected);
  CHECK(b.components == 2);
  CHECK_THROWS(build_d2(testutil::make("v a\n")));
}

TEST_CASE("D2 of K5 and K33 are closed surfaces") {
  // genus 6 and genus 4 by Euler characteristic
  auto k5 = build_d2(testutil::complete(5));
  long chi = static_cast<long>(k5.vertices.size()) - static_cast<long>(k5.edges.size()) +
             static_cast<long>(k5.squares.size());
  CHECK(chi == -10);
  CHECK(betti1(k5).betti1 == 12);
  auto k33 = build_d2(testutil::complete_bipartite(3, 3));
  CHECK(betti1(k33).betti1 == 8);
  CHECK(npc_check(k5).pass);
  CHECK(npc_check(k33).pass);
}

TEST_CASE("betti1 agrees with the floating point oracle") {
  for (auto rel : {"misc/t3.graph", "misc/k3.graph", "misc/k4.graph", "raags/p5.graph", "raags/c5.graph",
                   "raags/k13.graph", "raags/k23.graph", "cacti/o3.graph", "cacti/chain2.graph"}) {
    CAPTURE(rel);
    auto c = build_d2(load(rel));
    int b0 = 0;
    int want = betti1_oracle(c, &b0);
    auto got = betti1(c);
    if (b0 == 1) CHECK(got.betti1 == want);
    CHECK(got.connected == (b0 == 1));
  }
}

TEST_CASE("D2 is NPC and its involution is free") {
  for (auto& e : load_corpus(SQCI_CORPUS_DIR)) {
    if (e.graph.size() < 2 || e.graph.size() > 14) continue;
    CAPTURE(e.file);
    auto c = build_d2(e.graph);
    CHECK(npc_check(c).pass);
    std::set<std::string> names(c.vertices.begin(), c.vertices.end());
    for (size_t v = 0; v < c.vertices.size(); ++v) {
      auto& pr = c.vertex_pr[v];
      CHECK(pr[0] != pr[1]);
      CHECK(names.count("(" + pr[1] + "," + pr[0] + ")") == 1);
    }
  }
}

TEST_CASE("hyperplanes of D2 match the component count formula") {
  for (auto rel : {"misc/k3.graph", "misc/t3.graph", "misc/k4.graph", "raags/c5.graph", "raags/p5.graph",
                   "cacti/o3.graph", "misc/cube.graph"}) {
    CAPTURE(rel);
    auto g = load(rel);
    auto c = build_d2(g);
    auto hs = hyperplanes(c);
    CHECK(static_cast<int>(hs.size()) == hyperplane_count_oracle(g));
    std::vector<int> cls(c.edges.size(), -1);
    size_t covered = 0;
    for (size_t h = 0; h < hs.size(); ++h)
      for (int e : hs[h].edge_class) {
        CHECK(cls[e] == -1);
        cls[e] = static_cast<int>(h);
        ++covered;
      }
    CHECK(covered == c.edges.size());
    for (auto& sq : c.squares) {
      std::set<int> s;
      for (int e : sq.e) s.insert(cls[e]);
      CHECK(s.size() == 2);
    }
    for (auto& h : hs) {
      CHECK_FALSE(h.self_intersecting);
      CHECK_FALSE(h.self_osculating);
      CHECK_FALSE(h.one_sided);
    }
  }
  CHECK(hyperplanes(build_d2(load("misc/k3.graph"))).size() == 6);
}

TEST_CASE("npc_check on hand-built complexes") {
  SquareComplex torus;
  int v = torus.add_vertex("v");
  int a = torus.add_edge(v, v, "a"), b = torus.add_edge(v, v, "b");
  torus.add_square({a, b, a, b}, {1, 1, -1, -1});
  CHECK(npc_check(torus).pass);
  CHECK(betti1(torus).betti1 == 2);

  // three squares around a cube corner: the link at o is a triangle
  SquareComplex corner;
  int o = corner.add_vertex("o");
  int X = corner.add_vertex("X"), Y = corner.add_vertex("Y"), Z = corner.add_vertex("Z");
  int XY = corner.add_vertex("XY"), YZ = corner.add_vertex("YZ"), ZX = corner.add_vertex("ZX");
  int oX = corner.add_edge(o, X), oY = corner.add_edge(o, Y), oZ = corner.add_edge(o, Z);
  int X_XY = corner.add_edge(X, XY), Y_XY = corner.add_edge(Y, XY);
  int Y_YZ = corner.add_edge(Y, YZ), Z_YZ = corner.add_edge(Z, YZ);
  int Z_ZX = corner.add_edge(Z, ZX), X_ZX = corner.add_edge(X, ZX);
  corner.add_square({oX, X_XY, Y_XY, oY});
  corner.add_square({oY, Y_YZ, Z_YZ, oZ});
  corner.add_square({oZ, Z_ZX, X_ZX, oX});
  auto r = npc_check(corner);
  CHECK_FALSE(r.pass);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].vertex == o);
  CHECK(r.violations[0].kind == "triangle");
}

TEST_CASE("hyperplane pathologies on hand-built complexes") {
  // 2x1 strip with the two far top corners identified: the middle class osculates
  SquareComplex strip;
  int p0 = strip.add_vertex("p0"), p1 = strip.add_vertex("p1");
  int q0 = strip.add_vertex("q0"), q1 = strip.add_vertex("q1"), q2 = strip.add_vertex("q2");
  int p2 = p0;
  int t0 = strip.add_edge(p0, p1), t1 = strip.add_edge(p1, p2);
  int b0 = strip.add_edge(q0, q1), b1 = strip.add_edge(q1, q2);
  int s0 = strip.add_edge(p0, q0), s1 = strip.add_edge(p1, q1), s2 = strip.add_edge(p2, q2);
  strip.add_square({t0, s1, b0, s0});
  strip.add_square({t1, s2, b1, s1});
  auto hs = hyperplanes(strip);
  bool osc = false;
  for (auto& h : hs) {
    std::set<int> cls(h.edge_class.begin(), h.edge_class.end());
    if (cls == std::set<int>{s0, s1, s2}) osc = h.self_osculating;
    CHECK_FALSE(h.self_intersecting);
  }
  CHECK(osc);

  // annulus: one square, left and right sides identified preserving orientation
  SquareComplex ann;
  int u = ann.add_vertex("u"), w = ann.add_vertex("w");
  int top = ann.add_edge(u, u), bot = ann.add_edge(w, w), side = ann.add_edge(u, w);
  ann.add_square({top, side, bot, side}, {1, 1, -1, -1});
  for (auto& h : hyperplanes(ann)) {
    CHECK_FALSE(h.self_osculating);
    CHECK_FALSE(h.self_intersecting);
    CHECK_FALSE(h.one_sided);
  }

  // Moebius band: the side class is one-sided
  SquareComplex mob;
  int mu = mob.add_vertex("u"), mw = mob.add_vertex("w");
  int ea = mob.add_edge(mw, mu), eb = mob.add_edge(mw, mu), es = mob.add_edge(mu, mw);
  mob.add_square({ea, es, eb, es}, {1, 1, 1, 1});
  bool one_sided = false;
  for (auto& h : hyperplanes(mob))
    if (h.edge_class == std::vector<int>{es}) one_sided = h.one_sided;
  CHECK(one_sided);

  // a square whose four sides are one loop: both parallel classes coincide
  SquareComplex loop;
  int lv = loop.add_vertex("v");
  int la = loop.add_edge(lv, lv);
  loop.add_square({la, la, la, la}, {1, 1, -1, -1});
  auto lh = hyperplanes(loop);
  REQUIRE(lh.size() == 1);
  CHECK(lh[0].self_intersecting);
}

TEST_CASE("D2 of the three-triangle star has no pathological hyperplanes") {
  for (auto& h : hyperplanes(build_d2(load("cacti/o3.graph")))) {
    CHECK_FALSE(h.self_intersecting);
    CHECK_FALSE(h.self_osculating);
  }
}

TEST_CASE("betti1 of small complexes") {
  SquareComplex sq;
  int a = sq.add_vertex("a"), b = sq.add_vertex("b"), c = sq.add_vertex("c"), d = sq.add_vertex("d");
  int ab = sq.add_edge(a, b), bc = sq.add_edge(b, c), cd = sq.add_edge(c, d), da = sq.add_edge(d, a);
  sq.add_square({ab, bc, cd, da});
  CHECK(betti1(sq).betti1 == 0);

  SquareComplex wedge;
  int v = wedge.add_vertex("v");
  wedge.add_edge(v, v);
  wedge.add_edge(v, v);
  CHECK(betti1(wedge).betti1 == 2);
}

TEST_CASE("betti1 is invariant under cubical subdivision") {
  for (auto rel : {"misc/t3.graph", "misc/k4.graph", "raags/c5.graph", "raags/k23.graph"}) {
    CAPTURE(rel);
    auto c = build_d2(load(rel));
    auto s = subdivide(c);
    CHECK(s.squares.size() == 4 * c.squares.size());
    CHECK(betti1(s).betti1 == betti1(c).betti1);
    CHECK(npc_check(s).pass);
  }
}

TEST_CASE("square complex JSON round-trip") {
  auto c = build_d2(load("misc/k4.graph"));
  auto back = square_complex_from_json(to_json(c));
  CHECK(back.vertices == c.vertices);
  REQUIRE(back.edges.size() == c.edges.size());
  for (size_t e = 0; e < c.edges.size(); ++e) {
    CHECK(back.edges[e].u == c.edges[e].u);
    CHECK(back.edges[e].v == c.edges[e].v);
    CHECK(back.edges[e].id == c.edges[e].id);
  }
  REQUIRE(back.squares.size() == c.squares.size());
  for (size_t s = 0; s < c.squares.size(); ++s) {
    CHECK(back.squares[s].e == c.squares[s].e);
    CHECK(back.squares[s].dir == c.squares[s].dir);
  }
  CHECK(to_dot(c).find("graph") != std::string::npos);
}
