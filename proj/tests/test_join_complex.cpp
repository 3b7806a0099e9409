#include <doctest.h>

#include <queue>
#include <set>

#include "common.hpp"
#include "sqci/corpus.hpp"
#include "sqci/join_complex.hpp"

using namespace sqci;
using testutil::load;

namespace {

JoinComplex braid(const SimplicialGraph& g) { return build_ri_braid(analyze_cactus(g)); }

int edge_count(const JoinComplex& jc) {
  int n = 0;
  for (auto& s : jc.simplices) n += s.verts.size() == 2;
  return n;
}

std::vector<int> distances(const JoinComplex& jc, int from) {
  auto adj = jc.vertex_adjacency();
  std::vector<int> d(jc.vertex_count(), -1);
  std::queue<int> q;
  d[from] = 0;
  q.push(from);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        q.push(w);
      }
  }
  return d;
}

std::multiset<std::pair<std::vector<std::string>, std::string>> labelled_simplices(const JoinComplex& jc) {
  std::multiset<std::pair<std::vector<std::string>, std::string>> out;
  std::set<std::string> unused;
  for (auto& s : jc.simplices) {
    std::vector<std::string> vl;
    for (int v : s.verts) vl.push_back(jc.simplices[v].label.text);
    std::sort(vl.begin(), vl.end());
    out.insert({vl, s.label.text});
  }
  return out;
}

bool has_property(const std::vector<CjoinViolation>& vs, const std::string& p) {
  for (auto& v : vs)
    if (v.property == p) return true;
  return false;
}

// a 4-cycle in label form, matched up to rotation by two and reversal
bool contains_cycle(const ObstructionResult& r, std::array<std::string, 4> want) {
  std::vector<std::array<std::string, 4>> forms;
  for (int rot : {0, 2}) {
    std::array<std::string, 4> f;
    for (int i = 0; i < 4; ++i) f[i] = want[(i + rot) % 4];
    forms.push_back(f);
    forms.push_back({f[0], f[3], f[2], f[1]});
  }
  for (auto& l : r.labels)
    for (auto& f : forms)
      if (l == f) return true;
  return false;
}

}  // namespace

TEST_CASE("RI of the three-triangle star is a hexagon") {
  auto jc = braid(load("cacti/o3.graph"));
  CHECK(jc.vertex_count() == 6);
  CHECK(edge_count(jc) == 6);
  CHECK(jc.dimension() == 1);
  CHECK(betti1(jc) == 1);
  for (int v = 0; v < 6; ++v) CHECK(jc.vertex_adjacency()[v].size() == 2);

  auto rep = components_and_switch(jc);
  REQUIRE(rep.components.size() == 1);
  CHECK(rep.components[0].type == 'M');
  for (int v = 0; v < 6; ++v) {
    int w = rep.switch_map[v];
    CHECK(distances(jc, v)[w] == 3);
    CHECK(jc.simplices[w].label.first == jc.simplices[v].label.second);
    CHECK(jc.simplices[w].label.second == jc.simplices[v].label.first);
  }
  CHECK(validate_cjoin(jc).empty());
}

TEST_CASE("RI of the four-triangle star") {
  auto jc = braid(load("cacti/o4.graph"));
  CHECK(jc.vertex_count() == 8);
  CHECK(edge_count(jc) == 12);
  CHECK(jc.dimension() == 1);
  CHECK(betti1(jc) == 5);
  // two 4-cycles joined by a perfect matching: every vertex has valency 3
  for (auto& nb : jc.vertex_adjacency()) CHECK(nb.size() == 3);
  CHECK(components_and_switch(jc).components.size() == 1);
}

TEST_CASE("type-S chains give two switched simplices") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    auto jc = braid(load("cacti/chain" + std::to_string(n) + ".graph"));
    auto rep = components_and_switch(jc);
    REQUIRE(rep.components.size() == 2);
    for (int c = 0; c < 2; ++c) {
      CHECK(rep.components[c].type == 'S');
      CHECK(rep.components[c].twin == 1 - c);
      CHECK(static_cast<int>(rep.components[c].vertices.size()) == n - 1);
    }
    CHECK(jc.dimension() == n - 2);
    // the top simplex of each component carries an extreme label
    std::set<std::string> top;
    for (auto& s : jc.simplices)
      if (static_cast<int>(s.verts.size()) == n - 1) top.insert(s.label.text);
    CHECK(top == std::set<std::string>{"{a1}x{a" + std::to_string(n) + "}", "{a" + std::to_string(n) + "}x{a1}"});
    CHECK(validate_cjoin(jc).empty());
  }
}

TEST_CASE("the oracle route builds the same complexes") {
  for (auto& e : select_group(load_corpus(SQCI_CORPUS_DIR), "cacti")) {
    if (e.graph.size() > 14) continue;
    auto a = analyze_cactus(e.graph);
    if (!a.is_special) continue;
    CAPTURE(e.file);
    auto fast = build_ri_braid(a);
    auto slow = build_ri_from_products(e.graph, maximal_products_bruteforce(e.graph), &a);
    CHECK(labelled_simplices(fast) == labelled_simplices(slow));
  }
}

TEST_CASE("switch map is a label-swapping automorphism") {
  for (auto rel : {"cacti/o3.graph", "cacti/o4prime.graph", "cacti/chain4.graph", "cacti/tsq.graph"}) {
    CAPTURE(rel);
    auto jc = braid(load(rel));
    auto rep = components_and_switch(jc);
    auto index = jc.by_vertex_set();
    for (auto& s : jc.simplices) {
      std::vector<int> img;
      for (int v : s.verts) img.push_back(rep.switch_map[v]);
      std::sort(img.begin(), img.end());
      bool found = false;
      auto [lo, hi] = index.equal_range(img);
      for (auto it = lo; it != hi; ++it) {
        auto& l = jc.simplices[it->second].label;
        found = found || (l.first == s.label.second && l.second == s.label.first);
      }
      CHECK(found);
    }
  }
}

TEST_CASE("raag intersection complexes of paths and cycles") {
  auto p4 = build_ri_raag(load("raags/p4.graph"));
  CHECK(p4.vertex_count() == 2);
  CHECK(edge_count(p4) == 1);
  CHECK(p4.simplices[2].label.text == "{b}o{c}");

  for (int n : {5, 6, 7}) {
    CAPTURE(n);
    auto jc = build_ri_raag(load("raags/c" + std::to_string(n) + ".graph"));
    CHECK(jc.vertex_count() == n);
    CHECK(edge_count(jc) == n);
    CHECK(betti1(jc) == 1);
    for (auto& nb : jc.vertex_adjacency()) CHECK(nb.size() == 2);
    CHECK(validate_cjoin(jc).empty());
  }
  auto k13 = build_ri_raag(load("raags/k13.graph"));
  CHECK(k13.vertex_count() == 1);
  CHECK(k13.simplices[0].label.qi_type() == "ZxF");
  auto c4 = build_ri_raag(load("raags/c4.graph"));
  CHECK(c4.vertex_count() == 1);
  CHECK(c4.simplices[0].label.qi_type() == "FxF");
}

TEST_CASE("vertex classification") {
  auto p4 = load("raags/p4.graph");
  for (auto& c : vertex_classification(build_ri_raag(p4), p4)) {
    CHECK_FALSE(c.type1);
    CHECK_FALSE(c.separating);
  }
  auto c5 = load("raags/c5.graph");
  for (auto& c : vertex_classification(build_ri_raag(c5), c5)) CHECK(c.type1);
  auto p5 = load("raags/p5.graph");
  auto cls = vertex_classification(build_ri_raag(p5), p5);
  REQUIRE(cls.size() == 3);
  // the middle star separates the two ends
  int seps = 0;
  for (auto& c : cls) seps += c.separating;
  CHECK(seps == 1);
  CHECK_THROWS_AS(vertex_classification(braid(load("cacti/o3.graph")), p5), std::invalid_argument);
}

TEST_CASE("validate_cjoin catches injected violations") {
  for (auto rel : {"cacti/o3.graph", "cacti/o4.graph", "cacti/o4prime.graph", "cacti/spider3.graph"}) {
    CAPTURE(rel);
    CHECK(validate_cjoin(braid(load(rel))).empty());
  }
  for (auto rel : {"raags/p6.graph", "raags/petersen.graph", "raags/k23.graph"}) {
    CAPTURE(rel);
    CHECK(validate_cjoin(build_ri_raag(load(rel))).empty());
  }

  auto bad = build_ri_raag(load("raags/c5.graph"));
  auto& l = bad.simplices[0].label;
  l.second = set_union(l.second, l.first);
  CHECK(has_property(validate_cjoin(bad), "iv"));

  auto shared = build_ri_raag(load("raags/c5.graph"));
  int e = -1;
  for (size_t i = 0; i < shared.simplices.size(); ++i)
    if (shared.simplices[i].verts == std::vector<int>{0, 1}) e = static_cast<int>(i);
  REQUIRE(e >= 0);
  shared.simplices[0].label = shared.simplices[e].label;
  CHECK(has_property(validate_cjoin(shared), "iii"));
}

TEST_CASE("alternating separating pattern") {
  auto op = braid(load("cacti/o4prime.graph"));
  auto r = detect_obstruction_pattern(op);
  CHECK(r.found);
  CHECK(r.witnesses.size() == r.labels.size());
  CHECK(contains_cycle(r, {"{a1}x{a2}", "{a1}x{a3}", "{a4}x{a3}", "{a4}x{a2}"}));

  CHECK(detect_obstruction_pattern(braid(load("cacti/o4prime1.graph"))).found);
  CHECK_FALSE(detect_obstruction_pattern(braid(load("cacti/o3.graph"))).found);
  CHECK_FALSE(detect_obstruction_pattern(braid(load("cacti/o4.graph"))).found);
  CHECK_THROWS_AS(detect_obstruction_pattern(build_ri_raag(load("raags/p4.graph"))), std::invalid_argument);
}

TEST_CASE("join complex JSON round-trip") {
  for (auto jc : {braid(load("cacti/o4prime.graph")), build_ri_raag(load("raags/c5.graph"))}) {
    auto back = join_complex_from_json(to_json(jc));
    CHECK(back.kind == jc.kind);
    CHECK(back.vertex_ids == jc.vertex_ids);
    REQUIRE(back.simplices.size() == jc.simplices.size());
    for (size_t i = 0; i < jc.simplices.size(); ++i) {
      CHECK(back.simplices[i].verts == jc.simplices[i].verts);
      CHECK(back.simplices[i].label.text == jc.simplices[i].label.text);
    }
    CHECK(back.faces.size() == jc.faces.size());
    CHECK(betti1(back) == betti1(jc));
    CHECK(to_dot(jc).find("graph") != std::string::npos);
  }
}

TEST_CASE("cube braid complex from the oracle route") {
  auto g = load("misc/cube.graph");
  auto jc = build_ri_from_products(g, maximal_products_bruteforce(g));
  CHECK(jc.vertex_count() == 6);
  auto rep = components_and_switch(jc);
  CHECK(rep.components.size() == 6);
  for (auto& c : rep.components) CHECK(c.type == 'S');
}
