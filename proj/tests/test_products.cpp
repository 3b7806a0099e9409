#include <doctest.h>

#include <bit>
#include <set>

#include "common.hpp"
#include "sqci/corpus.hpp"
#include "sqci/products.hpp"

using namespace sqci;
using testutil::load;

namespace {

// standard sets through induced subgraphs rather than bit tricks
std::set<VSet> standard_oracle(const SimplicialGraph& g) {
  std::set<VSet> out;
  int n = g.size();
  for (long m = 1; m < (1L << n); ++m) {
    VSet vs;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) vs.push_back(i);
    if (vs.size() < 3) continue;
    bool ok = true;
    for (int v : vs) ok = ok && static_cast<int>(set_intersection(g.neighbors(v), vs).size()) >= 2;
    if (ok && components(g, vs).size() == 1) out.insert(vs);
  }
  return out;
}

std::set<VSet> masks_to_sets(const std::vector<std::uint64_t>& ms) {
  std::set<VSet> out;
  for (auto m : ms) {
    VSet vs;
    for (; m; m &= m - 1) vs.push_back(std::countr_zero(m));
    out.insert(vs);
  }
  return out;
}

// every vertex goes to side A, side B or neither; keep complete bipartite ones, then the maximal ones
std::set<std::pair<VSet, VSet>> join_oracle(const SimplicialGraph& g) {
  int n = g.size();
  std::set<std::pair<VSet, VSet>> all;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    VSet a, b;
    long c = code;
    for (int i = 0; i < n; ++i, c /= 3) {
      if (c % 3 == 1) a.push_back(i);
      if (c % 3 == 2) b.push_back(i);
    }
    if (a.empty() || b.empty() || b < a) continue;
    bool ok = true;
    for (int x : a)
      for (int y : b) ok = ok && g.adjacent(x, y);
    if (ok) all.insert({a, b});
  }
  std::set<std::pair<VSet, VSet>> out;
  for (auto& [a, b] : all) {
    bool maximal = true;
    for (auto& [c, d] : all) {
      if (std::make_pair(a, b) == std::make_pair(c, d)) continue;
      if ((is_subset(a, c) && is_subset(b, d)) || (is_subset(a, d) && is_subset(b, c))) maximal = false;
    }
    if (maximal) out.insert({a, b});
  }
  return out;
}

std::set<std::pair<VSet, VSet>> as_pairs(const std::vector<JoinSubgraph>& js) {
  std::set<std::pair<VSet, VSet>> out;
  for (auto& j : js) out.insert({j.side_a, j.side_b});
  return out;
}

// maximal ordered pairs of disjoint standard sets
std::set<std::pair<VSet, VSet>> product_oracle(const SimplicialGraph& g) {
  auto st = standard_oracle(g);
  std::vector<std::pair<VSet, VSet>> pairs;
  for (auto& a : st)
    for (auto& b : st)
      if (disjoint(a, b)) pairs.push_back({a, b});
  std::set<std::pair<VSet, VSet>> out;
  for (auto& p : pairs) {
    bool maximal = true;
    for (auto& q : pairs)
      if (p != q && is_subset(p.first, q.first) && is_subset(p.second, q.second)) maximal = false;
    if (maximal) out.insert(p);
  }
  return out;
}

std::set<std::pair<VSet, VSet>> as_pairs(const std::vector<ProductPair>& ps) {
  std::set<std::pair<VSet, VSet>> out;
  for (auto& p : ps) out.insert({p.first.vertices, p.second.vertices});
  return out;
}

VSet names(const SimplicialGraph& g, std::initializer_list<const char*> ns) {
  VSet vs;
  for (auto n : ns) vs.push_back(g.index(n));
  std::sort(vs.begin(), vs.end());
  return vs;
}

}  // namespace

TEST_CASE("maximal join subgraphs of small graphs") {
  auto p4 = load("raags/p4.graph");
  auto j = maximal_join_subgraphs(p4);
  std::set<std::pair<VSet, VSet>> want{{names(p4, {"a", "c"}), names(p4, {"b"})},
                                       {names(p4, {"b", "d"}), names(p4, {"c"})}};
  CHECK(as_pairs(j) == want);
  auto c4 = load("raags/c4.graph");
  CHECK(maximal_join_subgraphs(c4).size() == 1);
  auto c5 = load("raags/c5.graph");
  auto j5 = maximal_join_subgraphs(c5);
  REQUIRE(j5.size() == 5);
  for (auto& x : j5) CHECK(x.support().size() == 3);
  CHECK_THROWS_AS(maximal_join_subgraphs(load("misc/k3.graph")), std::invalid_argument);
}

TEST_CASE("maximal join subgraphs agree with the assignment oracle") {
  for (auto& e : load_corpus(SQCI_CORPUS_DIR)) {
    if (e.graph.size() > 11 || !is_triangle_free(e.graph)) continue;
    CAPTURE(e.file);
    auto got = as_pairs(maximal_join_subgraphs(e.graph));
    std::set<std::pair<VSet, VSet>> want;
    for (auto& [a, b] : join_oracle(e.graph)) {
      auto c = canonical_join(a, b);
      want.insert({c.side_a, c.side_b});
    }
    CHECK(got == want);
  }
}

TEST_CASE("standard sets: serial, parallel and oracle agree") {
  for (auto rel : {"cacti/o3.graph", "cacti/chain3.graph", "cacti/tsq.graph", "misc/cube.graph", "misc/k4.graph",
                   "raags/petersen.graph", "cacti/o4prime.graph"}) {
    CAPTURE(rel);
    auto g = load(rel);
    auto s = standard_sets_serial(g);
    auto p = standard_sets_parallel(g);
    CHECK(s == p);
    CHECK(masks_to_sets(s) == standard_oracle(g));
  }
}

TEST_CASE("brute force maximal products agree with the oracle") {
  for (auto rel : {"cacti/o3.graph", "cacti/chain2.graph", "cacti/chain3.graph", "cacti/tsq.graph", "misc/cube.graph",
                   "misc/k4.graph", "cacti/o3pendant.graph"}) {
    CAPTURE(rel);
    auto g = load(rel);
    auto want = product_oracle(g);
    CHECK(as_pairs(maximal_products_bruteforce(g, 24, true)) == want);
    CHECK(as_pairs(maximal_products_bruteforce(g, 24, false)) == want);
  }
}

TEST_CASE("cactus enumeration agrees with brute force on the corpus cacti") {
  for (auto& e : select_group(load_corpus(SQCI_CORPUS_DIR), "cacti")) {
    if (e.graph.size() > 17) continue;
    auto a = analyze_cactus(e.graph);
    if (!a.is_special) continue;
    CAPTURE(e.file);
    CHECK(as_pairs(maximal_products_cactus(a)) == as_pairs(maximal_products_bruteforce(e.graph)));
  }
}

TEST_CASE("maximal product counts") {
  auto count = [](const char* rel) {
    auto g = load(rel);
    return maximal_products_cactus(analyze_cactus(g)).size();
  };
  CHECK(count("cacti/o3.graph") == 6);
  CHECK(count("cacti/o4.graph") == 8);
  CHECK(count("cacti/chain2.graph") == 2);
  CHECK(maximal_products_bruteforce(load("misc/k3.graph")).empty());
  // the cube: three pairs of opposite faces, both orders
  CHECK(maximal_products_bruteforce(load("misc/cube.graph")).size() == 6);
}

TEST_CASE("product lists are closed under switching") {
  for (auto rel : {"cacti/o3.graph", "cacti/chain3.graph", "misc/cube.graph", "cacti/o4prime.graph"}) {
    CAPTURE(rel);
    auto ps = maximal_products_bruteforce(load(rel));
    std::set<ProductPair> s(ps.begin(), ps.end());
    for (auto& p : ps) {
      CHECK(s.count(p.swapped()) == 1);
      CHECK(disjoint(p.first.vertices, p.second.vertices));
    }
  }
}

TEST_CASE("intersect_products") {
  auto o3 = load("cacti/o3.graph");
  auto ps = maximal_products_cactus(analyze_cactus(o3));
  auto a1 = names(o3, {"a1", "a1b", "a1c"});
  auto a2 = names(o3, {"a2", "a2b", "a2c"});
  std::vector<ProductPair> with_a1, a1_a2;
  for (auto& p : ps) {
    if (p.first.vertices == a1) with_a1.push_back(p);
    if (p.first.vertices == a2 && is_subset(a1, p.second.vertices))
      a1_a2.push_back(p);
  }
  REQUIRE(with_a1.size() == 1);
  auto self = intersect_products(with_a1);
  REQUIRE(self.size() == 1);
  CHECK(self[0] == with_a1[0]);

  // a2 x (x a1 a3) meets (x a2 a3) x a1 in a2 x a1
  REQUIRE(a1_a2.size() == 1);
  ProductPair rev = with_a1[0].swapped();
  auto both = intersect_products({a1_a2[0], rev});
  REQUIRE(both.size() == 1);
  CHECK(both[0].first.vertices == a2);
  CHECK(both[0].second.vertices == a1);

  // opposite orders share nothing with two-sided cores
  CHECK(intersect_products({with_a1[0], rev}).empty());
  CHECK_THROWS_AS(intersect_products({}), std::invalid_argument);
}

TEST_CASE("brute force respects the cap") {
  CHECK_THROWS_AS(maximal_products_bruteforce(load("cacti/o7.graph"), 10), CapExceeded);
}

TEST_CASE("product JSON lists names") {
  auto g = load("cacti/chain2.graph");
  auto ps = maximal_products_cactus(analyze_cactus(g));
  REQUIRE_FALSE(ps.empty());
  auto j = to_json(g, ps[0]);
  CHECK(j.dump().find("a1") != std::string::npos);
}
