#include "sqci/products.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sqci {

std::vector<std::pair<int, int>> join_edges(const JoinSubgraph& j) {
  std::vector<std::pair<int, int>> out;
  for (int a : j.side_a)
    for (int b : j.side_b) out.push_back(std::minmax(a, b));
  std::sort(out.begin(), out.end());
  return out;
}

JoinSubgraph canonical_join(VSet a, VSet b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (b < a) std::swap(a, b);
  return {a, b};
}

std::vector<JoinSubgraph> maximal_join_subgraphs(const SimplicialGraph& g) {
  if (!is_triangle_free(g)) throw std::invalid_argument("maximal_join_subgraphs: graph has a triangle");
  // closed sets of the common-neighbourhood map are intersections of neighbourhoods
  std::set<VSet> closed;
  std::vector<VSet> frontier;
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) > 0 && closed.insert(g.neighbors(v)).second) frontier.push_back(g.neighbors(v));
  while (!frontier.empty()) {
    std::vector<VSet> next;
    for (auto& s : frontier)
      for (int v = 0; v < g.size(); ++v) {
        auto t = set_intersection(s, g.neighbors(v));
        if (!t.empty() && closed.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  auto common = [&](const VSet& s) {
    VSet c;
    for (int v = 0; v < g.size(); ++v)
      if (std::all_of(s.begin(), s.end(), [&](int x) { return g.adjacent(v, x); })) c.push_back(v);
    return c;
  };
  std::set<JoinSubgraph> out;
  for (auto& a : closed) {
    auto b = common(a);
    if (!b.empty()) out.insert(canonical_join(a, b));
  }
  return {out.begin(), out.end()};
}

std::vector<ProductPair> maximal_products_cactus(const CactusAnalysis& a) {
  if (!a.is_special) throw std::invalid_argument("maximal_products_cactus: not a special cactus");
  std::set<ProductPair> out;
  if (a.cycles.size() < 2) return {};
  const auto& g = *a.graph;
  const auto& t = a.spine;
  for (auto [p, q] : t.edges()) {
    // component of the spine minus the edge pq that contains the start vertex
    auto side = [&](int start, int blocked) {
      std::vector<char> seen(t.size(), 0);
      std::vector<int> stack{start};
      seen[start] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : t.neighbors(v))
          if (!seen[w] && !(v == start && w == blocked)) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      VSet pulled;
      for (int v = 0; v < g.size(); ++v)
        if (seen[a.psi[v]]) pulled.push_back(v);
      return core(Subgraph{&g, pulled});
    };
    auto cp = side(p, q), cq = side(q, p);
    if (cp.empty() || cq.empty()) continue;
    out.insert({cp, cq});
    out.insert({cq, cp});
  }
  return {out.begin(), out.end()};
}

namespace {

bool is_standard_mask(const std::vector<std::uint64_t>& adj, std::uint64_t m) {
  if (std::popcount(m) < 3) return false;
  for (std::uint64_t r = m; r; r &= r - 1) {
    int v = std::countr_zero(r);
    if (std::popcount(adj[v] & m) < 2) return false;
  }
  std::uint64_t seen = m & -m, grow = seen;
  while (grow) {
    std::uint64_t next = 0;
    for (std::uint64_t r = grow; r; r &= r - 1) next |= adj[std::countr_zero(r)];
    next &= m & ~seen;
    seen |= next;
    grow = next;
  }
  return seen == m;
}

std::vector<std::uint64_t> adjacency_masks(const SimplicialGraph& g) {
  if (g.size() > 40) throw CapExceeded("standard set enumeration supports at most 40 vertices");
  std::vector<std::uint64_t> adj(g.size(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

}  // namespace

std::vector<std::uint64_t> standard_sets_serial(const SimplicialGraph& g) {
  auto adj = adjacency_masks(g);
  std::uint64_t total = std::uint64_t{1} << g.size();
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < total; ++m)
    if (is_standard_mask(adj, m)) out.push_back(m);
  return out;
}

std::vector<std::uint64_t> standard_sets_parallel(const SimplicialGraph& g) {
  auto adj = adjacency_masks(g);
  std::int64_t total = std::int64_t{1} << g.size();
  std::vector<std::uint64_t> out;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t m = 1; m < total; ++m)
      if (is_standard_mask(adj, static_cast<std::uint64_t>(m))) local.push_back(static_cast<std::uint64_t>(m));
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int default_cap() {
  if (const char* env = std::getenv("SQCI_CAP")) {
    int c = std::atoi(env);
    if (c > 0) return c;
  }
  return 24;
}

std::vector<ProductPair> maximal_products_bruteforce(const SimplicialGraph& g, int cap, bool parallel) {
  if (g.size() > cap)
    throw CapExceeded("graph has " + std::to_string(g.size()) + " vertices, cap is " + std::to_string(cap));
  auto sets = parallel ? standard_sets_parallel(g) : standard_sets_serial(g);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (auto a : sets)
    for (auto b : sets)
      if (!(a & b)) pairs.emplace_back(a, b);
  auto enlargeable = [&](std::uint64_t x, std::uint64_t other) {
    for (auto s : sets)
      if (s != x && (s & x) == x && !(s & other)) return true;
    return false;
  };
  std::vector<char> keep(pairs.size(), 0);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(pairs.size()); ++i) {
    auto [a, b] = pairs[i];
    keep[i] = !enlargeable(a, b) && !enlargeable(b, a);
  }
  auto to_sub = [&](std::uint64_t m) {
    VSet vs;
    for (; m; m &= m - 1) vs.push_back(std::countr_zero(m));
    return Subgraph{&g, vs};
  };
  std::vector<ProductPair> out;
  for (size_t i = 0; i < pairs.size(); ++i)
    if (keep[i]) out.push_back({to_sub(pairs[i].first), to_sub(pairs[i].second)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProductPair> intersect_products(const std::vector<ProductPair>& ps) {
  if (ps.empty()) throw std::invalid_argument("intersect_products: empty input");
  const auto& g = *ps[0].first.parent;
  VSet w1 = ps[0].first.vertices, w2 = ps[0].second.vertices;
  for (auto& p : ps) {
    w1 = set_intersection(w1, p.first.vertices);
    w2 = set_intersection(w2, p.second.vertices);
  }
  auto cores = [&](const VSet& w) {
    std::vector<Subgraph> out;
    for (auto& comp : components(g, w)) {
      auto c = core(Subgraph{&g, comp});
      if (!c.empty()) out.push_back(c);
    }
    return out;
  };
  std::vector<ProductPair> out;
  for (auto& a : cores(w1))
    for (auto& b : cores(w2)) out.push_back({a, b});
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json to_json(const SimplicialGraph& g, const Subgraph& s) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (int v : s.vertices) j["vertices"].push_back(g.name(v));
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : s.edges()) j["edges"].push_back({g.name(u), g.name(v)});
  return j;
}

nlohmann::json to_json(const SimplicialGraph& g, const ProductPair& p) {
  return {{"first", to_json(g, p.first)}, {"second", to_json(g, p.second)}};
}

}  // namespace sqci
