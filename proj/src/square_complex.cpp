#include "sqci/square_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sqci/homology.hpp"

namespace sqci {

int SquareComplex::add_vertex(const std::string& id) {
  vertices.push_back(id);
  return static_cast<int>(vertices.size()) - 1;
}

int SquareComplex::add_edge(int u, int v, const std::string& id) {
  edges.push_back({u, v, id.empty() ? "e" + std::to_string(edges.size()) : id});
  return static_cast<int>(edges.size()) - 1;
}

int SquareComplex::add_square(const std::array<int, 4>& ids) {
  std::array<int, 4> dirs{};
  // start vertex of e0 is the endpoint shared with e3
  const auto& e0 = edges[ids[0]];
  const auto& e3 = edges[ids[3]];
  int start = (e0.u == e3.u || e0.u == e3.v) ? e0.u : e0.v;
  int cur = start;
  for (int i = 0; i < 4; ++i) {
    const auto& e = edges[ids[i]];
    if (e.u == e.v) throw std::invalid_argument("add_square: loop edge needs explicit directions");
    if (e.u == cur) {
      dirs[i] = 1;
      cur = e.v;
    } else if (e.v == cur) {
      dirs[i] = -1;
      cur = e.u;
    } else {
      throw std::invalid_argument("add_square: edges do not form a closed path");
    }
  }
  if (cur != start) throw std::invalid_argument("add_square: path not closed");
  return add_square(ids, dirs);
}

int SquareComplex::add_square(const std::array<int, 4>& ids, const std::array<int, 4>& dirs) {
  squares.push_back({ids, dirs});
  auto cs = corners(squares.back());
  for (int i = 0; i < 4; ++i) {
    const auto& e = edges[ids[i]];
    int from = dirs[i] > 0 ? e.u : e.v, to = dirs[i] > 0 ? e.v : e.u;
    if (from != cs[i] || to != cs[(i + 1) % 4]) {
      squares.pop_back();
      throw std::invalid_argument("add_square: inconsistent boundary");
    }
  }
  return static_cast<int>(squares.size()) - 1;
}

std::array<int, 4> SquareComplex::corners(const Square& s) const {
  std::array<int, 4> c{};
  for (int i = 0; i < 4; ++i) {
    const auto& e = edges[s.e[i]];
    c[i] = s.dir[i] > 0 ? e.u : e.v;
  }
  return c;
}

SquareComplex build_d2(const SimplicialGraph& g) {
  if (g.size() < 2) throw std::invalid_argument("build_d2: need at least 2 vertices");
  SquareComplex c;
  int n = g.size();
  std::map<std::pair<int, int>, int> vid;
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      if (v == w) continue;
      vid[{v, w}] = c.add_vertex("(" + g.name(v) + "," + g.name(w) + ")");
      c.vertex_pr.push_back({g.name(v), g.name(w)});
    }
  const auto& E = g.edges();
  auto ename = [&](int i) { return g.name(E[i].first) + "-" + g.name(E[i].second); };
  std::map<std::pair<int, int>, int> edge_v, v_edge;  // (edge, vertex) and (vertex, edge)
  for (int i = 0; i < static_cast<int>(E.size()); ++i) {
    auto [a, b] = E[i];
    for (int v = 0; v < n; ++v) {
      if (v == a || v == b) continue;
      edge_v[{i, v}] = c.add_edge(vid[{a, v}], vid[{b, v}], "(" + ename(i) + "," + g.name(v) + ")");
      c.edge_pr.push_back({ename(i), g.name(v)});
    }
  }
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < static_cast<int>(E.size()); ++i) {
      auto [a, b] = E[i];
      if (v == a || v == b) continue;
      v_edge[{v, i}] = c.add_edge(vid[{v, a}], vid[{v, b}], "(" + g.name(v) + "," + ename(i) + ")");
      c.edge_pr.push_back({g.name(v), ename(i)});
    }
  for (int i = 0; i < static_cast<int>(E.size()); ++i)
    for (int j = 0; j < static_cast<int>(E.size()); ++j) {
      auto [a, b] = E[i];
      auto [cc, d] = E[j];
      if (a == cc || a == d || b == cc || b == d) continue;
      c.add_square({edge_v[{i, cc}], v_edge[{b, j}], edge_v[{i, d}], v_edge[{a, j}]}, {1, 1, -1, -1});
      c.square_pr.push_back({ename(i), ename(j)});
    }
  return c;
}

namespace {

int arriving_end(int dir) { return dir > 0 ? 1 : 0; }
int departing_end(int dir) { return dir > 0 ? 0 : 1; }

}  // namespace

std::vector<std::pair<int, int>> link_edges(const SquareComplex& c, int vertex) {
  std::vector<std::pair<int, int>> out;
  for (const auto& s : c.squares) {
    auto cs = c.corners(s);
    for (int i = 0; i < 4; ++i) {
      int at = cs[(i + 1) % 4];
      if (at != vertex) continue;
      int x = 2 * s.e[i] + arriving_end(s.dir[i]);
      int y = 2 * s.e[(i + 1) % 4] + departing_end(s.dir[(i + 1) % 4]);
      out.emplace_back(x, y);
    }
  }
  return out;
}

NpcReport npc_check(const SquareComplex& c) {
  NpcReport rep;
  std::vector<std::vector<std::pair<int, int>>> links(c.vertices.size());
  for (const auto& s : c.squares) {
    auto cs = c.corners(s);
    for (int i = 0; i < 4; ++i) {
      int x = 2 * s.e[i] + arriving_end(s.dir[i]);
      int y = 2 * s.e[(i + 1) % 4] + departing_end(s.dir[(i + 1) % 4]);
      links[cs[(i + 1) % 4]].emplace_back(x, y);
    }
  }
  for (int v = 0; v < static_cast<int>(c.vertices.size()); ++v) {
    std::set<std::pair<int, int>> seen;
    std::map<int, std::set<int>> adj;
    bool loop = false, multi = false;
    for (auto [x, y] : links[v]) {
      if (x == y) {
        loop = true;
        continue;
      }
      if (!seen.insert(std::minmax(x, y)).second) multi = true;
      adj[x].insert(y);
      adj[y].insert(x);
    }
    bool triangle = false;
    for (auto& [x, nx] : adj)
      for (int y : nx)
        if (y > x)
          for (int z : adj[y])
            if (z > y && nx.count(z)) triangle = true;
    if (loop) rep.violations.push_back({v, "loop"});
    if (multi) rep.violations.push_back({v, "multi-edge"});
    if (triangle) rep.violations.push_back({v, "triangle"});
  }
  rep.pass = rep.violations.empty();
  return rep;
}

namespace {

struct ParityUF {
  std::vector<int> parent, parity;
  explicit ParityUF(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [r, p] = find(parent[x]);
    parent[x] = r;
    parity[x] ^= p;
    return {r, parity[x]};
  }
  // false when the relation contradicts earlier ones
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  }
};

}  // namespace

std::vector<Hyperplane> hyperplanes(const SquareComplex& c) {
  int m = static_cast<int>(c.edges.size());
  ParityUF uf(m);
  std::vector<std::pair<int, int>> conflicts;
  for (const auto& s : c.squares) {
    for (int i = 0; i < 2; ++i) {
      int a = s.e[i], b = s.e[i + 2];
      // e_i runs parallel to the reverse traversal of e_{i+2}
      int rel = (s.dir[i] == -s.dir[i + 2]) ? 0 : 1;
      if (!uf.unite(a, b, rel)) conflicts.emplace_back(a, b);
    }
  }
  std::map<int, int> root_index;
  std::vector<Hyperplane> out;
  for (int e = 0; e < m; ++e) {
    int r = uf.find(e).first;
    if (!root_index.count(r)) {
      root_index[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[root_index[r]].edge_class.push_back(e);
  }
  for (auto [a, b] : conflicts) out[root_index[uf.find(a).first]].one_sided = true;
  std::vector<int> cls(m);
  for (int e = 0; e < m; ++e) cls[e] = root_index[uf.find(e).first];
  std::set<std::pair<int, int>> cosquare;
  for (const auto& s : c.squares) {
    if (cls[s.e[0]] == cls[s.e[1]]) out[cls[s.e[0]]].self_intersecting = true;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (s.e[i] != s.e[j]) cosquare.insert({s.e[i], s.e[j]});
  }
  std::vector<std::vector<int>> incident(c.vertices.size());
  for (int e = 0; e < m; ++e) {
    incident[c.edges[e].u].push_back(e);
    if (c.edges[e].v != c.edges[e].u) incident[c.edges[e].v].push_back(e);
  }
  for (auto& inc : incident)
    for (size_t i = 0; i < inc.size(); ++i)
      for (size_t j = i + 1; j < inc.size(); ++j)
        if (cls[inc[i]] == cls[inc[j]] && !cosquare.count({inc[i], inc[j]}))
          out[cls[inc[i]]].self_osculating = true;
  return out;
}

BettiResult betti1(const SquareComplex& c) {
  int n = static_cast<int>(c.vertices.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto& e : c.edges) parent[find(e.u)] = find(e.v);
  std::map<int, int> size;
  for (int v = 0; v < n; ++v) ++size[find(v)];
  BettiResult res;
  res.components = static_cast<int>(size.size());
  res.connected = res.components <= 1;
  if (n == 0) return res;
  int best = std::max_element(size.begin(), size.end(), [](auto& a, auto& b) {
               return a.second < b.second;
             })->first;
  std::vector<int> eidx(c.edges.size(), -1);
  std::vector<SparseColumn> d1, d2;
  for (size_t i = 0; i < c.edges.size(); ++i) {
    auto& e = c.edges[i];
    if (find(e.u) != best) continue;
    eidx[i] = static_cast<int>(d1.size());
    SparseColumn col;
    if (e.u != e.v) col = {{e.v, 1}, {e.u, -1}};
    d1.push_back(col);
  }
  for (auto& s : c.squares) {
    if (eidx[s.e[0]] < 0) continue;
    std::map<int, long long> acc;
    for (int i = 0; i < 4; ++i) acc[eidx[s.e[i]]] += s.dir[i];
    SparseColumn col(acc.begin(), acc.end());
    d2.push_back(col);
  }
  res.betti1 = sqci::betti1(d1, d2);
  return res;
}

nlohmann::json to_json(const SquareComplex& c) {
  nlohmann::json j;
  j["vertices"] = c.vertices;
  j["edges"] = nlohmann::json::array();
  for (auto& e : c.edges) j["edges"].push_back({c.vertices[e.u], c.vertices[e.v], e.id});
  j["squares"] = nlohmann::json::array();
  j["dirs"] = nlohmann::json::array();
  for (auto& s : c.squares) {
    nlohmann::json sq = nlohmann::json::array();
    for (int e : s.e) sq.push_back(c.edges[e].id);
    j["squares"].push_back(sq);
    j["dirs"].push_back(s.dir);
  }
  return j;
}

SquareComplex square_complex_from_json(const nlohmann::json& j) {
  SquareComplex c;
  std::map<std::string, int> vid, eid;
  for (auto& v : j.at("vertices")) vid[v.get<std::string>()] = c.add_vertex(v.get<std::string>());
  for (auto& e : j.at("edges")) {
    auto id = e.at(2).get<std::string>();
    eid[id] = c.add_edge(vid.at(e.at(0).get<std::string>()), vid.at(e.at(1).get<std::string>()), id);
  }
  auto& sq = j.at("squares");
  for (size_t i = 0; i < sq.size(); ++i) {
    std::array<int, 4> ids{};
    for (int k = 0; k < 4; ++k) ids[k] = eid.at(sq[i].at(k).get<std::string>());
    if (j.contains("dirs")) {
      std::array<int, 4> d{};
      for (int k = 0; k < 4; ++k) d[k] = j["dirs"][i][k].get<int>();
      c.add_square(ids, d);
    } else {
      c.add_square(ids);
    }
  }
  return c;
}

std::string to_dot(const SquareComplex& c) {
  std::string s = "graph complex {\n";
  for (size_t v = 0; v < c.vertices.size(); ++v)
    s += "  n" + std::to_string(v) + " [label=\"" + c.vertices[v] + "\"];\n";
  for (auto& e : c.edges)
    s += "  n" + std::to_string(e.u) + " -- n" + std::to_string(e.v) + " [label=\"" + e.id + "\"];\n";
  return s + "}\n";
}

}  // namespace sqci
