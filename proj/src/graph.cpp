#include "sqci/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace sqci {

int SimplicialGraph::add_vertex(const std::string& name) {
  if (index_.count(name)) throw ParseError("duplicate vertex " + name);
  int id = size();
  names_.push_back(name);
  index_[name] = id;
  adj_.emplace_back();
  return id;
}

void SimplicialGraph::add_edge(int u, int v) {
  if (u == v) throw ParseError("loop edge at " + names_[u]);
  if (u > v) std::swap(u, v);
  auto e = std::make_pair(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) throw ParseError("multi-edge " + names_[u] + " " + names_[v]);
  edges_.insert(it, e);
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

void SimplicialGraph::add_edge(const std::string& a, const std::string& b) {
  add_edge(index(a), index(b));
}

int SimplicialGraph::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ParseError("unknown vertex " + name);
  return it->second;
}

bool SimplicialGraph::adjacent(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

VSet SimplicialGraph::star(int v) const {
  VSet s = adj_[v];
  s.insert(std::lower_bound(s.begin(), s.end(), v), v);
  return s;
}

SimplicialGraph parse_graph(const std::string& text) {
  SimplicialGraph g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind[0] == '#') continue;
    std::vector<std::string> args;
    for (std::string t; ls >> t;) args.push_back(t);
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    if (kind == "v") {
      if (args.size() != 1) fail("expected 'v <name>'");
      if (g.has_vertex(args[0])) fail("duplicate vertex " + args[0]);
      g.add_vertex(args[0]);
    } else if (kind == "e") {
      if (args.size() != 2) fail("expected 'e <name> <name>'");
      for (auto& a : args)
        if (!g.has_vertex(a)) fail("unknown endpoint " + a);
      if (args[0] == args[1]) fail("loop edge");
      int u = g.index(args[0]), v = g.index(args[1]);
      if (g.adjacent(u, v)) fail("multi-edge");
      g.add_edge(u, v);
    } else {
      fail("unknown record '" + kind + "'");
    }
  }
  return g;
}

SimplicialGraph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize_graph(const SimplicialGraph& g) {
  std::string out;
  for (auto& n : g.names()) out += "v " + n + "\n";
  for (auto [u, v] : g.edges()) out += "e " + g.name(u) + " " + g.name(v) + "\n";
  return out;
}

VSet set_union(const VSet& a, const VSet& b) {
  VSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

VSet set_intersection(const VSet& a, const VSet& b) {
  VSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

VSet set_difference(const VSet& a, const VSet& b) {
  VSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

bool is_subset(const VSet& a, const VSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const VSet& a, const VSet& b) { return set_intersection(a, b).empty(); }

std::string format_set(const SimplicialGraph& g, const VSet& vs) {
  std::string s = "{";
  for (size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + g.name(vs[i]);
  return s + "}";
}

std::vector<std::pair<int, int>> Subgraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u : vertices)
    for (int w : parent->neighbors(u))
      if (u < w && std::binary_search(vertices.begin(), vertices.end(), w)) out.emplace_back(u, w);
  return out;
}

int Subgraph::edge_count() const { return static_cast<int>(edges().size()); }

int Subgraph::rank() const {
  if (vertices.empty()) return 0;
  return edge_count() - static_cast<int>(vertices.size()) +
         static_cast<int>(components(*parent, vertices).size());
}

Subgraph induced(const SimplicialGraph& g, VSet vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return Subgraph{&g, std::move(vs)};
}

Subgraph core(const Subgraph& s) {
  const auto& g = *s.parent;
  std::vector<char> in(g.size(), 0);
  std::vector<int> deg(g.size(), 0);
  for (int v : s.vertices) in[v] = 1;
  std::vector<int> stack;
  for (int v : s.vertices) {
    for (int w : g.neighbors(v)) deg[v] += in[w];
    if (deg[v] <= 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!in[v]) continue;
    in[v] = 0;
    for (int w : g.neighbors(v))
      if (in[w] && --deg[w] == 1) stack.push_back(w);
  }
  VSet out;
  for (int v : s.vertices)
    if (in[v]) out.push_back(v);
  return Subgraph{s.parent, out};
}

std::vector<VSet> components(const SimplicialGraph& g, const VSet& within) {
  std::vector<char> in(g.size(), 0), seen(g.size(), 0);
  for (int v : within) in[v] = 1;
  std::vector<VSet> out;
  for (int s : within) {
    if (seen[s]) continue;
    VSet comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

std::vector<VSet> components(const SimplicialGraph& g) {
  VSet all(g.size());
  std::iota(all.begin(), all.end(), 0);
  return components(g, all);
}

bool is_connected(const SimplicialGraph& g) { return g.size() > 0 && components(g).size() == 1; }

bool is_tree(const SimplicialGraph& g) { return is_connected(g) && g.edge_count() == g.size() - 1; }

int diameter(const SimplicialGraph& g) {
  int best = 0;
  for (int s = 0; s < g.size(); ++s) {
    std::vector<int> d(g.size(), -1);
    std::queue<int> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (d[w] < 0) {
          d[w] = d[v] + 1;
          q.push(w);
        }
    }
    for (int x : d) {
      if (x < 0) return -1;
      best = std::max(best, x);
    }
  }
  return best;
}

std::string to_string(CactusType t) {
  switch (t) {
    case CactusType::S: return "S";
    case CactusType::M: return "M";
    default: return "not-applicable";
  }
}

bool CactusAnalysis::is_joint(int sv) const {
  return std::find(joints.begin(), joints.end(), sv) != joints.end();
}

int CactusAnalysis::cycle_of_joint(int sv) const {
  auto it = std::find(joints.begin(), joints.end(), sv);
  return it == joints.end() ? -1 : static_cast<int>(it - joints.begin());
}

std::vector<int> CactusAnalysis::cycles_in(const VSet& vs) const {
  std::vector<int> out;
  for (size_t i = 0; i < cycles.size(); ++i)
    if (is_subset(cycles[i].vertices, vs)) out.push_back(static_cast<int>(i));
  return out;
}

std::string CactusAnalysis::cycle_label(const VSet& vs) const {
  std::string s = "{";
  bool first = true;
  for (int c : cycles_in(vs)) {
    s += (first ? "" : ",") + cycle_names[c];
    first = false;
  }
  return s + "}";
}

namespace {

// iteratively strip non-joint leaves; returns kept flags
std::vector<char> prune_pendant(const SimplicialGraph& t, const std::vector<char>& joint) {
  std::vector<char> keep(t.size(), 1);
  std::vector<int> deg(t.size());
  std::vector<int> stack;
  for (int v = 0; v < t.size(); ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1 && !joint[v]) stack.push_back(v);
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!keep[v]) continue;
    keep[v] = 0;
    for (int w : t.neighbors(v))
      if (keep[w] && --deg[w] <= 1 && !joint[w]) stack.push_back(w);
  }
  return keep;
}

}  // namespace

SimplicialGraph CactusAnalysis::pruned_spine() const {
  std::vector<char> joint(spine.size(), 0);
  for (int j : joints) joint[j] = 1;
  auto keep = prune_pendant(spine, joint);
  SimplicialGraph out;
  std::vector<int> id(spine.size(), -1);
  for (int v = 0; v < spine.size(); ++v)
    if (keep[v]) id[v] = out.add_vertex(spine.name(v));
  for (auto [u, v] : spine.edges())
    if (keep[u] && keep[v]) out.add_edge(id[u], id[v]);
  return out;
}

SimplicialGraph CactusAnalysis::reduced_spine(std::vector<bool>* joint_flags) const {
  SimplicialGraph p = pruned_spine();
  std::vector<char> joint(p.size(), 0);
  for (int j : joints)
    if (p.has_vertex(spine.name(j))) joint[p.index(spine.name(j))] = 1;
  // suppress valency-2 non-joints by walking between kept vertices
  std::vector<char> keep(p.size(), 1);
  for (int v = 0; v < p.size(); ++v)
    if (!joint[v] && p.degree(v) == 2) keep[v] = 0;
  SimplicialGraph out;
  std::vector<int> id(p.size(), -1);
  for (int v = 0; v < p.size(); ++v)
    if (keep[v]) id[v] = out.add_vertex(p.name(v));
  std::set<std::pair<int, int>> done;
  for (int v = 0; v < p.size(); ++v) {
    if (!keep[v]) continue;
    for (int w : p.neighbors(v)) {
      int prev = v, cur = w;
      while (!keep[cur]) {
        int nxt = p.neighbors(cur)[0] == prev ? p.neighbors(cur)[1] : p.neighbors(cur)[0];
        prev = cur;
        cur = nxt;
      }
      auto e = std::minmax(id[v], id[cur]);
      if (done.insert(e).second) out.add_edge(e.first, e.second);
    }
  }
  if (joint_flags) {
    joint_flags->assign(out.size(), false);
    for (int v = 0; v < p.size(); ++v)
      if (keep[v]) (*joint_flags)[id[v]] = joint[v];
  }
  return out;
}

CactusAnalysis analyze_cactus(const SimplicialGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("analyze_cactus: graph not connected");
  CactusAnalysis a;
  a.graph = &g;
  int n = g.size();

  // biconnected components via Tarjan's edge stack
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<std::pair<int, int>>> blocks;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        estack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<std::pair<int, int>> blk;
          while (true) {
            auto e = estack.back();
            estack.pop_back();
            blk.push_back(e);
            if (e == std::make_pair(v, w)) break;
          }
          blocks.push_back(blk);
        }
      } else if (disc[w] < disc[v]) {
        estack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  dfs(0, -1);

  std::vector<VSet> cyc_sets;
  for (auto& blk : blocks) {
    if (blk.size() == 1) continue;
    VSet vs;
    for (auto [u, w] : blk) {
      vs.push_back(u);
      vs.push_back(w);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() != blk.size()) return a;  // block is not a single cycle
    cyc_sets.push_back(vs);
  }
  a.is_cactus = true;
  std::sort(cyc_sets.begin(), cyc_sets.end());
  for (auto& vs : cyc_sets) {
    a.cycles.push_back(Subgraph{&g, vs});
    std::vector<int> order{vs[0]};
    int prev = -1, cur = vs[0];
    while (true) {
      int nxt = -1;
      for (int w : g.neighbors(cur))
        if (w != prev && std::binary_search(vs.begin(), vs.end(), w)) {
          nxt = w;
          break;
        }
      if (nxt == vs[0] || nxt < 0) break;
      order.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    a.cycle_orders.push_back(order);
    a.cycle_names.push_back(g.name(vs[0]));
  }

  std::vector<int> cycle_count(n, 0);
  for (auto& c : a.cycles)
    for (int v : c.vertices) ++cycle_count[v];
  a.is_special = std::all_of(cycle_count.begin(), cycle_count.end(), [](int c) { return c <= 1; });

  // spine: one joint per cycle, shared cycle vertices and non-cycle vertices verbatim
  auto fresh = [&](std::string base) {
    while (g.has_vertex(base) || a.spine.has_vertex(base)) base += "'";
    return base;
  };
  a.psi.assign(n, -1);
  for (size_t i = 0; i < a.cycles.size(); ++i)
    a.joints.push_back(a.spine.add_vertex(fresh("[" + a.cycle_names[i] + "]")));
  for (int v = 0; v < n; ++v) {
    if (cycle_count[v] == 1) {
      for (size_t i = 0; i < a.cycles.size(); ++i)
        if (std::binary_search(a.cycles[i].vertices.begin(), a.cycles[i].vertices.end(), v))
          a.psi[v] = a.joints[i];
    } else {
      a.psi[v] = a.spine.add_vertex(g.name(v));
    }
  }
  for (size_t i = 0; i < a.cycles.size(); ++i)
    for (int v : a.cycles[i].vertices)
      if (cycle_count[v] > 1) a.spine.add_edge(a.joints[i], a.psi[v]);
  std::vector<char> on_cycle_edge;
  for (auto [u, v] : g.edges()) {
    bool cycle_edge = false;
    for (auto& c : a.cycles)
      if (std::binary_search(c.vertices.begin(), c.vertices.end(), u) &&
          std::binary_search(c.vertices.begin(), c.vertices.end(), v))
        cycle_edge = true;
    if (!cycle_edge) a.spine.add_edge(a.psi[u], a.psi[v]);
  }

  if (a.is_special && a.cycles.size() >= 2) {
    std::vector<char> joint(a.spine.size(), 0);
    for (int j : a.joints) joint[j] = 1;
    auto keep = prune_pendant(a.spine, joint);
    for (int v = 0; v < a.spine.size(); ++v)
      if (!keep[v]) a.redundant.push_back(a.spine.name(v));
    SimplicialGraph p = a.pruned_spine();
    bool path = true;
    for (int v = 0; v < p.size(); ++v) {
      if (p.degree(v) > 2) path = false;
      if (!joint[a.spine.index(p.name(v))] && p.degree(v) == 2)
        a.redundant.push_back(p.name(v));
    }
    a.type = path ? CactusType::S : CactusType::M;
  }
  return a;
}

std::vector<std::vector<int>> detect_induced_cycles(const SimplicialGraph& g, int n) {
  if (n < 3) throw std::invalid_argument("detect_induced_cycles: n must be >= 3");
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> used(g.size(), 0);
  // path starts at its least vertex; second vertex less than last closes the orientation
  std::function<void()> extend = [&]() {
    int s = path[0], last = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (g.adjacent(last, s) && path[1] < last) out.push_back(path);
      return;
    }
    for (int w : g.neighbors(last)) {
      if (w <= s || used[w]) continue;
      bool chord = false;
      for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.adjacent(path[i], w)) continue;
        if (i == 0 && static_cast<int>(path.size()) == n - 1) continue;
        chord = true;
        break;
      }
      if (chord) continue;
      used[w] = 1;
      path.push_back(w);
      extend();
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int s = 0; s < g.size(); ++s) {
    path = {s};
    used[s] = 1;
    extend();
    used[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_triangle_free(const SimplicialGraph& g) {
  for (auto [u, v] : g.edges())
    if (!set_intersection(g.neighbors(u), g.neighbors(v)).empty()) return false;
  return true;
}

std::optional<std::vector<int>> graph_isomorphic(const SimplicialGraph& a, const SimplicialGraph& b) {
  int n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  auto sig = [](const SimplicialGraph& g, int v) {
    std::vector<int> nd;
    for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    return std::make_pair(g.degree(v), nd);
  };
  std::vector<decltype(sig(a, 0))> sa(n), sb(n);
  for (int v = 0; v < n; ++v) {
    sa[v] = sig(a, v);
    sb[v] = sig(b, v);
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  // BFS order over a so mapped neighbours constrain candidates early
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int w : a.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
  }
  std::vector<int> map(n, -1), inv(n, -1);
  std::function<bool(int)> go = [&](int k) {
    if (k == n) return true;
    int v = order[k];
    for (int c = 0; c < n; ++c) {
      if (inv[c] >= 0 || sb[c] != sa[v]) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        int u = order[i];
        if (a.adjacent(u, v) != b.adjacent(map[u], c)) ok = false;
      }
      if (!ok) continue;
      map[v] = c;
      inv[c] = v;
      if (go(k + 1)) return true;
      map[v] = -1;
      inv[c] = -1;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return map;
}

}  // namespace sqci
