#include "sqci/join_complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

#include "sqci/homology.hpp"

namespace sqci {

std::string JoinLabel::qi_type() const {
  int big = (r > 1) + (s > 1);
  return big == 0 ? "ZxZ" : big == 1 ? "ZxF" : "FxF";
}

bool same_label(const JoinLabel& a, const JoinLabel& b) {
  if (a.first == b.first && a.second == b.second) return true;
  return a.kind == Kind::Raag && a.first == b.second && a.second == b.first;
}

bool label_contained(const JoinLabel& a, const JoinLabel& b, bool flipped) {
  const auto& bf = flipped ? b.second : b.first;
  const auto& bs = flipped ? b.first : b.second;
  return is_subset(a.first, bf) && is_subset(a.second, bs);
}

int JoinComplex::dimension() const {
  int d = -1;
  for (auto& s : simplices) d = std::max(d, static_cast<int>(s.verts.size()) - 1);
  return d;
}

std::vector<bool> JoinComplex::maximal_flags() const {
  std::vector<bool> m(simplices.size(), true);
  for (auto& f : faces) m[f.face] = false;
  return m;
}

std::vector<std::vector<int>> JoinComplex::faces_of() const {
  std::vector<std::vector<int>> out(simplices.size());
  for (auto& f : faces) out[f.simplex].push_back(f.face);
  return out;
}

std::multimap<std::vector<int>, int> JoinComplex::by_vertex_set() const {
  std::multimap<std::vector<int>, int> m;
  for (size_t i = 0; i < simplices.size(); ++i) m.emplace(simplices[i].verts, static_cast<int>(i));
  return m;
}

std::vector<std::vector<int>> JoinComplex::vertex_adjacency() const {
  std::vector<std::set<int>> adj(vertex_ids.size());
  for (auto& s : simplices)
    for (int a : s.verts)
      for (int b : s.verts)
        if (a != b) adj[a].insert(b);
  std::vector<std::vector<int>> out;
  for (auto& a : adj) out.emplace_back(a.begin(), a.end());
  return out;
}

FaceRel make_face_rel(const JoinComplex& jc, int simplex, int face, int omitted) {
  const auto& a = jc.simplices[simplex].label;
  const auto& b = jc.simplices[face].label;
  FaceRel f;
  f.simplex = simplex;
  f.face = face;
  f.omitted = omitted;
  if (jc.kind == Kind::Braid) {
    f.flipped = false;
  } else {
    bool aligned = label_contained(a, b, false);
    bool flipped = label_contained(a, b, true);
    if (!aligned && !flipped) throw std::logic_error("face label does not contain simplex label");
    f.flipped = !aligned;
  }
  f.eq_first = a.first == (f.flipped ? b.second : b.first);
  f.eq_second = a.second == (f.flipped ? b.first : b.second);
  return f;
}

namespace {

std::string join_text(const SimplicialGraph& g, const JoinSubgraph& j) {
  return format_set(g, j.side_a) + "o" + format_set(g, j.side_b);
}

JoinLabel raag_label(const SimplicialGraph& g, const JoinSubgraph& j) {
  JoinLabel l;
  l.kind = Kind::Raag;
  l.first = j.side_a;
  l.second = j.side_b;
  l.r = static_cast<int>(j.side_a.size());
  l.s = static_cast<int>(j.side_b.size());
  l.text = join_text(g, j);
  return l;
}

// biclique spanned by an edge set, or nullopt when it is not complete bipartite
std::optional<JoinSubgraph> biclique_of(const std::vector<std::pair<int, int>>& edges) {
  std::map<int, std::vector<int>> adj;
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::map<int, int> color;
  VSet a, b;
  for (auto& [s, _] : adj) {
    if (color.count(s)) continue;
    if (!color.empty()) return std::nullopt;  // disconnected
    std::queue<int> q;
    q.push(s);
    color[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      (color[v] ? b : a).push_back(v);
      for (int w : adj[v]) {
        if (!color.count(w)) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  if (edges.size() != a.size() * b.size()) return std::nullopt;
  return canonical_join(a, b);
}

std::vector<std::pair<int, int>> edge_intersection(const std::vector<std::pair<int, int>>& x,
                                                   const std::vector<std::pair<int, int>>& y) {
  std::vector<std::pair<int, int>> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

void wire_faces(JoinComplex& jc) {
  auto index = jc.by_vertex_set();
  for (int i = 0; i < static_cast<int>(jc.simplices.size()); ++i) {
    const auto& s = jc.simplices[i];
    if (s.verts.size() < 2) continue;
    for (int v : s.verts) {
      std::vector<int> sub;
      for (int w : s.verts)
        if (w != v) sub.push_back(w);
      std::vector<int> hits;
      auto [lo, hi] = index.equal_range(sub);
      for (auto it = lo; it != hi; ++it) {
        const auto& fl = jc.simplices[it->second].label;
        if (label_contained(s.label, fl, false) ||
            (jc.kind == Kind::Raag && label_contained(s.label, fl, true)))
          hits.push_back(it->second);
      }
      if (hits.size() != 1)
        throw std::logic_error("face of simplex is not unique (" + std::to_string(hits.size()) + " candidates)");
      jc.faces.push_back(make_face_rel(jc, i, hits[0], v));
    }
  }
}

}  // namespace

JoinComplex build_ri_raag(const SimplicialGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("build_ri_raag: graph not connected");
  if (g.edge_count() == 0) throw std::invalid_argument("build_ri_raag: graph has no edges");
  JoinComplex jc;
  jc.kind = Kind::Raag;
  jc.graph = g;
  auto joins = maximal_join_subgraphs(g);
  std::vector<std::vector<std::pair<int, int>>> vedges;
  for (size_t i = 0; i < joins.size(); ++i) {
    jc.vertex_ids.push_back("u" + std::to_string(i));
    jc.simplices.push_back({{static_cast<int>(i)}, raag_label(g, joins[i])});
    vedges.push_back(join_edges(joins[i]));
  }
  if (joins.size() == 1) jc.notes.push_back("trivial RI");
  std::vector<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>> level;
  for (size_t i = 0; i < joins.size(); ++i) level.push_back({{static_cast<int>(i)}, vedges[i]});
  while (!level.empty()) {
    decltype(level) next;
    for (auto& [vs, es] : level)
      for (int w = vs.back() + 1; w < static_cast<int>(joins.size()); ++w) {
        auto common = edge_intersection(es, vedges[w]);
        if (common.empty()) continue;
        auto bc = biclique_of(common);
        if (!bc) throw std::logic_error("intersection of maximal joins is not a join");
        auto nv = vs;
        nv.push_back(w);
        jc.simplices.push_back({nv, raag_label(g, *bc)});
        next.push_back({nv, common});
      }
    level = std::move(next);
  }
  wire_faces(jc);
  return jc;
}

JoinComplex build_ri_from_products(const SimplicialGraph& g, const std::vector<ProductPair>& products,
                                   const CactusAnalysis* a) {
  JoinComplex jc;
  jc.kind = Kind::Braid;
  jc.graph = g;
  if (a) {
    for (size_t i = 0; i < a->cycles.size(); ++i) {
      jc.generators.push_back(a->cycles[i].vertices);
      jc.generator_names.push_back(a->cycle_names[i]);
    }
    jc.from_special_cactus = a->is_special;
  }
  auto make_label = [&](const ProductPair& p) {
    JoinLabel l;
    l.kind = Kind::Braid;
    l.first = p.first.vertices;
    l.second = p.second.vertices;
    Subgraph f{&jc.graph, p.first.vertices}, s{&jc.graph, p.second.vertices};
    l.r = f.rank();
    l.s = s.rank();
    if (a)
      l.text = a->cycle_label(p.first.vertices) + "x" + a->cycle_label(p.second.vertices);
    else
      l.text = format_set(g, p.first.vertices) + "x" + format_set(g, p.second.vertices);
    return l;
  };
  std::vector<ProductPair> prods;
  for (auto& p : products) prods.push_back({Subgraph{&jc.graph, p.first.vertices}, Subgraph{&jc.graph, p.second.vertices}});
  for (size_t i = 0; i < prods.size(); ++i) {
    jc.vertex_ids.push_back("u" + std::to_string(i));
    jc.simplices.push_back({{static_cast<int>(i)}, make_label(prods[i])});
  }
  std::set<std::vector<int>> level;
  for (size_t i = 0; i < prods.size(); ++i) level.insert({static_cast<int>(i)});
  while (!level.empty()) {
    std::set<std::vector<int>> next;
    for (auto& vs : level)
      for (int w = vs.back() + 1; w < static_cast<int>(prods.size()); ++w) {
        auto nv = vs;
        nv.push_back(w);
        bool all_faces = true;
        for (size_t k = 0; k + 1 < nv.size() && all_faces; ++k) {
          auto sub = nv;
          sub.erase(sub.begin() + k);
          if (!level.count(sub)) all_faces = false;
        }
        if (!all_faces) continue;
        std::vector<ProductPair> ps;
        for (int v : nv) ps.push_back(prods[v]);
        auto inter = intersect_products(ps);
        for (auto& p : inter) jc.simplices.push_back({nv, make_label(p)});
        if (!inter.empty()) next.insert(nv);
      }
    level = std::move(next);
  }
  wire_faces(jc);
  return jc;
}

JoinComplex build_ri_braid(const CactusAnalysis& a) {
  if (!a.is_special || a.cycles.size() < 2) {
    JoinComplex jc;
    jc.kind = Kind::Braid;
    jc.graph = *a.graph;
    jc.notes.push_back(a.is_special ? "fewer than 2 cycles: empty complex" : "not a special cactus");
    return jc;
  }
  return build_ri_from_products(*a.graph, maximal_products_cactus(a), &a);
}

std::vector<std::vector<int>> complex_components(const JoinComplex& jc) {
  int n = jc.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto& s : jc.simplices)
    for (int v : s.verts) parent[find(v)] = find(s.verts[0]);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, vs] : groups) out.push_back(vs);
  std::sort(out.begin(), out.end());
  return out;
}

ComponentReport components_and_switch(const JoinComplex& jc) {
  if (jc.kind != Kind::Braid) throw std::invalid_argument("components_and_switch: braid kind required");
  ComponentReport rep;
  int n = jc.vertex_count();
  rep.switch_map.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& a = jc.simplices[i].label;
      const auto& b = jc.simplices[j].label;
      if (a.first == b.second && a.second == b.first) rep.switch_map[i] = j;
    }
  for (int i = 0; i < n; ++i)
    if (rep.switch_map[i] < 0) throw std::logic_error("switched label missing for vertex " + jc.vertex_ids[i]);
  auto comps = complex_components(jc);
  rep.component_of.assign(n, -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) rep.component_of[v] = static_cast<int>(c);
  for (size_t c = 0; c < comps.size(); ++c) {
    ComponentInfo info;
    info.vertices = comps[c];
    int other = rep.component_of[rep.switch_map[comps[c][0]]];
    info.type = other == static_cast<int>(c) ? 'M' : 'S';
    info.twin = other;
    rep.components.push_back(info);
  }
  return rep;
}

std::vector<VertexClass> vertex_classification(const JoinComplex& jc, const SimplicialGraph& g) {
  (void)g;
  if (jc.kind != Kind::Raag) throw std::invalid_argument("vertex_classification: raag kind required");
  int n = jc.vertex_count();
  auto adj = jc.vertex_adjacency();
  auto count_components = [&](int removed) {
    std::vector<char> seen(n, 0);
    int c = 0;
    for (int s = 0; s < n; ++s) {
      if (s == removed || seen[s]) continue;
      ++c;
      std::vector<int> st{s};
      seen[s] = 1;
      while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : adj[v])
          if (w != removed && !seen[w]) {
            seen[w] = 1;
            st.push_back(w);
          }
      }
    }
    return c;
  };
  int base = count_components(-1);
  std::vector<VertexClass> out(n);
  for (int v = 0; v < n; ++v) {
    out[v].separating = n > 1 && count_components(v) > base;
    VSet cover;
    for (int w : adj[v]) cover = set_union(cover, jc.simplices[w].label.support());
    out[v].type1 = !out[v].separating && !adj[v].empty() && is_subset(jc.simplices[v].label.support(), cover);
  }
  return out;
}

JoinComplex induced_subcomplex(const JoinComplex& jc, const std::vector<int>& vertices) {
  std::vector<int> vmap(jc.vertex_count(), -1);
  JoinComplex out = jc;
  out.vertex_ids.clear();
  out.simplices.clear();
  out.faces.clear();
  auto vs = vertices;
  std::sort(vs.begin(), vs.end());
  for (int v : vs) {
    if (v < 0 || v >= jc.vertex_count()) throw std::out_of_range("induced_subcomplex: vertex out of range");
    vmap[v] = static_cast<int>(out.vertex_ids.size());
    out.vertex_ids.push_back(jc.vertex_ids[v]);
  }
  std::vector<int> smap(jc.simplices.size(), -1);
  for (size_t i = 0; i < jc.simplices.size(); ++i) {
    const auto& s = jc.simplices[i];
    if (!std::all_of(s.verts.begin(), s.verts.end(), [&](int v) { return vmap[v] >= 0; })) continue;
    JSimplex t{{}, s.label};
    for (int v : s.verts) t.verts.push_back(vmap[v]);
    smap[i] = static_cast<int>(out.simplices.size());
    out.simplices.push_back(std::move(t));
  }
  for (auto f : jc.faces) {
    if (smap[f.simplex] < 0 || smap[f.face] < 0) continue;
    f.simplex = smap[f.simplex];
    f.face = smap[f.face];
    f.omitted = vmap[f.omitted];
    out.faces.push_back(f);
  }
  return out;
}

int betti1(const JoinComplex& jc) {
  std::map<int, int> col1;
  std::vector<SparseColumn> d1, d2;
  for (int i = 0; i < static_cast<int>(jc.simplices.size()); ++i)
    if (jc.simplices[i].verts.size() == 2) {
      col1[i] = static_cast<int>(d1.size());
      d1.push_back({{jc.simplices[i].verts[1], 1}, {jc.simplices[i].verts[0], -1}});
    }
  std::map<int, SparseColumn> tri;
  for (auto& f : jc.faces) {
    const auto& s = jc.simplices[f.simplex];
    if (s.verts.size() != 3) continue;
    int pos = static_cast<int>(std::find(s.verts.begin(), s.verts.end(), f.omitted) - s.verts.begin());
    tri[f.simplex].push_back({col1.at(f.face), pos % 2 ? -1 : 1});
  }
  for (auto& [i, col] : tri) d2.push_back(col);
  return sqci::betti1(d1, d2);
}

namespace {

// all faces of every simplex, including itself
std::vector<std::set<int>> face_closure(const JoinComplex& jc) {
  auto direct = jc.faces_of();
  std::vector<std::set<int>> out(jc.simplices.size());
  std::vector<int> order(jc.simplices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return jc.simplices[a].verts.size() < jc.simplices[b].verts.size(); });
  for (int i : order) {
    out[i].insert(i);
    for (int f : direct[i]) out[i].insert(out[f].begin(), out[f].end());
  }
  return out;
}

std::vector<JoinLabel> label_intersections(const JoinComplex& jc, const JoinLabel& a, const JoinLabel& b) {
  std::vector<JoinLabel> out;
  if (jc.kind == Kind::Raag) {
    auto ea = join_edges({a.first, a.second});
    auto eb = join_edges({b.first, b.second});
    auto common = edge_intersection(ea, eb);
    if (common.empty()) return out;
    auto bc = biclique_of(common);
    if (!bc) {
      JoinLabel bad;
      bad.text = "non-join";
      out.push_back(bad);
      return out;
    }
    out.push_back(raag_label(jc.graph, *bc));
  } else {
    ProductPair pa{Subgraph{&jc.graph, a.first}, Subgraph{&jc.graph, a.second}};
    ProductPair pb{Subgraph{&jc.graph, b.first}, Subgraph{&jc.graph, b.second}};
    for (auto& p : intersect_products({pa, pb})) {
      JoinLabel l;
      l.kind = Kind::Braid;
      l.first = p.first.vertices;
      l.second = p.second.vertices;
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

std::vector<CjoinViolation> validate_cjoin(const JoinComplex& jc) {
  std::vector<CjoinViolation> out;
  const auto& S = jc.simplices;
  auto name = [&](int i) {
    std::string s = "[";
    for (size_t k = 0; k < S[i].verts.size(); ++k) s += (k ? "," : "") + jc.vertex_ids[S[i].verts[k]];
    return s + "]" + S[i].label.text;
  };
  // (i)
  for (auto& f : jc.faces)
    if (!label_contained(S[f.simplex].label, S[f.face].label, f.flipped))
      out.push_back({"i", name(f.simplex) + " not contained in face " + name(f.face)});
  // (iv)
  for (size_t i = 0; i < S.size(); ++i)
    if (!disjoint(S[i].label.first, S[i].label.second))
      out.push_back({"iv", name(static_cast<int>(i)) + " has a generator on both sides"});
  // (iii)
  auto closure = face_closure(jc);
  auto maximal = jc.maximal_flags();
  std::vector<int> maxes;
  for (size_t i = 0; i < S.size(); ++i)
    if (maximal[i]) maxes.push_back(static_cast<int>(i));
  for (size_t x = 0; x < maxes.size(); ++x)
    for (size_t y = x + 1; y < maxes.size(); ++y) {
      int a = maxes[x], b = maxes[y];
      for (int t : closure[a]) {
        if (!closure[b].count(t)) continue;
        if (same_label(S[t].label, S[a].label) || same_label(S[t].label, S[b].label))
          out.push_back({"iii", name(a) + " and " + name(b) + " share face " + name(t) + " with equal label"});
      }
    }
  // (ii) at label level
  bool warn = jc.kind == Kind::Braid && !jc.from_special_cactus;
  auto index = jc.by_vertex_set();
  std::vector<int> pool;
  for (size_t i = 0; i < S.size(); ++i)
    if (S.size() <= 2000 || S[i].verts.size() == 1) pool.push_back(static_cast<int>(i));
  for (size_t x = 0; x < pool.size(); ++x)
    for (size_t y = x + 1; y < pool.size(); ++y) {
      int a = pool[x], b = pool[y];
      if (is_subset(S[a].verts, S[b].verts) || is_subset(S[b].verts, S[a].verts)) continue;
      auto uni = set_union(S[a].verts, S[b].verts);
      for (auto& l : label_intersections(jc, S[a].label, S[b].label)) {
        bool found = false;
        auto [lo, hi] = index.equal_range(uni);
        for (auto it = lo; it != hi; ++it)
          if (same_label(S[it->second].label, l)) found = true;
        if (!found)
          out.push_back({"ii", name(a) + " and " + name(b) + " have intersecting labels but span no simplex", warn});
      }
    }
  // (v)
  // braid kind: a cycle coordinate is also tagged by the component of the graph minus that cycle
  // holding the other side, since loops with the other point in different components are not conjugate
  std::vector<std::vector<int>> comp_of(jc.generators.size());
  if (jc.kind == Kind::Braid) {
    VSet all(jc.graph.size());
    std::iota(all.begin(), all.end(), 0);
    for (size_t c = 0; c < jc.generators.size(); ++c) {
      comp_of[c].assign(jc.graph.size(), -1);
      auto comps = components(jc.graph, set_difference(all, jc.generators[c]));
      for (size_t k = 0; k < comps.size(); ++k)
        for (int v : comps[k]) comp_of[c][v] = static_cast<int>(k);
    }
  }
  std::map<std::tuple<int, int, int>, std::vector<int>> holders;  // (coordinate, generator, side) -> simplices
  for (size_t i = 0; i < S.size(); ++i) {
    const auto& l = S[i].label;
    if (jc.kind == Kind::Raag) {
      for (int v : l.support()) holders[{0, v, 0}].push_back(static_cast<int>(i));
    } else {
      for (size_t c = 0; c < jc.generators.size(); ++c) {
        if (is_subset(jc.generators[c], l.first) && !l.second.empty())
          holders[{1, static_cast<int>(c), comp_of[c][l.second[0]]}].push_back(static_cast<int>(i));
        if (is_subset(jc.generators[c], l.second) && !l.first.empty())
          holders[{2, static_cast<int>(c), comp_of[c][l.first[0]]}].push_back(static_cast<int>(i));
      }
    }
  }
  for (auto& [key, hs] : holders) {
    if (hs.size() < 2) continue;
    auto [coord, gen, side] = key;
    VSet verts;
    for (int h : hs) verts = set_union(verts, S[h].verts);
    std::map<int, int> parent;
    for (int v : verts) parent[v] = v;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int h : hs)
      for (int v : S[h].verts) parent[find(v)] = find(S[h].verts[0]);
    std::set<int> roots;
    for (int v : verts) roots.insert(find(v));
    std::string gname = jc.kind == Kind::Raag ? jc.graph.name(gen)
                                              : jc.generator_names[gen] + "@" + std::to_string(coord);
    if (roots.size() > 1) {
      out.push_back({"v", "simplices carrying " + gname + " are not connected"});
      continue;
    }
    bool in_star = false;
    for (int c = 0; c < jc.vertex_count() && !in_star; ++c) {
      bool all = true;
      for (int h : hs) {
        auto with = S[h].verts;
        if (std::binary_search(with.begin(), with.end(), c)) continue;
        with.insert(std::lower_bound(with.begin(), with.end(), c), c);
        if (!index.count(with)) {
          all = false;
          break;
        }
      }
      in_star = all;
    }
    if (!in_star) out.push_back({"v", "simplices carrying " + gname + " lie in no vertex star"});
  }
  return out;
}

ObstructionResult detect_obstruction_pattern(const JoinComplex& jc) {
  ObstructionResult res;
  if (jc.kind != Kind::Braid) throw std::invalid_argument("detect_obstruction_pattern: braid kind required");
  if (jc.vertex_count() == 0) return res;
  auto rep = components_and_switch(jc);
  const auto& S = jc.simplices;
  auto maximal = jc.maximal_flags();
  int n = jc.vertex_count();
  std::vector<int> edges, bigs;
  for (size_t i = 0; i < S.size(); ++i) {
    if (!maximal[i]) continue;
    int comp = rep.component_of[S[i].verts[0]];
    if (rep.components[comp].type != 'M') continue;
    if (S[i].verts.size() == 2) edges.push_back(static_cast<int>(i));
    if (S[i].verts.size() >= 3) bigs.push_back(static_cast<int>(i));
  }
  // local separation: in lk(v), the far end of each maximal edge at v is cut off from every big simplex at v
  std::vector<char> separating(n, 0);
  for (int v = 0; v < n; ++v) {
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
      if (!parent.count(x)) parent[x] = x;
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (auto& s : S) {
      if (!std::binary_search(s.verts.begin(), s.verts.end(), v)) continue;
      int first = -1;
      for (int w : s.verts) {
        if (w == v) continue;
        if (first < 0) first = w;
        parent[find(w)] = find(first);
      }
    }
    std::vector<int> my_edges, my_bigs;
    for (int e : edges)
      if (std::binary_search(S[e].verts.begin(), S[e].verts.end(), v)) my_edges.push_back(e);
    for (int b : bigs)
      if (std::binary_search(S[b].verts.begin(), S[b].verts.end(), v)) my_bigs.push_back(b);
    if (my_edges.empty() || my_bigs.empty()) continue;
    bool ok = true;
    for (int e : my_edges) {
      int far = S[e].verts[0] == v ? S[e].verts[1] : S[e].verts[0];
      for (int b : my_bigs)
        for (int w : S[b].verts)
          if (w != v && find(w) == find(far)) ok = false;
    }
    separating[v] = ok;
  }
  auto meet = [&](int a, int b) { return set_intersection(S[a].verts, S[b].verts); };
  for (int e1 : edges)
    for (int t1 : bigs) {
      auto p1 = meet(e1, t1);
      if (p1.size() != 1 || !separating[p1[0]]) continue;
      for (int e2 : edges) {
        if (e2 == e1) continue;
        auto p2 = meet(t1, e2);
        if (p2.size() != 1 || !separating[p2[0]] || p2[0] == p1[0]) continue;
        for (int t2 : bigs) {
          if (t2 == t1) continue;
          auto p3 = meet(e2, t2), p4 = meet(t2, e1);
          if (p3.size() != 1 || p4.size() != 1 || !separating[p3[0]] || !separating[p4[0]]) continue;
          std::set<int> distinct{p1[0], p2[0], p3[0], p4[0]};
          if (distinct.size() != 4) continue;
          res.witnesses.push_back({e1, t1, e2, t2});
          res.labels.push_back({S[e1].label.text, S[t1].label.text, S[e2].label.text, S[t2].label.text});
        }
      }
    }
  res.found = !res.witnesses.empty();
  return res;
}

nlohmann::json to_json(const JoinComplex& jc) {
  nlohmann::json j;
  j["kind"] = jc.kind == Kind::Raag ? "raag" : "braid";
  j["graph"] = serialize_graph(jc.graph);
  auto names = [&](const VSet& vs) {
    nlohmann::json a = nlohmann::json::array();
    for (int v : vs) a.push_back(jc.graph.name(v));
    return a;
  };
  auto label = [&](const JoinLabel& l) {
    return nlohmann::json{{"first", names(l.first)}, {"second", names(l.second)}, {"text", l.text}};
  };
  j["vertices"] = nlohmann::json::array();
  for (int i = 0; i < jc.vertex_count(); ++i) {
    const auto& l = jc.simplices[i].label;
    j["vertices"].push_back({{"id", jc.vertex_ids[i]}, {"label", label(l)}, {"ranks", {l.r, l.s}}, {"qi_type", l.qi_type()}});
  }
  j["simplices"] = nlohmann::json::array();
  for (auto& s : jc.simplices) {
    nlohmann::json vs = nlohmann::json::array();
    for (int v : s.verts) vs.push_back(jc.vertex_ids[v]);
    j["simplices"].push_back({{"verts", vs}, {"label", label(s.label)}, {"ranks", {s.label.r, s.label.s}}});
  }
  j["faces"] = nlohmann::json::array();
  for (auto& f : jc.faces)
    j["faces"].push_back({{"simplex", f.simplex},
                          {"face", f.face},
                          {"omitted", jc.vertex_ids[f.omitted]},
                          {"sig", {f.eq_first, f.eq_second}},
                          {"align", f.flipped ? "flipped" : "aligned"}});
  j["generators"] = nlohmann::json::array();
  for (size_t c = 0; c < jc.generators.size(); ++c)
    j["generators"].push_back({{"name", jc.generator_names[c]}, {"vertices", names(jc.generators[c])}});
  j["special"] = jc.from_special_cactus;
  j["notes"] = jc.notes;
  return j;
}

JoinComplex join_complex_from_json(const nlohmann::json& j) {
  JoinComplex jc;
  jc.kind = j.at("kind") == "raag" ? Kind::Raag : Kind::Braid;
  jc.graph = parse_graph(j.at("graph").get<std::string>());
  auto ids = [&](const nlohmann::json& a) {
    VSet vs;
    for (auto& x : a) vs.push_back(jc.graph.index(x.get<std::string>()));
    std::sort(vs.begin(), vs.end());
    return vs;
  };
  std::map<std::string, int> vid;
  for (auto& v : j.at("vertices")) {
    vid[v.at("id").get<std::string>()] = jc.vertex_count();
    jc.vertex_ids.push_back(v.at("id").get<std::string>());
  }
  for (auto& s : j.at("simplices")) {
    JSimplex x;
    for (auto& v : s.at("verts")) x.verts.push_back(vid.at(v.get<std::string>()));
    std::sort(x.verts.begin(), x.verts.end());
    x.label.kind = jc.kind;
    x.label.first = ids(s.at("label").at("first"));
    x.label.second = ids(s.at("label").at("second"));
    x.label.text = s.at("label").at("text").get<std::string>();
    x.label.r = s.at("ranks").at(0).get<int>();
    x.label.s = s.at("ranks").at(1).get<int>();
    jc.simplices.push_back(x);
  }
  for (auto& f : j.at("faces")) {
    FaceRel r;
    r.simplex = f.at("simplex").get<int>();
    r.face = f.at("face").get<int>();
    r.omitted = vid.at(f.at("omitted").get<std::string>());
    r.eq_first = f.at("sig").at(0).get<bool>();
    r.eq_second = f.at("sig").at(1).get<bool>();
    r.flipped = f.at("align") == "flipped";
    jc.faces.push_back(r);
  }
  if (j.contains("generators"))
    for (auto& g : j["generators"]) {
      jc.generator_names.push_back(g.at("name").get<std::string>());
      jc.generators.push_back(ids(g.at("vertices")));
    }
  jc.from_special_cactus = j.value("special", false);
  if (j.contains("notes")) jc.notes = j["notes"].get<std::vector<std::string>>();
  return jc;
}

std::string to_dot(const JoinComplex& jc) {
  auto color = [](const std::string& t) {
    return t == "ZxZ" ? "lightblue" : t == "ZxF" ? "palegreen" : "salmon";
  };
  std::string s = "graph ri {\n";
  for (int i = 0; i < jc.vertex_count(); ++i) {
    const auto& l = jc.simplices[i].label;
    s += "  " + jc.vertex_ids[i] + " [label=\"" + l.text + "\", style=filled, fillcolor=" + color(l.qi_type()) + "];\n";
  }
  for (auto& x : jc.simplices)
    if (x.verts.size() == 2)
      s += "  " + jc.vertex_ids[x.verts[0]] + " -- " + jc.vertex_ids[x.verts[1]] + " [label=\"" + x.label.text + "\"];\n";
  return s + "}\n";
}

}  // namespace sqci
