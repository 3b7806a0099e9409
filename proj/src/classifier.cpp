#include "sqci/classifier.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sqci/join_complex.hpp"

namespace sqci {

std::string to_string(Family f) { return f == Family::Raag ? "raag" : "pb2"; }

std::string to_string(Relation r) {
  switch (r) {
    case Relation::QI:
      return "QI";
    case Relation::NOT_QI:
      return "NOT_QI";
    default:
      return "UNKNOWN";
  }
}

namespace {

SimplicialGraph induced_graph(const SimplicialGraph& g, const VSet& vs) {
  SimplicialGraph out;
  for (int v : vs) out.add_vertex(g.name(v));
  for (auto [u, v] : g.edges())
    if (std::binary_search(vs.begin(), vs.end(), u) && std::binary_search(vs.begin(), vs.end(), v))
      out.add_edge(g.name(u), g.name(v));
  return out;
}

struct RaagSplit {
  SimplicialGraph core;  // non-isolated part
  int isolated = 0;
  int edge_components = 0;
};

RaagSplit split_raag(const SimplicialGraph& g) {
  RaagSplit s;
  VSet core;
  for (int v = 0; v < g.size(); ++v) {
    if (g.degree(v) > 0)
      core.push_back(v);
    else
      ++s.isolated;
  }
  s.core = induced_graph(g, core);
  s.edge_components = core.empty() ? 0 : static_cast<int>(components(s.core).size());
  return s;
}

std::string free_class(int m) { return m == 0 ? "trivial" : m == 1 ? "Z" : "F"; }

nlohmann::json iso_json(const SimplicialGraph& a, const SimplicialGraph& b, const std::vector<int>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (int v = 0; v < a.size(); ++v) j[a.name(v)] = b.name(m[v]);
  return j;
}

bool is_tree3(const SimplicialGraph& g) { return is_tree(g) && diameter(g) >= 3; }

// sizes of the two sides when g is complete bipartite
std::optional<std::pair<int, int>> complete_bipartite(const SimplicialGraph& g) {
  if (g.size() < 2 || !is_connected(g)) return std::nullopt;
  std::vector<int> colour(g.size(), -1);
  colour[0] = 0;
  std::vector<int> st{0};
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int w : g.neighbors(v)) {
      if (colour[w] < 0) {
        colour[w] = 1 - colour[v];
        st.push_back(w);
      } else if (colour[w] == colour[v]) {
        return std::nullopt;
      }
    }
  }
  int a = static_cast<int>(std::count(colour.begin(), colour.end(), 0));
  int b = g.size() - a;
  if (g.edge_count() != a * b) return std::nullopt;
  return std::make_pair(std::min(a, b), std::max(a, b));
}

std::string product_type(std::pair<int, int> sides) {
  auto f = [](int n) { return n == 1 ? std::string("Z") : std::string("F"); };
  return f(sides.first) + "x" + f(sides.second);
}

Verdict make(Relation r, std::string rule, nlohmann::json ev = nlohmann::json::object()) {
  return {r, std::move(rule), std::move(ev)};
}

Verdict classify_raags(const SimplicialGraph& g1, const SimplicialGraph& g2) {
  if (auto m = graph_isomorphic(g1, g2))
    return make(Relation::QI, "isomorphic defining graphs", {{"isomorphism", iso_json(g1, g2, *m)}});
  auto s1 = split_raag(g1), s2 = split_raag(g2);
  if (s1.edge_components > 1 || s2.edge_components > 1)
    return make(Relation::UNKNOWN, "", {{"reason", "more than one component with edges"}});
  bool e1 = s1.core.size() == 0, e2 = s2.core.size() == 0;
  if (e1 && e2) {
    auto c1 = free_class(s1.isolated), c2 = free_class(s2.isolated);
    return make(c1 == c2 ? Relation::QI : Relation::NOT_QI, "free groups: ends and rank class",
                {{"first", c1}, {"second", c2}});
  }
  if (e1 != e2)
    return make(Relation::NOT_QI, "ends: one side has a one-ended free factor, the other is free",
                {{"first_free", e1}, {"second_free", e2}});
  if ((s1.isolated > 0) != (s2.isolated > 0))
    return make(Relation::NOT_QI, "ends: one-ended vs infinitely many ends",
                {{"first_isolated", s1.isolated}, {"second_isolated", s2.isolated}});
  if (s1.isolated > 0) {
    auto v = classify_raags(s1.core, s2.core);
    v.rule = "free-product reduction to the one-ended factors; " + v.rule;
    v.evidence["reduced"] = true;
    return v;
  }

  const auto& a = s1.core;
  const auto& b = s2.core;
  bool tri_free = is_triangle_free(a) && is_triangle_free(b);
  nlohmann::json checked = nlohmann::json::array();
  if (tri_free) {
    bool t1 = is_tree3(a), t2 = is_tree3(b);
    if (t1 || t2)
      return make(t1 && t2 ? Relation::QI : Relation::NOT_QI, "(b) tree rule: trees of diameter >= 3",
                  {{"first_tree3", t1}, {"second_tree3", t2}});
    checked.push_back("tree");
    auto o1 = out_finite(a), o2 = out_finite(b);
    if (o1.finite && o2.finite)
      return make(Relation::NOT_QI, "(c) finite-Out rigidity: quasi-isometric iff isomorphic",
                  {{"isomorphic", false}, {"first_out_finite", true}, {"second_out_finite", true}});
    checked.push_back("finite-out");
    auto k1 = complete_bipartite(a), k2 = complete_bipartite(b);
    if (k1 && k2) {
      auto p1 = product_type(*k1), p2 = product_type(*k2);
      return make(p1 == p2 ? Relation::QI : Relation::NOT_QI, "(f) products of free groups: qi_type",
                  {{"first", p1}, {"second", p2}});
    }
    if (k1 || k2)
      return make(Relation::NOT_QI, "(f) join vs non-join: single-vertex intersection complex",
                  {{"first_join", static_cast<bool>(k1)}, {"second_join", static_cast<bool>(k2)}});
    checked.push_back("join");
  }
  return make(Relation::UNKNOWN, "", {{"checked", checked}, {"triangle_free", tri_free}});
}

struct Pb2Info {
  bool special = false;  // special cactus with at least two cycles
  std::optional<int> ok, oprime;
  bool obstruction = false;
  nlohmann::json witness;
};

Pb2Info analyze_pb2(const SimplicialGraph& g) {
  Pb2Info p;
  auto a = analyze_cactus(g);
  if (!a.is_special || a.cycles.size() < 2) return p;
  p.special = true;
  p.ok = recognize_O(a);
  p.oprime = recognize_Oprime(a);
  auto jc = build_ri_braid(a);
  auto ob = detect_obstruction_pattern(jc);
  p.obstruction = ob.found;
  if (ob.found) p.witness = ob.labels.front();
  return p;
}

// A(P4 + isolated point), quasi-isometric to PB2(O_k)
SimplicialGraph ok_model() {
  return parse_graph("v a\nv b\nv c\nv d\nv z\ne a b\ne b c\ne c d\n");
}

nlohmann::json obstruction_evidence(const Pb2Info& p) {
  nlohmann::json j{{"witness", p.witness}};
  j["scope"] = p.oprime ? "recognised O'(4," + std::to_string(*p.oprime) + ")" : "pattern only";
  return j;
}

Verdict classify_pb2_raag(const SimplicialGraph& pg, const SimplicialGraph& rg) {
  if (!is_triangle_free(rg))
    return make(Relation::NOT_QI, "(a) dimension screen: raag graph has a triangle, braid complex is 2-dimensional",
                {{"triangle_free", false}});
  auto p = analyze_pb2(pg);
  if (p.ok) {
    auto v = classify_raags(ok_model(), rg);
    if (v.relation == Relation::UNKNOWN) return v;
    v.rule = "(d) O_" + std::to_string(*p.ok) + " braid group ~ A(T)*Z; " + v.rule;
    v.evidence["k"] = *p.ok;
    return v;
  }
  if (p.obstruction)
    return make(Relation::NOT_QI, "(e) alternating separating pattern: not quasi-isometric to any raag",
                obstruction_evidence(p));
  if (p.special) {
    auto s = split_raag(rg);
    if (s.isolated == 0 || (s.core.size() == 0 && s.isolated <= 1))
      return make(Relation::NOT_QI, "ends: special cactus braid group ~ SPB2*Z has infinitely many ends",
                  {{"raag_isolated", s.isolated}, {"raag_core_vertices", s.core.size()}});
  }
  return make(Relation::UNKNOWN, "", {{"special_cactus", p.special}});
}

Verdict classify_pb2s(const SimplicialGraph& g1, const SimplicialGraph& g2) {
  auto p1 = analyze_pb2(g1), p2 = analyze_pb2(g2);
  if (p1.ok && p2.ok)
    return make(Relation::QI, "(d) both O_k: each ~ A(T)*Z", {{"k1", *p1.ok}, {"k2", *p2.ok}});
  if ((p1.ok && p2.obstruction) || (p2.ok && p1.obstruction))
    return make(Relation::NOT_QI, "(d)+(e) one side ~ A(T)*Z, the other is not quasi-isometric to any raag",
                obstruction_evidence(p1.obstruction ? p1 : p2));
  return make(Relation::UNKNOWN, "", {{"first_special", p1.special}, {"second_special", p2.special}});
}

}  // namespace

GroupDescriptor make_descriptor(Family family, SimplicialGraph g) {
  if (family == Family::Pb2) {
    if (!is_connected(g)) throw std::invalid_argument("pb2 descriptor: graph must be connected");
  } else if (split_raag(g).edge_components > 1) {
    throw std::invalid_argument("raag descriptor: at most one component may carry edges");
  }
  return {family, std::move(g)};
}

OutFiniteResult out_finite(const SimplicialGraph& g) {
  OutFiniteResult r;
  int n = g.size();
  // non-adjacent transvections are reported first
  for (bool adjacent : {false, true})
    for (int w = 0; w < n; ++w)
      for (int v = 0; v < n; ++v) {
        if (v == w || g.adjacent(v, w) != adjacent) continue;
        if (is_subset(g.link(w), g.star(v))) {
          r.finite = false;
          r.witness_kind = "transvection";
          r.v = v;
          r.w = w;
          return r;
        }
      }
  VSet all(n);
  std::iota(all.begin(), all.end(), 0);
  for (int v = 0; v < n; ++v) {
    auto rest = set_difference(all, g.star(v));
    if (components(g, rest).size() > 1) {
      r.finite = false;
      r.witness_kind = "separating-star";
      r.v = v;
      r.star = g.star(v);
      return r;
    }
  }
  return r;
}

namespace {

void validate_blocks(const SimplicialGraph& g, const std::vector<VSet>& blocks, const std::string& side) {
  auto fail = [&](const std::string& what) { throw std::invalid_argument(side + ": " + what); };
  if (blocks.empty()) fail("no blocks");
  for (auto& b : blocks) {
    if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end())
      fail("block vertex set not sorted and distinct");
    for (int v : b)
      if (v < 0 || v >= g.size()) fail("block vertex out of range");
    auto bg = induced_graph(g, b);
    if (!is_connected(bg) || !is_triangle_free(bg) || bg.edge_count() == 0)
      fail("block " + format_set(g, b) + " is not a connected triangle-free graph with an edge");
    auto of = out_finite(bg);
    if (!of.finite) fail("block " + format_set(g, b) + " does not have finite Out (" + of.witness_kind + ")");
  }
  int nb = static_cast<int>(blocks.size());
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) {
      if (set_intersection(blocks[i], blocks[j]).size() > 1)
        fail("blocks " + format_set(g, blocks[i]) + " and " + format_set(g, blocks[j]) +
             " meet in more than one vertex");
      for (int k = j + 1; k < nb; ++k)
        if (!set_intersection(set_intersection(blocks[i], blocks[j]), blocks[k]).empty())
          fail("three blocks share a vertex");
    }
  // blocks and shared vertices form a forest
  std::vector<int> parent(nb + g.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<int> count(g.size(), 0);
  for (auto& b : blocks)
    for (int v : b) ++count[v];
  for (int i = 0; i < nb; ++i)
    for (int v : blocks[i]) {
      if (count[v] < 2) continue;
      int a = find(i), c = find(nb + v);
      if (a == c) fail("blocks form a cycle through shared vertices");
      parent[a] = c;
    }
  std::vector<char> covered(g.size(), 0);
  for (auto& b : blocks)
    for (int v : b) covered[v] = 1;
  if (std::count(covered.begin(), covered.end(), 0) > 0) fail("blocks do not cover every vertex");
  for (auto [u, v] : g.edges()) {
    bool in = std::any_of(blocks.begin(), blocks.end(), [&](const VSet& b) {
      return std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v);
    });
    if (!in) fail("edge " + g.name(u) + "-" + g.name(v) + " lies in no block");
  }
}

std::vector<SimplicialGraph> block_classes(const SimplicialGraph& g, const std::vector<VSet>& blocks) {
  std::vector<SimplicialGraph> reps;
  for (auto& b : blocks) {
    auto bg = induced_graph(g, b);
    bool seen = std::any_of(reps.begin(), reps.end(),
                            [&](const SimplicialGraph& r) { return graph_isomorphic(r, bg).has_value(); });
    if (!seen) reps.push_back(bg);
  }
  return reps;
}

}  // namespace

Verdict block_compare(const SimplicialGraph& g1, const SimplicialGraph& g2, const std::vector<VSet>& blocks1,
                      const std::vector<VSet>& blocks2) {
  validate_blocks(g1, blocks1, "first graph");
  validate_blocks(g2, blocks2, "second graph");
  auto c1 = block_classes(g1, blocks1), c2 = block_classes(g2, blocks2);
  auto missing = [](const std::vector<SimplicialGraph>& from, const std::vector<SimplicialGraph>& in) {
    nlohmann::json out = nlohmann::json::array();
    for (auto& r : from)
      if (std::none_of(in.begin(), in.end(), [&](const SimplicialGraph& s) { return graph_isomorphic(r, s).has_value(); }))
        out.push_back(serialize_graph(r));
    return out;
  };
  auto m1 = missing(c1, c2), m2 = missing(c2, c1);
  nlohmann::json ev{{"first_classes", c1.size()}, {"second_classes", c2.size()}};
  if (m1.empty() && m2.empty()) return make(Relation::UNKNOWN, "", ev);
  ev["only_first"] = m1;
  ev["only_second"] = m2;
  return make(Relation::NOT_QI, "block rigidity: isometry classes of finite-Out blocks differ", ev);
}

Verdict classify_qi(const GroupDescriptor& d1, const GroupDescriptor& d2) {
  if (d1.family == Family::Raag && d2.family == Family::Pb2) return classify_qi(d2, d1);
  if (d1.family == Family::Raag) return classify_raags(d1.graph, d2.graph);
  if (auto m = graph_isomorphic(d1.graph, d2.graph); m && d2.family == Family::Pb2)
    return make(Relation::QI, "isomorphic defining graphs", {{"isomorphism", iso_json(d1.graph, d2.graph, *m)}});
  if (d2.family == Family::Raag) return classify_pb2_raag(d1.graph, d2.graph);
  return classify_pb2s(d1.graph, d2.graph);
}

std::optional<int> recognize_O(const CactusAnalysis& a) {
  if (!a.is_special || a.cycles.size() < 3) return std::nullopt;
  std::vector<bool> joint;
  auto r = a.reduced_spine(&joint);
  int centre = -1;
  for (int v = 0; v < r.size(); ++v) {
    if (joint[v]) {
      if (r.degree(v) != 1) return std::nullopt;
    } else {
      if (centre >= 0) return std::nullopt;
      centre = v;
    }
  }
  if (centre < 0) return std::nullopt;
  int k = r.degree(centre);
  if (k < 3 || k != r.size() - 1 || k != static_cast<int>(a.cycles.size())) return std::nullopt;
  return k;
}

std::optional<int> recognize_Oprime(const CactusAnalysis& a) {
  if (!a.is_special || a.cycles.size() < 4) return std::nullopt;
  std::vector<bool> joint;
  auto r = a.reduced_spine(&joint);
  if (!is_tree(r)) return std::nullopt;
  std::vector<int> ends;
  int internal = 0;
  for (int v = 0; v < r.size(); ++v) {
    int d = r.degree(v);
    if (d == 1 && joint[v]) continue;
    if (d == 3 && !joint[v]) {
      ends.push_back(v);
    } else if (d == 2 && joint[v]) {
      ++internal;
    } else {
      return std::nullopt;
    }
  }
  if (ends.size() != 2) return std::nullopt;
  for (int x : ends) {
    int leaves = 0;
    for (int w : r.neighbors(x)) leaves += joint[w] && r.degree(w) == 1;
    if (leaves != 2) return std::nullopt;
  }
  return internal;
}

nlohmann::json to_json(const Verdict& v) {
  return {{"relation", to_string(v.relation)}, {"rule", v.rule}, {"evidence", v.evidence}};
}

std::string report(const Verdict& v) {
  std::ostringstream os;
  os << to_string(v.relation);
  if (!v.rule.empty()) os << "  [" << v.rule << "]";
  os << "\n" << v.evidence.dump(2) << "\n";
  return os.str();
}

}  // namespace sqci
