#include "sqci/development.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "sqci/homology.hpp"
#include "sqci/words.hpp"

namespace sqci {

std::vector<std::vector<int>> DevelopmentBall::adjacency() const {
  std::vector<std::set<int>> adj(vertices.size());
  for (auto& s : simplices)
    for (size_t i = 0; i < s.verts.size(); ++i)
      for (size_t j = i + 1; j < s.verts.size(); ++j) {
        adj[s.verts[i]].insert(s.verts[j]);
        adj[s.verts[j]].insert(s.verts[i]);
      }
  std::vector<std::vector<int>> out;
  for (auto& a : adj) out.emplace_back(a.begin(), a.end());
  return out;
}

int DevelopmentBall::dimension() const {
  int d = vertices.empty() ? -1 : 0;
  for (auto& s : simplices) d = std::max(d, static_cast<int>(s.verts.size()) - 1);
  return d;
}

namespace {

double ball_size_estimate(int gens, int word_bound) {
  double total = 1, layer = 2.0 * gens;
  for (int i = 1; i <= word_bound; ++i) {
    total += layer;
    layer *= std::max(1, 2 * gens - 1);
  }
  return total;
}

}  // namespace

DevelopmentBall ball_raag(const SimplicialGraph& g, int radius, int word_bound, long cap) {
  if (radius < 0 || word_bound < 0) throw std::invalid_argument("ball_raag: radius and word bound must be >= 0");
  if (g.edge_count() == 0) throw std::invalid_argument("ball_raag: graph needs an edge");
  if (!is_connected(g)) throw std::invalid_argument("ball_raag: graph must be connected");
  if (!is_triangle_free(g)) throw std::invalid_argument("ball_raag: graph must be triangle-free");

  DevelopmentBall b;
  b.base = build_ri_raag(g);
  b.radius = radius;
  b.word_bound = word_bound;
  Raag R(g);

  // elements of word length <= word_bound; prefixes of normal forms are normal forms
  std::vector<NormalForm> all{NormalForm{}};
  std::unordered_set<std::string> seen{std::string()};
  for (size_t head = 0; head < all.size(); ++head) {
    if (static_cast<int>(all[head].size()) >= word_bound) continue;
    for (int x = 0; x < g.size(); ++x)
      for (int e : {1, -1}) {
        auto nf = R.multiply(all[head], NormalForm{{{x, e}}});
        if (static_cast<int>(nf.size()) > word_bound || !seen.insert(nf.key()).second) continue;
        all.push_back(nf);
        if (static_cast<long>(all.size()) > cap) {
          std::ostringstream msg;
          msg << "ball_raag: more than " << cap << " elements (estimate " << ball_size_estimate(g.size(), word_bound)
              << "); lower --word-bound or raise --cap";
          throw CapExceeded(msg.str());
        }
      }
  }
  std::vector<NormalForm> elems;
  std::unordered_set<std::string> in_ball;
  for (auto& h : all)
    if (radius >= word_bound || R.join_length(h).length <= radius) {
      elems.push_back(h);
      in_ball.insert(h.key());
    }
  b.elements = static_cast<long>(elems.size());

  const auto& base = b.base;
  int nb = static_cast<int>(base.simplices.size());
  int nv = base.vertex_count();
  std::vector<VSet> supp(nb);
  for (int i = 0; i < nb; ++i) supp[i] = base.simplices[i].label.support();

  std::map<std::pair<std::string, int>, int> vindex, sindex;
  std::vector<NormalForm> vkey, skey;
  auto vertex_of = [&](const NormalForm& h, int u) {
    auto k = R.coset_key(h, supp[u]);
    auto [it, fresh] = vindex.try_emplace({k.key(), u}, static_cast<int>(b.vertices.size()));
    if (fresh) {
      b.vertices.push_back({R.format(k), u, false, false, {}});
      vkey.push_back(k);
    }
    return it->second;
  };
  auto faces = base.faces;
  for (auto& h : elems) {
    for (int u = 0; u < nv; ++u) vertex_of(h, u);
    for (int s = nv; s < nb; ++s) {
      auto k = R.coset_key(h, supp[s]);
      auto [it, fresh] = sindex.try_emplace({k.key(), s}, static_cast<int>(b.simplices.size()));
      if (!fresh) continue;
      DevSimplex ds;
      ds.rho = s;
      ds.key = R.format(k);
      for (int v : base.simplices[s].verts) ds.verts.push_back(vertex_of(k, v));
      std::sort(ds.verts.begin(), ds.verts.end());
      b.simplices.push_back(ds);
      skey.push_back(k);
    }
  }
  // faces of simplices of dimension >= 2
  for (size_t i = 0; i < b.simplices.size(); ++i) {
    auto& ds = b.simplices[i];
    if (ds.verts.size() < 3) continue;
    const auto& k = skey[i];
    for (auto& f : faces) {
      if (f.simplex != ds.rho) continue;
      int omitted = vertex_of(k, f.omitted);
      int face = f.face < nv ? -1 : sindex.at({R.coset_key(k, supp[f.face]).key(), f.face});
      ds.faces.push_back({face, omitted});
    }
  }

  // completeness and local neighbourhoods
  std::vector<std::vector<int>> base_nbrs(nv);
  for (int s = nv; s < nb; ++s)
    if (base.simplices[s].verts.size() == 2) {
      int a = base.simplices[s].verts[0], c = base.simplices[s].verts[1];
      base_nbrs[a].push_back(c);
      base_nbrs[c].push_back(a);
    }
  std::vector<bool> type1(nv, false);
  if (nv > 0) {
    auto cls = vertex_classification(base, g);
    for (int u = 0; u < nv; ++u) type1[u] = cls[u].type1;
  }
  for (int v = 0; v < static_cast<int>(b.vertices.size()); ++v) {
    auto& dv = b.vertices[v];
    const auto& k = vkey[v];
    std::vector<NormalForm> copies{k};
    for (int x : supp[dv.rho])
      for (int e : {1, -1}) copies.push_back(R.multiply(k, NormalForm{{{x, e}}}));
    bool complete = true;
    for (auto& h : copies) complete = complete && in_ball.count(h.key());
    dv.boundary = !complete;
    dv.expected_cut = !type1[dv.rho] && !base_nbrs[dv.rho].empty();
    if (!complete) continue;
    std::set<int> local;
    for (auto& h : copies)
      for (int w : base_nbrs[dv.rho]) {
        auto it = vindex.find({R.coset_key(h, supp[w]).key(), w});
        if (it != vindex.end()) local.insert(it->second);
      }
    dv.local.assign(local.begin(), local.end());
  }
  return b;
}

namespace {

struct FreeLetter {
  int gen;
  int exp;
};

using FreeWord = std::vector<FreeLetter>;

// reduced words over alphabet with length <= bound whose last letter is outside the strip set
std::vector<FreeWord> coset_words(const std::vector<int>& alphabet, const std::vector<int>& strip, int bound) {
  std::vector<FreeWord> all{FreeWord{}};
  for (size_t head = 0; head < all.size(); ++head) {
    if (static_cast<int>(all[head].size()) >= bound) continue;
    for (int a : alphabet)
      for (int e : {1, -1}) {
        if (!all[head].empty() && all[head].back().gen == a && all[head].back().exp == -e) continue;
        auto w = all[head];
        w.push_back({a, e});
        all.push_back(w);
      }
  }
  std::vector<FreeWord> out;
  for (auto& w : all)
    if (w.empty() || std::find(strip.begin(), strip.end(), w.back().gen) == strip.end()) out.push_back(w);
  return out;
}

std::string free_text(const JoinComplex& jc, const FreeWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += jc.generator_names[w[i].gen];
    if (w[i].exp < 0) s += "^-1";
  }
  return s;
}

std::vector<int> cycles_in(const JoinComplex& jc, const VSet& vs) {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(jc.generators.size()); ++c)
    if (is_subset(jc.generators[c], vs)) out.push_back(c);
  return out;
}

}  // namespace

DevelopmentBall development_gog(const JoinComplex& jc, int depth, int word_bound, long cap) {
  if (jc.kind != Kind::Braid) throw std::invalid_argument("development_gog: braid-kind complex required");
  if (jc.dimension() >= 2)
    throw std::invalid_argument(
        "development_gog: complex has 2-simplices; only graphs of groups are developed (use the join complex "
        "directly)");
  if (jc.vertex_count() == 0) throw std::invalid_argument("development_gog: empty complex");
  if (depth < 0 || word_bound < 0) throw std::invalid_argument("development_gog: depth and word bound must be >= 0");

  DevelopmentBall b;
  b.base = jc;
  b.radius = depth;
  b.word_bound = word_bound;

  struct Oriented {
    int edge, to;
    std::vector<std::string> reps;  // coset representatives, rendered
    std::vector<bool> trivial;
  };
  int nv = jc.vertex_count();
  std::vector<std::vector<Oriented>> out(nv);
  for (int e = nv; e < static_cast<int>(jc.simplices.size()); ++e) {
    const auto& s = jc.simplices[e];
    if (s.verts.size() != 2) continue;
    for (int side = 0; side < 2; ++side) {
      int u = s.verts[side], w = s.verts[1 - side];
      const auto& lu = jc.simplices[u].label;
      auto a1 = cycles_in(jc, lu.first), a2 = cycles_in(jc, lu.second);
      auto b1 = cycles_in(jc, s.label.first), b2 = cycles_in(jc, s.label.second);
      Oriented o{e, w, {}, {}};
      auto w1s = coset_words(a1, b1, word_bound);
      auto w2s = coset_words(a2, b2, word_bound);
      for (auto& x : w1s)
        for (auto& y : w2s) {
          if (static_cast<int>(x.size() + y.size()) > word_bound) continue;
          o.reps.push_back("(" + free_text(jc, x) + "|" + free_text(jc, y) + ")");
          o.trivial.push_back(x.empty() && y.empty());
        }
      out[u].push_back(std::move(o));
    }
  }

  struct Node {
    int vertex;
    int depth;
    int last_edge;  // base edge used to arrive, -1 at the root
  };
  std::vector<Node> nodes{{0, 0, -1}};
  b.vertices.push_back({jc.vertex_ids[0], 0, depth == 0, true, {}});
  for (size_t head = 0; head < nodes.size(); ++head) {
    Node cur = nodes[head];
    if (cur.depth >= depth) continue;
    int u = b.vertices[head].rho;
    for (auto& o : out[u])
      for (size_t r = 0; r < o.reps.size(); ++r) {
        if (o.trivial[r] && o.edge == cur.last_edge) continue;
        int child = static_cast<int>(b.vertices.size());
        if (child >= cap) {
          std::ostringstream msg;
          msg << "development_gog: more than " << cap << " vertices; lower depth or --word-bound";
          throw CapExceeded(msg.str());
        }
        std::string key = b.vertices[head].key + " " + o.reps[r] + " " + jc.vertex_ids[o.to];
        b.vertices.push_back({key, o.to, cur.depth + 1 >= depth, true, {}});
        nodes.push_back({o.to, cur.depth + 1, o.edge});
        DevSimplex ds;
        ds.verts = {static_cast<int>(head), child};
        ds.rho = o.edge;
        ds.key = o.reps[r];
        b.simplices.push_back(ds);
      }
  }
  b.elements = static_cast<long>(b.vertices.size());
  auto adj = b.adjacency();
  for (size_t v = 0; v < b.vertices.size(); ++v)
    if (!b.vertices[v].boundary) b.vertices[v].local = adj[v];
  return b;
}

int betti1(const DevelopmentBall& b) {
  std::vector<SparseColumn> d1, d2;
  std::vector<int> col(b.simplices.size(), -1);
  for (size_t i = 0; i < b.simplices.size(); ++i)
    if (b.simplices[i].verts.size() == 2) {
      col[i] = static_cast<int>(d1.size());
      d1.push_back({{b.simplices[i].verts[1], 1}, {b.simplices[i].verts[0], -1}});
    }
  for (auto& s : b.simplices) {
    if (s.verts.size() != 3) continue;
    SparseColumn c;
    for (auto [face, omitted] : s.faces) {
      int pos = static_cast<int>(std::find(s.verts.begin(), s.verts.end(), omitted) - s.verts.begin());
      c.push_back({col.at(face), pos % 2 ? -1 : 1});
    }
    d2.push_back(c);
  }
  return sqci::betti1(d1, d2);
}

LocalPatternReport check_local_pattern(const DevelopmentBall& b) {
  LocalPatternReport rep;
  auto adj = b.adjacency();
  const auto& base = b.base;
  int n = static_cast<int>(b.vertices.size());

  for (auto& s : b.simplices) {
    std::vector<int> proj;
    for (int v : s.verts) proj.push_back(b.vertices[v].rho);
    std::sort(proj.begin(), proj.end());
    auto want = base.simplices[s.rho].verts;
    std::sort(want.begin(), want.end());
    if (proj != want) {
      rep.labels_preserved = false;
      rep.violations.push_back("projection of simplex " + s.key + " is not its base simplex");
    }
  }

  std::vector<int> mark(n, -1);
  for (int v = 0; v < n; ++v) {
    const auto& dv = b.vertices[v];
    if (dv.boundary) continue;
    ++rep.checked;
    bool cut = false;
    if (dv.local.size() >= 2) {
      std::deque<int> q{dv.local[0]};
      mark[dv.local[0]] = v;
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : adj[x])
          if (y != v && mark[y] != v) {
            mark[y] = v;
            q.push_back(y);
          }
      }
      cut = std::any_of(dv.local.begin(), dv.local.end(), [&](int w) { return mark[w] != v; });
    }
    if (cut) ++rep.cut_vertices;
    if (cut != dv.expected_cut)
      rep.violations.push_back("vertex " + base.vertex_ids[dv.rho] + "@" + dv.key +
                               (dv.expected_cut ? " should be a cut vertex" : " should not be a cut vertex"));
    if (base.kind == Kind::Raag) {
      const auto& lv = base.simplices[dv.rho].label;
      for (int w : adj[v]) {
        const auto& lw = base.simplices[b.vertices[w].rho].label;
        bool ok = lv.qi_type() == "ZxF" && lw.qi_type() == "ZxF";
        if (ok) {
          const auto& zv = lv.first.size() == 1 ? lv.first : lv.second;
          const auto& fv = lv.first.size() == 1 ? lv.second : lv.first;
          const auto& zw = lw.first.size() == 1 ? lw.first : lw.second;
          const auto& fw = lw.first.size() == 1 ? lw.second : lw.first;
          ok = is_subset(zv, fw) && is_subset(zw, fv);
        }
        if (!ok) ++rep.alternation_violations;
      }
    }
  }
  rep.pass = rep.labels_preserved && rep.violations.empty();
  return rep;
}

nlohmann::json to_json(const DevelopmentBall& b) {
  nlohmann::json j;
  j["kind"] = b.base.kind == Kind::Raag ? "raag" : "braid";
  j["radius"] = b.radius;
  j["word_bound"] = b.word_bound;
  j["elements"] = b.elements;
  j["base"] = to_json(b.base);
  j["vertices"] = nlohmann::json::array();
  for (size_t v = 0; v < b.vertices.size(); ++v) {
    const auto& dv = b.vertices[v];
    j["vertices"].push_back({{"id", v},
                             {"key", dv.key},
                             {"rho", b.base.vertex_ids[dv.rho]},
                             {"label", b.base.simplices[dv.rho].label.text},
                             {"boundary", dv.boundary}});
  }
  j["simplices"] = nlohmann::json::array();
  for (auto& s : b.simplices) j["simplices"].push_back({{"verts", s.verts}, {"rho", s.rho}, {"key", s.key}});
  return j;
}

std::string to_dot(const DevelopmentBall& b) {
  std::ostringstream os;
  os << "graph development {\n  node [shape=box,fontsize=9];\n";
  for (size_t v = 0; v < b.vertices.size(); ++v) {
    const auto& dv = b.vertices[v];
    os << "  n" << v << " [label=\"" << b.base.vertex_ids[dv.rho] << "\\n" << dv.key << "\" rho=\"" << dv.rho
       << "\"";
    if (dv.boundary) os << " boundary=true style=dashed";
    os << "];\n";
  }
  for (auto& s : b.simplices)
    if (s.verts.size() == 2) os << "  n" << s.verts[0] << " -- n" << s.verts[1] << " [rho=\"" << s.rho << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace sqci
