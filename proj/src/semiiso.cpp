#include "sqci/semiiso.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <tuple>

namespace sqci {

namespace {

struct Prepared {
  const JoinComplex* jc;
  int n;
  std::vector<std::vector<int>> adj;
  std::map<std::pair<int, int>, int> edge_mult;
  std::vector<std::string> invariant;
  std::map<std::vector<int>, std::vector<int>> groups;
  std::map<std::pair<int, int>, int> face_at;  // (simplex, omitted vertex) -> face relation index
  std::vector<bool> maximal;

  Prepared(const JoinComplex& c, bool strict) : jc(&c), n(c.vertex_count()) {
    adj = c.vertex_adjacency();
    for (size_t i = 0; i < c.simplices.size(); ++i) {
      groups[c.simplices[i].verts].push_back(static_cast<int>(i));
      if (c.simplices[i].verts.size() == 2) ++edge_mult[{c.simplices[i].verts[0], c.simplices[i].verts[1]}];
    }
    for (size_t k = 0; k < c.faces.size(); ++k) face_at[{c.faces[k].simplex, c.faces[k].omitted}] = static_cast<int>(k);
    maximal = c.maximal_flags();
    invariant.resize(n);
    std::vector<std::vector<std::string>> parts(n);
    for (auto& s : c.simplices) {
      std::string tag = std::to_string(s.verts.size()) + s.label.qi_type();
      if (strict) tag += std::to_string(std::min(s.label.r, s.label.s)) + "/" + std::to_string(std::max(s.label.r, s.label.s));
      for (int v : s.verts) parts[v].push_back(tag);
    }
    for (int v = 0; v < n; ++v) {
      std::sort(parts[v].begin(), parts[v].end());
      invariant[v] = std::to_string(adj[v].size()) + ":";
      for (auto& p : parts[v]) invariant[v] += p + ",";
    }
  }

  int mult(int u, int v) const {
    auto it = edge_mult.find(std::minmax(u, v));
    return it == edge_mult.end() ? 0 : it->second;
  }
};

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
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  }
};

using Pattern = std::pair<bool, bool>;
Pattern swap_if(Pattern p, bool s) { return s ? Pattern{p.second, p.first} : p; }

// -1 impossible, 0/1 forced flip, 2 free
int required_flip(Pattern src, Pattern dst) {
  bool same = src == dst, swapped = src == swap_if(dst, true);
  if (same && swapped) return 2;
  if (same) return 0;
  if (swapped) return 1;
  return -1;
}

struct Checker {
  const Prepared& A;
  const Prepared& B;
  SemiIsoOptions opt;

  // face-level check; fills flips on success
  bool face_level(const std::vector<int>& phi, const std::vector<int>& psi, std::vector<int>& flips) const {
    const auto& SA = A.jc->simplices;
    const auto& SB = B.jc->simplices;
    int m = static_cast<int>(SA.size());
    ParityUF uf(m + 1);
    const int zero = m;
    for (int i = 0; i < m; ++i) {
      if (SA[i].label.qi_type() != SB[psi[i]].label.qi_type()) return false;
      if (opt.strict_ranks) {
        bool same = SA[i].label.r == SB[psi[i]].label.r && SA[i].label.s == SB[psi[i]].label.s;
        bool swapped = SA[i].label.r == SB[psi[i]].label.s && SA[i].label.s == SB[psi[i]].label.r;
        if (!same && !swapped) return false;
        if (same != swapped && !uf.unite(i, zero, swapped ? 1 : 0)) return false;
      }
    }
    for (auto& fr : A.jc->faces) {
      auto it = B.face_at.find({psi[fr.simplex], phi[fr.omitted]});
      if (it == B.face_at.end()) return false;
      const auto& fb = B.jc->faces[it->second];
      if (fb.face != psi[fr.face]) return false;
      if (!uf.unite(fr.simplex, fr.face, fr.flipped ^ fb.flipped)) return false;
      int need = required_flip({fr.eq_first, fr.eq_second}, {fb.eq_first, fb.eq_second});
      if (need < 0) return false;
      if (need < 2 && !uf.unite(fr.simplex, zero, need)) return false;
    }
    flips.assign(m, 0);
    for (int i = 0; i < m; ++i) {
      auto [ri, pi] = uf.find(i);
      auto [rz, pz] = uf.find(zero);
      flips[i] = ri == rz ? (pi ^ pz) : pi;
    }
    return true;
  }

  // per-chain check in the frame of each maximal simplex
  bool chain_level(const std::vector<int>& phi, const std::vector<int>& psi) const {
    const auto& SA = A.jc->simplices;
    long budget = opt.chain_cap;
    bool ok = true;
    std::vector<std::pair<Pattern, Pattern>> seq;  // (source, image) in the top frames
    std::function<void(int, int, bool, bool)> walk = [&](int sa, int sb, bool ca, bool cb) {
      if (!ok || budget <= 0) return;
      if (SA[sa].verts.size() == 1) {
        --budget;
        bool plain = true, swapped = true;
        for (auto& [p, q] : seq) {
          if (p != q) plain = false;
          if (p != swap_if(q, true)) swapped = false;
        }
        if (!plain && !swapped) ok = false;
        return;
      }
      for (int v : SA[sa].verts) {
        int ka = A.face_at.at({sa, v});
        auto itb = B.face_at.find({sb, phi[v]});
        if (itb == B.face_at.end()) {
          ok = false;
          return;
        }
        const auto& fa = A.jc->faces[ka];
        const auto& fb = B.jc->faces[itb->second];
        seq.push_back({swap_if({fa.eq_first, fa.eq_second}, ca), swap_if({fb.eq_first, fb.eq_second}, cb)});
        walk(fa.face, fb.face, ca ^ fa.flipped, cb ^ fb.flipped);
        seq.pop_back();
      }
    };
    for (size_t i = 0; i < SA.size() && ok && budget > 0; ++i)
      if (A.maximal[i]) walk(static_cast<int>(i), psi[i], false, false);
    return ok;
  }

  // try all simplex matchings for the vertex bijection phi
  std::optional<SemiIso> complete(const std::vector<int>& phi) const {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> todo;  // (source simplices, target simplices)
    for (auto& [vs, ids] : A.groups) {
      std::vector<int> img;
      for (int v : vs) img.push_back(phi[v]);
      std::sort(img.begin(), img.end());
      auto it = B.groups.find(img);
      if (it == B.groups.end() || it->second.size() != ids.size()) return std::nullopt;
      todo.push_back({ids, it->second});
    }
    if (A.jc->simplices.size() != B.jc->simplices.size()) return std::nullopt;
    std::vector<int> psi(A.jc->simplices.size(), -1);
    std::optional<SemiIso> found;
    std::function<void(size_t)> assign = [&](size_t k) {
      if (found) return;
      if (k == todo.size()) {
        std::vector<int> flips;
        if (!face_level(phi, psi, flips)) return;
        if (!chain_level(phi, psi))
          throw SemiIsoInconsistency("face-level check accepted a map rejected by the chain check");
        found = SemiIso{phi, psi, flips};
        return;
      }
      auto tgt = todo[k].second;
      std::sort(tgt.begin(), tgt.end());
      do {
        bool ok = true;
        for (size_t i = 0; i < tgt.size() && ok; ++i)
          if (A.jc->simplices[todo[k].first[i]].label.qi_type() != B.jc->simplices[tgt[i]].label.qi_type()) ok = false;
        if (!ok) continue;
        for (size_t i = 0; i < tgt.size(); ++i) psi[todo[k].first[i]] = tgt[i];
        assign(k + 1);
      } while (!found && std::next_permutation(tgt.begin(), tgt.end()));
    };
    assign(0);
    return found;
  }
};

template <class Visit>
void search(const Prepared& A, const Prepared& B, const Checker& chk, Visit visit) {
  if (A.n != B.n || A.jc->simplices.size() != B.jc->simplices.size() || A.jc->kind != B.jc->kind) return;
  {
    auto x = A.invariant, y = B.invariant;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return;
  }
  int n = A.n;
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
      for (int w : A.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
  }
  std::vector<int> phi(n, -1);
  std::vector<char> used(n, 0);
  bool stop = false;
  std::function<void(int)> go = [&](int k) {
    if (stop) return;
    if (k == n) {
      auto r = chk.complete(phi);
      if (r && !visit(*r)) stop = true;
      return;
    }
    int v = order[k];
    for (int c = 0; c < n && !stop; ++c) {
      if (used[c] || A.invariant[v] != B.invariant[c]) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        int u = order[i];
        if (A.mult(u, v) != B.mult(phi[u], c)) ok = false;
        bool adja = std::binary_search(A.adj[v].begin(), A.adj[v].end(), u);
        bool adjb = std::binary_search(B.adj[c].begin(), B.adj[c].end(), phi[u]);
        if (adja != adjb) ok = false;
      }
      if (!ok) continue;
      phi[v] = c;
      used[c] = 1;
      go(k + 1);
      phi[v] = -1;
      used[c] = 0;
    }
  };
  go(0);
}

}  // namespace

std::optional<SemiIso> semi_isomorphic(const JoinComplex& a, const JoinComplex& b, SemiIsoOptions opt) {
  Prepared A(a, opt.strict_ranks), B(b, opt.strict_ranks);
  Checker chk{A, B, opt};
  std::optional<SemiIso> out;
  search(A, B, chk, [&](const SemiIso& m) {
    out = m;
    return false;
  });
  return out;
}

long semi_iso_count(const JoinComplex& a, const JoinComplex& b, SemiIsoOptions opt) {
  Prepared A(a, opt.strict_ranks), B(b, opt.strict_ranks);
  Checker chk{A, B, opt};
  long count = 0;
  search(A, B, chk, [&](const SemiIso&) {
    ++count;
    return true;
  });
  return count;
}

bool verify_semi_iso(const JoinComplex& a, const JoinComplex& b, const SemiIso& m, SemiIsoOptions opt) {
  if (a.vertex_count() != b.vertex_count() || a.simplices.size() != b.simplices.size()) return false;
  if (m.vertex_bijection.size() != static_cast<size_t>(a.vertex_count())) return false;
  std::set<int> img(m.vertex_bijection.begin(), m.vertex_bijection.end());
  if (static_cast<int>(img.size()) != a.vertex_count()) return false;
  std::set<int> simg(m.simplex_map.begin(), m.simplex_map.end());
  if (simg.size() != a.simplices.size()) return false;
  for (size_t i = 0; i < a.simplices.size(); ++i) {
    std::vector<int> vs;
    for (int v : a.simplices[i].verts) vs.push_back(m.vertex_bijection[v]);
    std::sort(vs.begin(), vs.end());
    const auto& t = b.simplices[m.simplex_map[i]];
    if (vs != t.verts || t.label.qi_type() != a.simplices[i].label.qi_type()) return false;
    if (opt.strict_ranks) {
      int f = m.flips[i];
      if ((f ? t.label.s : t.label.r) != a.simplices[i].label.r) return false;
      if ((f ? t.label.r : t.label.s) != a.simplices[i].label.s) return false;
    }
  }
  for (auto& fr : a.faces) {
    bool hit = false;
    for (auto& fb : b.faces) {
      if (fb.simplex != m.simplex_map[fr.simplex] || fb.face != m.simplex_map[fr.face]) continue;
      hit = true;
      if (m.flips[fr.face] != (m.flips[fr.simplex] ^ fr.flipped ^ fb.flipped)) return false;
      if (swap_if({fb.eq_first, fb.eq_second}, m.flips[fr.simplex]) != Pattern{fr.eq_first, fr.eq_second}) return false;
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace sqci
