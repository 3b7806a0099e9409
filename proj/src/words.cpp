#include "sqci/words.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sqci {

std::string NormalForm::key() const {
  std::string s;
  s.reserve(word.size() * 2);
  for (auto& l : word) {
    int k = l.key();
    s.push_back(static_cast<char>(k & 0xff));
    s.push_back(static_cast<char>(k >> 8));
  }
  return s;
}

Raag::Raag(SimplicialGraph g) : g_(std::move(g)) {
  int n = g_.size();
  comm_.assign(n, std::vector<char>(n, 0));
  for (auto [u, v] : g_.edges()) comm_[u][v] = comm_[v][u] = 1;
  if (g_.edge_count() > 0 && is_triangle_free(g_)) {
    joins_ = maximal_join_subgraphs(g_);
    for (int v = 0; v < n; ++v)
      if (g_.degree(v) > 0) stars_.push_back(canonical_join({v}, g_.neighbors(v)));
  }
}

Word Raag::parse(const std::string& text) const {
  Word w;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) {
    int exp = 1;
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    if (caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      if (e == "-1")
        exp = -1;
      else if (e != "1" && e != "+1")
        throw ParseError("bad exponent in token " + tok);
    }
    if (!g_.has_vertex(name)) throw ParseError("unknown generator " + name);
    w.push_back({g_.index(name), exp});
  }
  return w;
}

std::string Raag::format(const Word& w) const {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += g_.name(w[i].gen);
    if (w[i].exp < 0) s += "^-1";
  }
  return s;
}

Word Raag::reduce(const Word& w) const {
  Word out;
  for (auto x : w) {
    if (x.gen < 0 || x.gen >= g_.size()) throw ParseError("unknown generator index");
    int j = static_cast<int>(out.size()) - 1;
    while (j >= 0 && out[j].gen != x.gen && comm_[out[j].gen][x.gen]) --j;
    if (j >= 0 && out[j] == x.inverse())
      out.erase(out.begin() + j);
    else
      out.push_back(x);
  }
  return out;
}

Word Raag::canonical(const Word& w) const {
  Word rest = w, out;
  out.reserve(w.size());
  while (!rest.empty()) {
    int best = -1;
    for (size_t i = 0; i < rest.size(); ++i) {
      bool free = true;
      for (size_t j = 0; j < i && free; ++j)
        if (rest[j].gen == rest[i].gen || !comm_[rest[j].gen][rest[i].gen]) free = false;
      if (free && (best < 0 || rest[i].key() < rest[best].key())) best = static_cast<int>(i);
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + best);
  }
  return out;
}

NormalForm Raag::normal_form(const Word& w) const { return {canonical(reduce(w))}; }

NormalForm Raag::multiply(const NormalForm& a, const NormalForm& b) const {
  Word w = a.word;
  w.insert(w.end(), b.word.begin(), b.word.end());
  return normal_form(w);
}

NormalForm Raag::inverse(const NormalForm& a) const {
  Word w;
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) w.push_back(it->inverse());
  return normal_form(w);
}

bool Raag::special_membership(const NormalForm& nf, const VSet& s) const { return sqci::special_membership(nf, s); }

bool special_membership(const NormalForm& nf, const VSet& s) {
  return std::all_of(nf.word.begin(), nf.word.end(),
                     [&](const Letter& l) { return std::binary_search(s.begin(), s.end(), l.gen); });
}

std::pair<NormalForm, NormalForm> Raag::max_left_divisor(const NormalForm& nf, const VSet& s) const {
  Word prefix, rest;
  for (auto& l : nf.word) {
    bool take = std::binary_search(s.begin(), s.end(), l.gen);
    for (size_t j = 0; j < rest.size() && take; ++j)
      if (rest[j].gen == l.gen || !comm_[rest[j].gen][l.gen]) take = false;
    (take ? prefix : rest).push_back(l);
  }
  return {{canonical(prefix)}, {canonical(rest)}};
}

std::pair<NormalForm, NormalForm> Raag::max_right_divisor(const NormalForm& nf, const VSet& s) const {
  Word suffix, rest;
  for (auto it = nf.word.rbegin(); it != nf.word.rend(); ++it) {
    bool take = std::binary_search(s.begin(), s.end(), it->gen);
    for (size_t j = 0; j < rest.size() && take; ++j)
      if (rest[j].gen == it->gen || !comm_[rest[j].gen][it->gen]) take = false;
    (take ? suffix : rest).push_back(*it);
  }
  std::reverse(suffix.begin(), suffix.end());
  std::reverse(rest.begin(), rest.end());
  return {{canonical(rest)}, {canonical(suffix)}};
}

NormalForm Raag::coset_key(const NormalForm& nf, const VSet& s) const { return max_right_divisor(nf, s).first; }

int Raag::syllable_count(const NormalForm& nf) const {
  int c = 0;
  for (size_t i = 0; i < nf.word.size(); ++i)
    if (i == 0 || nf.word[i].gen != nf.word[i - 1].gen) ++c;
  return c;
}

JoinLengthResult Raag::factor_length(const NormalForm& nf, const std::vector<JoinSubgraph>& pieces) const {
  if (pieces.empty() && !nf.empty()) throw std::invalid_argument("join_length: graph has no joins");
  std::vector<VSet> supports;
  for (auto& p : pieces) supports.push_back(p.support());
  std::unordered_map<std::string, int> failed;  // word -> largest depth known to fail
  std::vector<std::pair<NormalForm, JoinSubgraph>> trail;
  std::function<bool(const NormalForm&, int)> dfs = [&](const NormalForm& w, int depth) {
    if (w.empty()) return true;
    if (depth == 0) return false;
    auto k = w.key();
    auto it = failed.find(k);
    if (it != failed.end() && it->second >= depth) return false;
    for (size_t i = 0; i < pieces.size(); ++i) {
      auto [p, r] = max_left_divisor(w, supports[i]);
      if (p.empty()) continue;
      trail.push_back({p, pieces[i]});
      if (dfs(r, depth - 1)) return true;
      trail.pop_back();
    }
    failed[k] = std::max(failed[k], depth);
    return false;
  };
  JoinLengthResult res;
  for (int d = 0;; ++d) {
    trail.clear();
    if (dfs(nf, d)) {
      res.length = d;
      res.factorization = trail;
      return res;
    }
  }
}

JoinLengthResult Raag::join_length(const NormalForm& nf) const { return factor_length(nf, joins_); }
JoinLengthResult Raag::star_length(const NormalForm& nf) const { return factor_length(nf, stars_); }

NormalForm normal_form(const SimplicialGraph& g, const Word& w) { return Raag(g).normal_form(w); }

JoinLengthResult join_length(const SimplicialGraph& g, const NormalForm& nf) { return Raag(g).join_length(nf); }

}  // namespace sqci
