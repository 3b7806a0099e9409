#pragma once

#include <string>

#include "sqci/graph.hpp"

namespace testutil {

inline std::string corpus(const std::string& rel) { return std::string(SQCI_CORPUS_DIR) + "/" + rel; }

inline sqci::SimplicialGraph load(const std::string& rel) { return sqci::load_graph(corpus(rel)); }

inline sqci::SimplicialGraph make(const std::string& text) { return sqci::parse_graph(text); }

// path, cycle and star builders with vertex names v0, v1, ...
inline sqci::SimplicialGraph cycle(int n, const std::string& p = "v") {
  sqci::SimplicialGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(p + std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline sqci::SimplicialGraph path(int n) {
  sqci::SimplicialGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline sqci::SimplicialGraph complete(int n) {
  sqci::SimplicialGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline sqci::SimplicialGraph complete_bipartite(int a, int b) {
  sqci::SimplicialGraph g;
  for (int i = 0; i < a; ++i) g.add_vertex("x" + std::to_string(i));
  for (int i = 0; i < b; ++i) g.add_vertex("y" + std::to_string(i));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

}  // namespace testutil
