#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqci/graph.hpp"

namespace sqci {

struct SqEdge {
  int u = 0, v = 0;
  std::string id;
};

// boundary path c0 -e0-> c1 -e1-> c2 -e2-> c3 -e3-> c0; dir +1 traverses an edge u->v
struct Square {
  std::array<int, 4> e{};
  std::array<int, 4> dir{1, 1, 1, 1};
};

struct SquareComplex {
  std::vector<std::string> vertices;
  std::vector<SqEdge> edges;
  std::vector<Square> squares;
  // projection labels (first factor cell, second factor cell); filled by build_d2
  std::vector<std::array<std::string, 2>> vertex_pr, edge_pr, square_pr;

  int add_vertex(const std::string& id);
  int add_edge(int u, int v, const std::string& id = "");
  // directions are inferred from shared endpoints; edges must not be loops
  int add_square(const std::array<int, 4>& edge_ids);
  int add_square(const std::array<int, 4>& edge_ids, const std::array<int, 4>& dirs);
  std::array<int, 4> corners(const Square& s) const;
};

SquareComplex build_d2(const SimplicialGraph& g);

struct LinkViolation {
  int vertex;
  std::string kind;  // "loop", "multi-edge", "triangle"
};

struct NpcReport {
  bool pass = true;
  std::vector<LinkViolation> violations;
};

// link graph at a vertex: nodes are edge ends (2*edge + end), edges are square corners
std::vector<std::pair<int, int>> link_edges(const SquareComplex& c, int vertex);
NpcReport npc_check(const SquareComplex& c);

struct Hyperplane {
  std::vector<int> edge_class;
  bool self_intersecting = false;
  bool self_osculating = false;
  bool one_sided = false;
};

std::vector<Hyperplane> hyperplanes(const SquareComplex& c);

struct BettiResult {
  int betti1 = 0;
  bool connected = true;
  int components = 1;
};

BettiResult betti1(const SquareComplex& c);

nlohmann::json to_json(const SquareComplex& c);
SquareComplex square_complex_from_json(const nlohmann::json& j);
std::string to_dot(const SquareComplex& c);

}  // namespace sqci
