#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sqci/join_complex.hpp"

namespace sqci {

struct DevVertex {
  std::string key;   // coset key (ball) or reduced path (graph of groups)
  int rho = 0;       // base vertex
  bool boundary = false;
  bool expected_cut = false;
  std::vector<int> local;  // neighbours used by the local pattern check
};

struct DevSimplex {
  std::vector<int> verts;  // sorted upstairs vertices
  int rho = 0;             // base simplex
  std::string key;
  std::vector<std::pair<int, int>> faces;  // (face simplex, omitted upstairs vertex), dimension >= 2 only
};

struct DevelopmentBall {
  JoinComplex base;
  int radius = 0;
  int word_bound = 0;
  long elements = 0;
  std::vector<DevVertex> vertices;
  std::vector<DevSimplex> simplices;  // dimension >= 1

  std::vector<std::vector<int>> adjacency() const;
  int dimension() const;
};

DevelopmentBall ball_raag(const SimplicialGraph& g, int radius, int word_bound, long cap = 200000);
DevelopmentBall development_gog(const JoinComplex& jc, int depth, int word_bound, long cap = 200000);

struct LocalPatternReport {
  bool pass = true;
  int checked = 0;
  int cut_vertices = 0;
  bool labels_preserved = true;
  int alternation_violations = 0;
  std::vector<std::string> violations;
};

LocalPatternReport check_local_pattern(const DevelopmentBall& b);

int betti1(const DevelopmentBall& b);

nlohmann::json to_json(const DevelopmentBall& b);
std::string to_dot(const DevelopmentBall& b);

}  // namespace sqci
