#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqci/graph.hpp"
#include "sqci/products.hpp"

namespace sqci {

enum class Kind { Raag, Braid };

struct JoinLabel {
  Kind kind = Kind::Raag;
  VSet first, second;  // supports in the defining graph
  int r = 0, s = 0;
  std::string text;

  std::string qi_type() const;
  VSet support() const { return set_union(first, second); }
};

// same subgroup; raag labels are compared up to swapping sides
bool same_label(const JoinLabel& a, const JoinLabel& b);

struct JSimplex {
  std::vector<int> verts;
  JoinLabel label;
};

struct FaceRel {
  int simplex = 0, face = 0;
  int omitted = 0;  // vertex removed to obtain the face
  bool eq_first = false, eq_second = false;  // in the simplex's frame
  bool flipped = false;
};

struct JoinComplex {
  Kind kind = Kind::Raag;
  SimplicialGraph graph;
  std::vector<VSet> generators;          // braid kind: cycle vertex sets
  std::vector<std::string> generator_names;
  bool from_special_cactus = false;
  std::vector<std::string> vertex_ids;
  std::vector<JSimplex> simplices;  // simplices[i] for i < vertex count are the vertices
  std::vector<FaceRel> faces;
  std::vector<std::string> notes;

  int vertex_count() const { return static_cast<int>(vertex_ids.size()); }
  int dimension() const;
  std::vector<bool> maximal_flags() const;
  std::vector<std::vector<int>> faces_of() const;  // simplex -> codim-1 face simplices
  std::multimap<std::vector<int>, int> by_vertex_set() const;
  std::vector<std::vector<int>> vertex_adjacency() const;
};

// label containment a inside b; flipped compares first with second
bool label_contained(const JoinLabel& a, const JoinLabel& b, bool flipped);
FaceRel make_face_rel(const JoinComplex& jc, int simplex, int face, int omitted);

JoinComplex build_ri_raag(const SimplicialGraph& g);
JoinComplex build_ri_braid(const CactusAnalysis& a);
// braid-kind complex from an explicit list of maximal products (oracle route)
JoinComplex build_ri_from_products(const SimplicialGraph& g, const std::vector<ProductPair>& products,
                                   const CactusAnalysis* a = nullptr);

struct ComponentInfo {
  std::vector<int> vertices;
  char type = 'M';  // 'M' closed under switch, 'S' paired with its twin
  int twin = -1;
};

struct ComponentReport {
  std::vector<ComponentInfo> components;
  std::vector<int> switch_map;
  std::vector<int> component_of;
};

ComponentReport components_and_switch(const JoinComplex& jc);
std::vector<std::vector<int>> complex_components(const JoinComplex& jc);
// full subcomplex on a vertex set, reindexed
JoinComplex induced_subcomplex(const JoinComplex& jc, const std::vector<int>& vertices);

struct VertexClass {
  bool separating = false;
  bool type1 = false;
};

std::vector<VertexClass> vertex_classification(const JoinComplex& jc, const SimplicialGraph& g);

int betti1(const JoinComplex& jc);

struct CjoinViolation {
  std::string property;
  std::string detail;
  bool warning = false;
};

std::vector<CjoinViolation> validate_cjoin(const JoinComplex& jc);

struct ObstructionResult {
  bool found = false;
  std::vector<std::array<int, 4>> witnesses;  // (E1, T1, E2, T2) simplex indices
  std::vector<std::array<std::string, 4>> labels;
};

ObstructionResult detect_obstruction_pattern(const JoinComplex& jc);

nlohmann::json to_json(const JoinComplex& jc);
JoinComplex join_complex_from_json(const nlohmann::json& j);
std::string to_dot(const JoinComplex& jc);

}  // namespace sqci
