#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqci {

using VSet = std::vector<int>;  // sorted vertex indices

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  int add_vertex(const std::string& name);
  void add_edge(int u, int v);
  void add_edge(const std::string& a, const std::string& b);

  int size() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  int index(const std::string& name) const;
  bool has_vertex(const std::string& name) const { return index_.count(name) > 0; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const VSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  VSet link(int v) const { return adj_[v]; }
  VSet star(int v) const;

  bool operator==(const SimplicialGraph& o) const {
    return names_ == o.names_ && edges_ == o.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<std::pair<int, int>> edges_;  // u < v, sorted
  std::vector<VSet> adj_;
};

SimplicialGraph parse_graph(const std::string& text);
SimplicialGraph load_graph(const std::string& path);
std::string serialize_graph(const SimplicialGraph& g);

// induced subgraph of a parent graph
struct Subgraph {
  const SimplicialGraph* parent = nullptr;
  VSet vertices;

  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;
  bool empty() const { return vertices.empty(); }
  int rank() const;  // |E| - |V| + components
  bool operator==(const Subgraph& o) const { return vertices == o.vertices; }
  bool operator<(const Subgraph& o) const { return vertices < o.vertices; }
};

Subgraph induced(const SimplicialGraph& g, VSet vs);
Subgraph core(const Subgraph& s);
std::vector<VSet> components(const SimplicialGraph& g, const VSet& within);
std::vector<VSet> components(const SimplicialGraph& g);
bool is_connected(const SimplicialGraph& g);
bool is_tree(const SimplicialGraph& g);
int diameter(const SimplicialGraph& g);  // -1 when disconnected

VSet set_union(const VSet& a, const VSet& b);
VSet set_intersection(const VSet& a, const VSet& b);
VSet set_difference(const VSet& a, const VSet& b);
bool is_subset(const VSet& a, const VSet& b);
bool disjoint(const VSet& a, const VSet& b);

std::string format_set(const SimplicialGraph& g, const VSet& vs);

enum class CactusType { S, M, NotApplicable };
std::string to_string(CactusType t);

struct CactusAnalysis {
  const SimplicialGraph* graph = nullptr;
  bool is_cactus = false;
  bool is_special = false;
  std::vector<Subgraph> cycles;
  std::vector<std::vector<int>> cycle_orders;  // vertices in cyclic order
  std::vector<std::string> cycle_names;
  SimplicialGraph spine;
  std::vector<int> joints;  // cycle index -> spine vertex
  std::vector<int> psi;     // graph vertex -> spine vertex
  CactusType type = CactusType::NotApplicable;
  std::vector<std::string> redundant;  // valency-2 non-joint spine vertices and pruned pendant vertices

  bool is_joint(int spine_vertex) const;
  int cycle_of_joint(int spine_vertex) const;
  // spine with pendant non-joint trees removed
  SimplicialGraph pruned_spine() const;
  // pruned spine with valency-2 non-joint vertices suppressed
  SimplicialGraph reduced_spine(std::vector<bool>* joint_flags = nullptr) const;
  // cycles whose vertices all lie in vs
  std::vector<int> cycles_in(const VSet& vs) const;
  std::string cycle_label(const VSet& vs) const;
};

CactusAnalysis analyze_cactus(const SimplicialGraph& g);

std::vector<std::vector<int>> detect_induced_cycles(const SimplicialGraph& g, int n);
std::optional<std::vector<int>> graph_isomorphic(const SimplicialGraph& a, const SimplicialGraph& b);
bool is_triangle_free(const SimplicialGraph& g);

}  // namespace sqci
