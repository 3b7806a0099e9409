#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqci/graph.hpp"

namespace sqci {

struct JoinSubgraph {
  VSet side_a, side_b;

  VSet support() const { return set_union(side_a, side_b); }
  auto operator<=>(const JoinSubgraph&) const = default;
};

// edges of a join, as (min,max) vertex pairs
std::vector<std::pair<int, int>> join_edges(const JoinSubgraph& j);
JoinSubgraph canonical_join(VSet a, VSet b);

struct ProductPair {
  Subgraph first, second;

  ProductPair swapped() const { return {second, first}; }
  bool operator==(const ProductPair& o) const {
    return first.vertices == o.first.vertices && second.vertices == o.second.vertices;
  }
  bool operator<(const ProductPair& o) const {
    return std::tie(first.vertices, second.vertices) < std::tie(o.first.vertices, o.second.vertices);
  }
  // componentwise inclusion
  bool contained_in(const ProductPair& o) const {
    return is_subset(first.vertices, o.first.vertices) && is_subset(second.vertices, o.second.vertices);
  }
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<JoinSubgraph> maximal_join_subgraphs(const SimplicialGraph& g);

std::vector<ProductPair> maximal_products_cactus(const CactusAnalysis& a);

// vertex masks whose induced subgraph is connected with minimum valency >= 2
std::vector<std::uint64_t> standard_sets_serial(const SimplicialGraph& g);
std::vector<std::uint64_t> standard_sets_parallel(const SimplicialGraph& g);

int default_cap();  // 24, or SQCI_CAP when set
std::vector<ProductPair> maximal_products_bruteforce(const SimplicialGraph& g, int cap = default_cap(),
                                                     bool parallel = true);

std::vector<ProductPair> intersect_products(const std::vector<ProductPair>& ps);

nlohmann::json to_json(const SimplicialGraph& g, const Subgraph& s);
nlohmann::json to_json(const SimplicialGraph& g, const ProductPair& p);

}  // namespace sqci
