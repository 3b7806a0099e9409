#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqci/graph.hpp"

namespace sqci {

enum class Family { Raag, Pb2 };
std::string to_string(Family f);

struct GroupDescriptor {
  Family family = Family::Raag;
  SimplicialGraph graph;
};

// raag: one component carrying edges plus isolated vertices; pb2: connected
GroupDescriptor make_descriptor(Family family, SimplicialGraph g);

enum class Relation { QI, NOT_QI, UNKNOWN };
std::string to_string(Relation r);

struct Verdict {
  Relation relation = Relation::UNKNOWN;
  std::string rule;
  nlohmann::json evidence = nlohmann::json::object();
};

struct OutFiniteResult {
  bool finite = true;
  std::string witness_kind;  // "transvection" or "separating-star"
  int v = -1, w = -1;        // transvection: lk(w) inside st(v)
  VSet star;                 // separating closed star
};

OutFiniteResult out_finite(const SimplicialGraph& g);

// blocks are vertex sets; throws std::invalid_argument naming the failed hypothesis
Verdict block_compare(const SimplicialGraph& g1, const SimplicialGraph& g2, const std::vector<VSet>& blocks1,
                      const std::vector<VSet>& blocks2);

Verdict classify_qi(const GroupDescriptor& d1, const GroupDescriptor& d2);

// k when the reduced spine is a star with non-joint centre and k >= 3 joint leaves
std::optional<int> recognize_O(const CactusAnalysis& a);
// n when the reduced spine is a path x..y with two joint leaves at each end and n internal joints
std::optional<int> recognize_Oprime(const CactusAnalysis& a);

nlohmann::json to_json(const Verdict& v);
std::string report(const Verdict& v);

}  // namespace sqci
