#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "sqci/join_complex.hpp"

namespace sqci {

struct SemiIso {
  std::vector<int> vertex_bijection;
  std::vector<int> simplex_map;
  std::vector<int> flips;  // per simplex of the source: coordinates swapped under the map
};

struct SemiIsoOptions {
  bool strict_ranks = false;
  long chain_cap = 20000;  // maximal chains spot-checked per leaf
};

// raised when the face-level and chain-level checks disagree
struct SemiIsoInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

std::optional<SemiIso> semi_isomorphic(const JoinComplex& a, const JoinComplex& b, SemiIsoOptions opt = {});
long semi_iso_count(const JoinComplex& a, const JoinComplex& b, SemiIsoOptions opt = {});

// independent re-check of a candidate map
bool verify_semi_iso(const JoinComplex& a, const JoinComplex& b, const SemiIso& m, SemiIsoOptions opt = {});

}  // namespace sqci
