#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sqci/graph.hpp"
#include "sqci/products.hpp"

namespace sqci {

struct Letter {
  int gen = 0;
  int exp = 1;  // +1 or -1

  int key() const { return 2 * gen + (exp < 0); }
  Letter inverse() const { return {gen, -exp}; }
  bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};

using Word = std::vector<Letter>;

struct NormalForm {
  Word word;

  bool empty() const { return word.empty(); }
  size_t size() const { return word.size(); }
  std::string key() const;  // compact hashable encoding
  bool operator==(const NormalForm& o) const { return word == o.word; }
  bool operator<(const NormalForm& o) const { return key() < o.key(); }
};

struct JoinLengthResult {
  int length = 0;
  std::vector<std::pair<NormalForm, JoinSubgraph>> factorization;
};

class Raag {
 public:
  explicit Raag(SimplicialGraph g);

  const SimplicialGraph& graph() const { return g_; }
  bool commute(int a, int b) const { return comm_[a][b]; }

  Word parse(const std::string& text) const;
  std::string format(const Word& w) const;
  std::string format(const NormalForm& w) const { return format(w.word); }

  Word reduce(const Word& w) const;
  Word canonical(const Word& reduced) const;
  NormalForm normal_form(const Word& w) const;
  NormalForm multiply(const NormalForm& a, const NormalForm& b) const;
  NormalForm inverse(const NormalForm& a) const;

  bool special_membership(const NormalForm& nf, const VSet& s) const;
  std::pair<NormalForm, NormalForm> max_left_divisor(const NormalForm& nf, const VSet& s) const;
  std::pair<NormalForm, NormalForm> max_right_divisor(const NormalForm& nf, const VSet& s) const;  // (rest, suffix)
  NormalForm coset_key(const NormalForm& nf, const VSet& s) const;

  const std::vector<JoinSubgraph>& joins() const { return joins_; }
  JoinLengthResult join_length(const NormalForm& nf) const;
  JoinLengthResult star_length(const NormalForm& nf) const;
  int syllable_count(const NormalForm& nf) const;

 private:
  JoinLengthResult factor_length(const NormalForm& nf, const std::vector<JoinSubgraph>& pieces) const;

  SimplicialGraph g_;
  std::vector<std::vector<char>> comm_;
  std::vector<JoinSubgraph> joins_, stars_;
};

NormalForm normal_form(const SimplicialGraph& g, const Word& w);
bool special_membership(const NormalForm& nf, const VSet& s);
JoinLengthResult join_length(const SimplicialGraph& g, const NormalForm& nf);

}  // namespace sqci
