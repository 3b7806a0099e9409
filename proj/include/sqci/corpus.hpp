#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sqci/graph.hpp"

namespace sqci {

struct CorpusEntry {
  std::string file;    // relative to the corpus directory
  std::string name;
  std::string family;  // cactus, raag or misc
  std::string group;   // directory the file lives in
  nlohmann::json tags;
  SimplicialGraph graph;
};

// reads manifest.json in dir and loads every listed graph
std::vector<CorpusEntry> load_corpus(const std::string& dir);

std::vector<CorpusEntry> select_group(const std::vector<CorpusEntry>& corpus, const std::string& group);

}  // namespace sqci
