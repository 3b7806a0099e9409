#include "sqci/corpus.hpp"

#include <fstream>
#include <stdexcept>

namespace sqci {

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  std::ifstream f(dir + "/manifest.json");
  if (!f) throw ParseError("cannot open " + dir + "/manifest.json");
  nlohmann::json m;
  try {
    f >> m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  std::vector<CorpusEntry> out;
  for (auto& g : m.at("graphs")) {
    CorpusEntry e;
    e.file = g.at("file").get<std::string>();
    e.name = g.at("name").get<std::string>();
    e.family = g.at("family").get<std::string>();
    e.group = e.file.substr(0, e.file.find('/'));
    e.tags = g;
    e.graph = load_graph(dir + "/" + e.file);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> select_group(const std::vector<CorpusEntry>& corpus, const std::string& group) {
  std::vector<CorpusEntry> out;
  for (auto& e : corpus)
    if (e.group == group) out.push_back(e);
  return out;
}

}  // namespace sqci
