#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqci/classifier.hpp"
#include "sqci/corpus.hpp"
#include "sqci/development.hpp"
#include "sqci/graph.hpp"
#include "sqci/join_complex.hpp"
#include "sqci/products.hpp"
#include "sqci/semiiso.hpp"
#include "sqci/square_complex.hpp"
#include "sqci/words.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sqci;

namespace {

constexpr int kOk = 0, kUsage = 1, kInvalid = 2, kNegative = 3;

struct Options {
  std::string out, dot, format = "text";
  int radius = 1, word_bound = 2, cap = -1;
  bool strict_ranks = false, braid = false;
  unsigned long long seed = 1;
  std::string mode = "betti";
};

void write_file(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

// prints according to --format and writes --out/--dot artifacts
void emit(const Options& o, const json& j, const std::string& dot, const std::string& text) {
  write_file(o.out, j.dump(2) + "\n");
  write_file(o.dot, dot);
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else if (o.format == "dot")
    std::cout << dot;
  else
    std::cout << text;
}

bool is_json(const std::string& path) { return fs::path(path).extension() == ".json"; }

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

JoinComplex load_complex(const std::string& path, bool braid) {
  if (is_json(path)) return join_complex_from_json(read_json(path));
  auto g = load_graph(path);
  if (!braid) return build_ri_raag(g);
  auto a = analyze_cactus(g);
  if (a.is_special) return build_ri_braid(a);
  // outside special cacti the exhaustive enumeration is used
  return build_ri_from_products(g, maximal_products_bruteforce(g));
}

SquareComplex load_square_complex(const std::string& path) {
  if (is_json(path)) return square_complex_from_json(read_json(path));
  return build_d2(load_graph(path));
}

std::string join_complex_text(const JoinComplex& jc) {
  std::ostringstream os;
  os << (jc.kind == Kind::Raag ? "raag" : "braid") << " intersection complex: " << jc.vertex_count()
     << " vertices, dimension " << jc.dimension() << ", betti1 " << betti1(jc) << "\n";
  for (auto& s : jc.simplices) {
    os << "  [";
    for (size_t i = 0; i < s.verts.size(); ++i) os << (i ? " " : "") << jc.vertex_ids[s.verts[i]];
    os << "] " << s.label.text << " (" << s.label.qi_type() << ")\n";
  }
  for (auto& n : jc.notes) os << "  note: " << n << "\n";
  return os.str();
}

int cmd_parse(const Options& o, const std::string& file) {
  auto g = load_graph(file);
  json j{{"vertices", g.names()}, {"edges", json::array()}};
  for (auto [u, v] : g.edges()) j["edges"].push_back({g.name(u), g.name(v)});
  std::ostringstream os;
  os << g.size() << " vertices, " << g.edge_count() << " edges";
  if (is_connected(g)) {
    auto a = analyze_cactus(g);
    j["cactus"] = a.is_cactus;
    j["special"] = a.is_special;
    j["cycles"] = a.cycle_names;
    j["type"] = to_string(a.type);
    j["redundant"] = a.redundant;
    if (auto k = recognize_O(a)) j["shape"] = "O_" + std::to_string(*k);
    if (auto n = recognize_Oprime(a)) j["shape"] = "O'_{4," + std::to_string(*n) + "}";
    os << ", cactus " << a.is_cactus << ", special " << a.is_special << ", type " << to_string(a.type);
  } else {
    os << ", disconnected";
  }
  os << "\n";
  emit(o, j, "", os.str());
  return kOk;
}

int cmd_d2(const Options& o, const std::string& file) {
  auto c = build_d2(load_graph(file));
  auto b = betti1(c);
  auto npc = npc_check(c);
  std::ostringstream os;
  os << c.vertices.size() << " vertices, " << c.edges.size() << " edges, " << c.squares.size() << " squares, betti1 "
     << b.betti1 << (b.connected ? "" : " (largest component)") << ", NPC " << (npc.pass ? "pass" : "fail") << "\n";
  emit(o, to_json(c), to_dot(c), os.str());
  return kOk;
}

int cmd_npc(const Options& o, const std::string& file) {
  auto c = load_square_complex(file);
  auto r = npc_check(c);
  json j{{"pass", r.pass}, {"violations", json::array()}};
  std::ostringstream os;
  os << "NPC " << (r.pass ? "pass" : "fail") << "\n";
  for (auto& v : r.violations) {
    j["violations"].push_back({{"vertex", c.vertices[v.vertex]}, {"kind", v.kind}});
    os << "  " << v.kind << " in link of " << c.vertices[v.vertex] << "\n";
  }
  emit(o, j, to_dot(c), os.str());
  return r.pass ? kOk : kNegative;
}

int cmd_hyperplanes(const Options& o, const std::string& file) {
  auto c = load_square_complex(file);
  auto hs = hyperplanes(c);
  json j = json::array();
  std::ostringstream os;
  os << hs.size() << " hyperplanes\n";
  for (auto& h : hs) {
    json ids = json::array();
    for (int e : h.edge_class) ids.push_back(c.edges[e].id);
    j.push_back({{"edges", ids},
                 {"self_intersecting", h.self_intersecting},
                 {"self_osculating", h.self_osculating},
                 {"one_sided", h.one_sided}});
    os << "  " << h.edge_class.size() << " edges" << (h.self_intersecting ? " self-intersecting" : "")
       << (h.self_osculating ? " self-osculating" : "") << (h.one_sided ? " one-sided" : "") << "\n";
  }
  emit(o, j, to_dot(c), os.str());
  return kOk;
}

int cmd_ri(const Options& o, const std::string& file) {
  auto jc = load_complex(file, o.braid);
  emit(o, to_json(jc), to_dot(jc), join_complex_text(jc));
  return kOk;
}

int cmd_components(const Options& o, const std::string& file) {
  auto jc = load_complex(file, o.braid);
  json j;
  std::ostringstream os;
  if (jc.kind == Kind::Braid) {
    auto r = components_and_switch(jc);
    j["components"] = json::array();
    for (size_t i = 0; i < r.components.size(); ++i) {
      auto& c = r.components[i];
      json ids = json::array();
      for (int v : c.vertices) ids.push_back(jc.vertex_ids[v]);
      j["components"].push_back({{"vertices", ids}, {"type", std::string(1, c.type)}, {"twin", c.twin}});
      os << "component " << i << " type " << c.type << " (" << c.vertices.size() << " vertices";
      if (c.twin >= 0) os << ", twin " << c.twin;
      os << ")\n";
    }
    json sw = json::object();
    for (int v = 0; v < static_cast<int>(r.switch_map.size()); ++v)
      if (r.switch_map[v] >= 0) sw[jc.vertex_ids[v]] = jc.vertex_ids[r.switch_map[v]];
    j["switch"] = sw;
  } else {
    j["components"] = json::array();
    for (auto& c : complex_components(jc)) {
      json ids = json::array();
      for (int v : c) ids.push_back(jc.vertex_ids[v]);
      j["components"].push_back({{"vertices", ids}});
    }
    os << j["components"].size() << " components\n";
  }
  emit(o, j, to_dot(jc), os.str());
  return kOk;
}

int cmd_classify(const Options& o, const std::vector<std::string>& pb2, const std::vector<std::string>& raag) {
  std::vector<GroupDescriptor> ds;
  for (auto& f : pb2) ds.push_back(make_descriptor(Family::Pb2, load_graph(f)));
  for (auto& f : raag) ds.push_back(make_descriptor(Family::Raag, load_graph(f)));
  if (ds.size() != 2) throw CLI::ValidationError("classify", "exactly two groups are required (--pb2/--raag)");
  auto v = classify_qi(ds[0], ds[1]);
  emit(o, to_json(v), "", report(v));
  return v.relation == Relation::NOT_QI ? kNegative : kOk;
}

json semiiso_json(const JoinComplex& a, const JoinComplex& b, const SemiIso& m) {
  json vm = json::object();
  for (int v = 0; v < a.vertex_count(); ++v) vm[a.vertex_ids[v]] = b.vertex_ids[m.vertex_bijection[v]];
  json sm = json::array();
  for (size_t i = 0; i < m.simplex_map.size(); ++i)
    sm.push_back({{"from", a.simplices[i].label.text},
                  {"to", b.simplices[m.simplex_map[i]].label.text},
                  {"flipped", static_cast<bool>(m.flips[i])}});
  return {{"semi_isomorphic", true}, {"vertices", vm}, {"simplices", sm}};
}

int cmd_semiiso(const Options& o, const std::string& f1, const std::string& f2) {
  auto a = load_complex(f1, o.braid), b = load_complex(f2, o.braid);
  SemiIsoOptions opt;
  opt.strict_ranks = o.strict_ranks;
  auto m = semi_isomorphic(a, b, opt);
  if (!m) {
    emit(o, json{{"semi_isomorphic", false}}, "", "not semi-isomorphic\n");
    return kNegative;
  }
  auto j = semiiso_json(a, b, *m);
  std::ostringstream os;
  os << "semi-isomorphic\n";
  for (auto& [k, v] : j["vertices"].items()) os << "  " << k << " -> " << v.get<std::string>() << "\n";
  emit(o, j, "", os.str());
  return kOk;
}

std::string ball_text(const DevelopmentBall& b) {
  auto rep = check_local_pattern(b);
  std::ostringstream os;
  int boundary = static_cast<int>(
      std::count_if(b.vertices.begin(), b.vertices.end(), [](const DevVertex& v) { return v.boundary; }));
  os << b.vertices.size() << " vertices (" << boundary << " boundary), " << b.simplices.size()
     << " higher simplices, " << b.elements << " group elements, betti1 " << betti1(b) << "\n";
  os << "local pattern: " << (rep.pass ? "pass" : "fail") << ", " << rep.checked << " complete vertices, "
     << rep.cut_vertices << " cut vertices, alternation violations " << rep.alternation_violations << "\n";
  for (auto& v : rep.violations) os << "  " << v << "\n";
  return os.str();
}

long ball_cap(const Options& o) { return o.cap > 0 ? o.cap : 200000; }

int cmd_ball(const Options& o, const std::string& file) {
  auto b = ball_raag(load_graph(file), o.radius, o.word_bound, ball_cap(o));
  emit(o, to_json(b), to_dot(b), ball_text(b));
  return check_local_pattern(b).pass ? kOk : kNegative;
}

int cmd_develop(const Options& o, const std::string& file) {
  auto jc = load_complex(file, true);
  auto b = development_gog(jc, o.radius, o.word_bound, ball_cap(o));
  emit(o, to_json(b), to_dot(b), ball_text(b));
  return kOk;
}

int cmd_joinlen(const Options& o, const std::string& file, const std::string& word) {
  Raag r(load_graph(file));
  auto nf = r.normal_form(r.parse(word));
  auto res = r.join_length(nf);
  json fac = json::array();
  std::ostringstream os;
  os << res.length << "\n";
  for (auto& [w, j] : res.factorization) {
    std::string join = format_set(r.graph(), j.side_a) + "*" + format_set(r.graph(), j.side_b);
    fac.push_back({{"word", r.format(w)}, {"join", join}});
    os << "  " << r.format(w) << "  in  " << join << "\n";
  }
  emit(o, json{{"normal_form", r.format(nf)}, {"join_length", res.length}, {"factorization", fac}}, "", os.str());
  return kOk;
}

int cmd_validate(const Options& o, const std::string& file) {
  auto jc = load_complex(file, o.braid);
  auto vs = validate_cjoin(jc);
  json j = json::array();
  std::ostringstream os;
  bool ok = true;
  for (auto& v : vs) {
    j.push_back({{"property", v.property}, {"detail", v.detail}, {"warning", v.warning}});
    os << (v.warning ? "warning " : "violation ") << v.property << ": " << v.detail << "\n";
    ok = ok && v.warning;
  }
  if (vs.empty()) os << "no violations\n";
  emit(o, json{{"valid", ok}, {"violations", j}}, "", os.str());
  return ok ? kOk : kInvalid;
}

struct SweepItem {
  std::string name;
  std::string family;
  SimplicialGraph graph;
};

std::vector<SweepItem> sweep_inputs(const std::string& dir) {
  std::vector<SweepItem> items;
  if (fs::exists(fs::path(dir) / "manifest.json")) {
    for (auto& e : load_corpus(dir)) items.push_back({e.file, e.family, e.graph});
    return items;
  }
  std::vector<fs::path> files;
  for (auto& p : fs::directory_iterator(dir))
    if (p.path().extension() == ".graph") files.push_back(p.path());
  std::sort(files.begin(), files.end());
  for (auto& p : files) items.push_back({p.filename().string(), "", load_graph(p.string())});
  return items;
}

int cmd_sweep(const Options& o, const std::string& dir, bool pb2) {
  if (!fs::is_directory(dir)) throw ParseError(dir + " is not a directory");
  auto items = sweep_inputs(dir);
  json rows = json::array();
  std::ostringstream os;
  if (o.mode == "betti") {
    int m = 0, s = 0;
    for (auto& it : items) {
      json row{{"graph", it.name}};
      try {
        if (!is_connected(it.graph)) throw std::invalid_argument("disconnected");
        auto a = analyze_cactus(it.graph);
        row["special"] = a.is_special;
        row["type"] = to_string(a.type);
        if (a.is_special && a.type != CactusType::NotApplicable) {
          auto jc = build_ri_braid(a);
          int ri = betti1(jc);
          int d2 = betti1(build_d2(a.pruned_spine())).betti1;
          row["betti1_ri"] = ri;
          row["betti1_spine_d2"] = d2;
          row["status"] = ri == d2 ? "agree" : "disagree";
          (a.type == CactusType::M ? m : s)++;
        } else {
          row["status"] = "not-applicable";
        }
      } catch (const std::exception& e) {
        row["status"] = "error";
        row["error"] = e.what();
      }
      os << it.name << "  " << row["status"].get<std::string>() << "\n";
      rows.push_back(row);
    }
    os << "type M: " << m << ", type S: " << s << "\n";
    emit(o, json{{"mode", "betti"}, {"rows", rows}, {"census", {{"M", m}, {"S", s}}}}, "", os.str());
    return kOk;
  }
  if (o.mode == "semiiso" || o.mode == "classify") {
    std::vector<JoinComplex> cx(items.size());
    std::vector<std::string> errors(items.size());
    if (o.mode == "semiiso")
      for (size_t i = 0; i < items.size(); ++i) try {
          cx[i] = build_ri_raag(items[i].graph);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
    for (size_t i = 0; i < items.size(); ++i) {
      json row{{"graph", items[i].name}, {"cells", json::array()}};
      os << items[i].name << ":";
      for (size_t k = 0; k < items.size(); ++k) {
        json cell;
        try {
          if (!errors[i].empty() || !errors[k].empty()) throw std::runtime_error(errors[i] + errors[k]);
          if (o.mode == "semiiso") {
            bool si = semi_isomorphic(cx[i], cx[k]).has_value();
            bool iso = graph_isomorphic(items[i].graph, items[k].graph).has_value();
            cell = {{"semiiso", si}, {"isomorphic", iso}};
            os << " " << (si ? "1" : "0") << (si == iso ? "" : "!");
          } else {
            auto f = pb2 ? Family::Pb2 : Family::Raag;
            auto v = classify_qi(make_descriptor(f, items[i].graph), make_descriptor(f, items[k].graph));
            cell = to_json(v);
            os << " " << to_string(v.relation);
          }
        } catch (const std::exception& e) {
          cell = {{"error", e.what()}};
          os << " ERR";
        }
        row["cells"].push_back(cell);
      }
      os << "\n";
      rows.push_back(row);
    }
    emit(o, json{{"mode", o.mode}, {"rows", rows}}, "", os.str());
    return kOk;
  }
  if (o.mode == "words") {
    std::mt19937_64 rng(o.seed);
    for (auto& it : items) {
      json row{{"graph", it.name}};
      try {
        Raag r(it.graph);
        int bad = 0;
        std::uniform_int_distribution<int> len(0, 12), gen(0, std::max(0, it.graph.size() - 1)), sign(0, 1);
        for (int t = 0; t < 1000 && it.graph.size() > 0; ++t) {
          Word w;
          for (int i = len(rng); i > 0; --i) w.push_back({gen(rng), sign(rng) ? 1 : -1});
          auto nf = r.normal_form(w);
          if (!(r.normal_form(nf.word) == nf) || !(r.inverse(r.inverse(nf)) == nf) || !r.multiply(nf, r.inverse(nf)).empty())
            ++bad;
        }
        row["mismatches"] = bad;
        os << it.name << "  " << bad << " mismatches\n";
      } catch (const std::exception& e) {
        row["error"] = e.what();
        os << it.name << "  error\n";
      }
      rows.push_back(row);
    }
    emit(o, json{{"mode", "words"}, {"seed", o.seed}, {"rows", rows}}, "", os.str());
    return kOk;
  }
  throw CLI::ValidationError("--mode", "unknown sweep mode " + o.mode);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"square complexes, intersection complexes and quasi-isometry screens for graph braid groups and RAAGs"};
  app.require_subcommand(1);
  Options o;
  std::string f1, f2, word, dir;
  std::vector<std::string> pb2_files, raag_files;
  bool pb2_flag = false;

  auto common = [&](CLI::App* s) {
    s->add_option("--out", o.out, "write the JSON artifact here");
    s->add_option("--dot", o.dot, "write the DOT artifact here");
    s->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"json", "dot", "text"}));
  };
  auto kind = [&](CLI::App* s) {
    auto b = s->add_flag("--braid", o.braid, "braid kind: input graph is a cactus");
    s->add_flag("--raag", "raag kind (default)")->excludes(b);
  };

  auto* parse = app.add_subcommand("parse", "check a graph file and report its cactus structure");
  parse->add_option("graph", f1)->required();
  common(parse);
  auto* d2 = app.add_subcommand("d2", "discrete 2-point configuration complex of a graph");
  d2->add_option("graph", f1)->required();
  common(d2);
  auto* npc = app.add_subcommand("npc", "Gromov link condition (graph or square complex JSON)");
  npc->add_option("input", f1)->required();
  common(npc);
  auto* hyp = app.add_subcommand("hyperplanes", "hyperplanes and their pathologies");
  hyp->add_option("input", f1)->required();
  common(hyp);
  auto* ri = app.add_subcommand("ri", "reduced intersection complex");
  ri->add_option("input", f1)->required();
  common(ri);
  kind(ri);
  auto* comp = app.add_subcommand("components", "components of the intersection complex and the switch map");
  comp->add_option("input", f1)->required();
  common(comp);
  kind(comp);
  auto* cls = app.add_subcommand("classify", "quasi-isometry verdict for two groups");
  cls->add_option("--pb2", pb2_files, "graph whose pure 2-braid group is compared")->expected(1, 2);
  cls->add_option("--raag", raag_files, "defining graph of a RAAG")->expected(1, 2);
  common(cls);
  auto* si = app.add_subcommand("semiiso", "semi-isomorphism of two intersection complexes");
  si->add_option("first", f1)->required();
  si->add_option("second", f2)->required();
  si->add_flag("--strict-ranks", o.strict_ranks, "require equal free-factor ranks");
  common(si);
  kind(si);
  auto* ball = app.add_subcommand("ball", "truncated development ball of a RAAG");
  ball->add_option("graph", f1)->required();
  ball->add_option("--radius", o.radius, "join-length radius")->check(CLI::NonNegativeNumber);
  ball->add_option("--word-bound", o.word_bound, "word length bound")->check(CLI::NonNegativeNumber);
  ball->add_option("--cap", o.cap, "element cap");
  common(ball);
  auto* dev = app.add_subcommand("develop", "truncated Bass-Serre development of a 1-dimensional braid complex");
  dev->add_option("input", f1)->required();
  dev->add_option("--radius,--depth", o.radius, "path depth")->check(CLI::NonNegativeNumber);
  dev->add_option("--word-bound", o.word_bound, "coset representative length bound")->check(CLI::NonNegativeNumber);
  dev->add_option("--cap", o.cap, "vertex cap");
  common(dev);
  auto* jl = app.add_subcommand("joinlen", "join length of a word");
  jl->add_option("graph", f1)->required();
  jl->add_option("word", word, "letters separated by spaces, inverses as x^-1")->required();
  common(jl);
  auto* val = app.add_subcommand("validate", "check the intersection complex axioms");
  val->add_option("input", f1)->required();
  common(val);
  kind(val);
  auto* sw = app.add_subcommand("sweep", "batch run over a directory of graphs");
  sw->add_option("dir", dir)->required();
  sw->add_option("--mode", o.mode)->check(CLI::IsMember({"betti", "semiiso", "classify", "words"}));
  sw->add_flag("--pb2", pb2_flag, "classify mode: treat graphs as braid graphs");
  sw->add_option("--seed", o.seed, "seed for the words mode");
  sw->add_option("--cap", o.cap, "enumeration cap");
  common(sw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (o.cap > 0) {
      std::string v = std::to_string(o.cap);
      setenv("SQCI_CAP", v.c_str(), 1);
    }
    if (*parse) return cmd_parse(o, f1);
    if (*d2) return cmd_d2(o, f1);
    if (*npc) return cmd_npc(o, f1);
    if (*hyp) return cmd_hyperplanes(o, f1);
    if (*ri) return cmd_ri(o, f1);
    if (*comp) return cmd_components(o, f1);
    if (*cls) return cmd_classify(o, pb2_files, raag_files);
    if (*si) return cmd_semiiso(o, f1, f2);
    if (*ball) return cmd_ball(o, f1);
    if (*dev) return cmd_develop(o, f1);
    if (*jl) return cmd_joinlen(o, f1, word);
    if (*val) return cmd_validate(o, f1);
    if (*sw) return cmd_sweep(o, dir, pb2_flag);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
