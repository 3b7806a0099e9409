#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run sqci(const std::string& args) {
  std::string cmd = std::string(SQCI_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const std::string& rel) { return std::string(SQCI_CORPUS_DIR) + "/" + rel; }

fs::path scratch(const std::string& name) {
  auto d = fs::temp_directory_path() / ("sqci_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("ri writes JSON and DOT artifacts") {
  auto js = scratch("o3.json"), dot = scratch("o3.dot");
  auto r = sqci("ri --braid " + corpus("cacti/o3.graph") + " --out " + js.string() + " --dot " + dot.string());
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(slurp(js));
  CHECK(j["vertices"].size() == 6);
  CHECK(slurp(dot).find("graph") != std::string::npos);
  // the artifact is accepted back as input
  auto back = sqci("validate " + js.string() + " --format text");
  CHECK(back.code == 0);
  CHECK(back.out.find("no violations") != std::string::npos);
}

TEST_CASE("classify exit codes") {
  auto r = sqci("classify --pb2 " + corpus("cacti/o4prime.graph") + " --raag " + corpus("raags/p4.graph") +
                " --format json");
  CHECK(r.code == 3);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["relation"] == "NOT_QI");
  r = sqci("classify --raag " + corpus("raags/p4.graph") + " " + corpus("raags/p6.graph") + " --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["relation"] == "QI");
  // three groups is a usage error
  r = sqci("classify --raag " + corpus("raags/p4.graph") + " " + corpus("raags/p6.graph") + " --pb2 " +
           corpus("cacti/o3.graph"));
  CHECK(r.code == 1);
}

TEST_CASE("joinlen") {
  auto r = sqci("joinlen " + corpus("raags/p4.graph") + " \"a d\" --format text");
  CHECK(r.code == 0);
  CHECK(r.out.find("2") != std::string::npos);
  r = sqci("joinlen " + corpus("raags/p4.graph") + " \"a q\"");
  CHECK(r.code == 2);
}

TEST_CASE("usage and input errors") {
  CHECK(sqci("frobnicate").code == 1);
  CHECK(sqci("ri " + corpus("raags/p4.graph") + " --no-such-flag").code == 1);
  auto bad = scratch("bad.graph");
  std::ofstream(bad) << "v a\ne a a\n";
  CHECK(sqci("parse " + bad.string()).code == 2);
  CHECK(sqci("ball " + corpus("raags/p4.graph") + " --radius 3 --word-bound 6 --cap 100").code == 2);
}

TEST_CASE("d2, npc and hyperplanes") {
  auto r = sqci("d2 " + corpus("misc/t3.graph") + " --format text");
  CHECK(r.code == 0);
  CHECK(r.out.find("12") != std::string::npos);
  CHECK(sqci("npc " + corpus("misc/k4.graph")).code == 0);
  CHECK(sqci("hyperplanes " + corpus("misc/k3.graph")).code == 0);
}

TEST_CASE("semiiso, ball and develop") {
  CHECK(sqci("semiiso " + corpus("finite_out/c5.graph") + " " + corpus("finite_out/c5_relabel.graph")).code == 0);
  CHECK(sqci("semiiso " + corpus("finite_out/c5.graph") + " " + corpus("finite_out/c6.graph")).code == 3);
  auto r = sqci("ball " + corpus("raags/p4.graph") + " --radius 1 --word-bound 2 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["vertices"].size() == 18);
  CHECK(sqci("develop " + corpus("cacti/o3.graph") + " --depth 1 --word-bound 1").code == 0);
  CHECK(sqci("develop " + corpus("cacti/o4prime.graph") + " --depth 1 --word-bound 1").code == 2);
}

TEST_CASE("sweep") {
  auto empty = scratch("empty");
  fs::create_directories(empty);
  auto r = sqci("sweep " + empty.string() + " --mode betti");
  CHECK(r.code == 0);
  auto r2 = sqci("sweep " + corpus("finite_out") + " --mode semiiso --format json");
  CHECK(r2.code == 0);
  nlohmann::json parsed;
  CHECK_NOTHROW(parsed = nlohmann::json::parse(r2.out));
}
