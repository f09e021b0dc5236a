#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "httplib.h"

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stderr discarded.
Run cli(const std::string& args) {
  std::string cmd = std::string(ARGFACETS_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string data(const std::string& name) { return std::string(ARGFACETS_DATA_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("argfacets_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, SolveEx1) {
  auto r = cli("solve " + data("EX1.apx") + " --semantics stab");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"{b,p,s}", "{b,s,t}", "{m,p,w}",
                                                      "3 extensions (exhausted)"}));
}

TEST(Cli, SolveRespectsMaxModels) {
  auto r = cli("solve " + data("EX1.apx") + " --semantics stab --max-models 1");
  EXPECT_EQ(r.code, 0);
  auto l = lines(r.out);
  ASSERT_EQ(l.size(), 2U);
  EXPECT_EQ(l[1], "1 extension (not exhausted)");
}

TEST(Cli, SolveFx) {
  auto r = cli("solve " + data("FX.apx") + " --semantics stab");
  EXPECT_EQ(lines(r.out).back(), "2 extensions (exhausted)");
}

TEST(Cli, Facets) {
  auto r = cli("facets " + data("EX1.apx") + " --semantics stab");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"cred: {b,m,p,s,t,w}", "skep: {}",
                                                      "facets: {b,m,p,s,t,w}", "count: 6"}));
  EXPECT_EQ(lines(cli("facets " + data("EX1.apx") + " --semantics stab --approve s").out)[2],
            "facets: {p,t}");
  EXPECT_EQ(lines(cli("facets " + data("EX1.apx") + " --semantics stab --approve w").out)[2],
            "facets: {}");
}

TEST(Cli, FacetsInputErrors) {
  EXPECT_EQ(cli("facets " + data("EX1.apx") + " --semantics stab --approve zz").code, 2);
  EXPECT_EQ(cli("facets " + data("EX1.apx") + " --semantics stab --approve s --disapprove s").code, 2);
}

TEST(Cli, Significance) {
  auto r = cli("significance " + data("EX1.apx") + " --semantics stab");
  EXPECT_EQ(r.code, 0);
  auto l = lines(r.out);
  ASSERT_EQ(l.size(), 12U);
  EXPECT_EQ(l.front(), "w\t0\t1");
  EXPECT_EQ(l[6], "-w\t2\t2/3");
  EXPECT_EQ(l.back(), "p\t4\t1/3");
  EXPECT_EQ(lines(cli("significance " + data("FX.apx") + " --semantics adm").out).size(), 8U);
}

TEST(Cli, SignificanceEmptyWithoutExtensions) {
  auto dir = scratch("sig");
  std::ofstream(dir / "loop.apx") << "arg(a). att(a,a).";
  auto r = cli("significance " + (dir / "loop.apx").string() + " --semantics stab");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("").code, 1);
  EXPECT_EQ(cli("solve " + data("EX1.apx")).code, 1);
  EXPECT_EQ(cli("solve " + data("EX1.apx") + " --semantics grounded").code, 1);
  EXPECT_EQ(cli("solve /nonexistent.apx --semantics stab").code, 2);
  auto dir = scratch("bad");
  std::ofstream(dir / "bad.apx") << "att(a,b).";
  EXPECT_EQ(cli("solve " + (dir / "bad.apx").string() + " --semantics stab").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, GenStdTranslationManifest) {
  auto dir = scratch("gen");
  auto out = (dir / "FX.apx").string();
  auto manifest = (dir / "manifest.txt").string();
  auto r = cli("gen std-translation --dimacs " + data("fx.cnf") + " --out " + out + " --manifest " + manifest);
  EXPECT_EQ(r.code, 0);
  std::ifstream m(manifest);
  std::string line;
  std::getline(m, line);
  EXPECT_NE(line.find("expected_facets(adm)=4"), std::string::npos) << line;
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  std::ifstream g(data("FX.apx"));
  std::stringstream gs;
  gs << g.rdbuf();
  EXPECT_EQ(ss.str(), gs.str());
}

TEST(Cli, GenRandomIsDeterministic) {
  auto a = cli("gen random --n 6 --p 0.25 --seed 7");
  auto b = cli("gen random --n 6 --p 0.25 --seed 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, cli("gen random --n 6 --p 0.25 --seed 8").out);
}

TEST(Cli, GenCopiesAndOthers) {
  auto r = cli("gen copies --af " + data("EX1.apx") + " --arg w --n 3");
  EXPECT_EQ(r.code, 0);
  std::size_t args = 0;
  for (const auto& l : lines(r.out)) args += l.rfind("arg(", 0) == 0;
  EXPECT_EQ(args, 9U);
  EXPECT_EQ(cli("gen duplicate --af " + data("EX1.apx") + " --arg s").code, 0);
  EXPECT_EQ(cli("gen satunsat --phi " + data("fx.cnf") + " --psi " + data("fxx.cnf")).code, 0);
  EXPECT_EQ(cli("gen qbf --qdimacs " + data("qbf_true.qdimacs")).code, 0);
  EXPECT_EQ(cli("gen copies --af " + data("EX1.apx") + " --arg zz --n 2").code, 2);
  EXPECT_EQ(cli("gen random --n 0").code, 2);
  EXPECT_EQ(cli("gen std-translation").code, 2);
}

TEST(Cli, BenchSmallCorpus) {
  auto dir = scratch("bench");
  for (auto n : {"EX1.apx", "FX.apx", "FXX.apx"}) std::filesystem::copy_file(data(n), dir / n);
  auto r = cli("bench " + dir.string() + " --semantics stab");
  EXPECT_EQ(r.code, 0);
  auto l = lines(r.out);
  ASSERT_EQ(l.size(), 4U);
  EXPECT_EQ(l[0], "instance,semantics,n_args,n_attacks,n_extensions,exhausted,n_facets,t_enum_ms,t_facets_ms,status");
  std::vector<std::string> facet_counts;
  for (std::size_t i = 1; i < l.size(); ++i) {
    std::vector<std::string> cols;
    std::stringstream ss(l[i]);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    ASSERT_EQ(cols.size(), 10U);
    EXPECT_EQ(cols[9], "ok");
    facet_counts.push_back(cols[6]);
  }
  EXPECT_EQ(facet_counts, (std::vector<std::string>{"6", "4", "4"}));
}

TEST(Cli, BenchEmptyDirectory) {
  auto r = cli("bench " + scratch("empty").string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 1U);
}

TEST(Cli, ServePrintsPortAndStopsOnInterrupt) {
  std::string cmd = std::string(ARGFACETS_CLI) + " serve --port 0 --example-dir " +
                    ARGFACETS_DATA_DIR + " 2>/dev/null & echo $!";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_TRUE(pipe);
  char buf[256] = {};
  ASSERT_TRUE(fgets(buf, sizeof buf, pipe));
  int pid = std::stoi(buf);
  ASSERT_TRUE(fgets(buf, sizeof buf, pipe));
  std::string banner = buf;
  ASSERT_NE(banner.find("listening on http://127.0.0.1:"), std::string::npos) << banner;
  int port = std::stoi(banner.substr(banner.rfind(':') + 1));
  httplib::Client client("127.0.0.1", port);
  auto health = client.Get("/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->body, R"({"status":"ok"})");
  auto list = client.Get("/frameworks");
  ASSERT_TRUE(list);
  EXPECT_NE(list->body.find("EX1.apx"), std::string::npos);
  kill(pid, SIGINT);
  pclose(pipe);
  // Gone, or a zombie waiting for a reaper.
  auto alive = [pid] {
    std::ifstream stat("/proc/" + std::to_string(pid) + "/stat");
    std::string ignore, state;
    if (!(stat >> ignore >> ignore >> state)) return false;
    return state != "Z";
  };
  for (int i = 0; i < 100 && alive(); ++i) std::this_thread::sleep_for(std::chrono::milliseconds(20));
  EXPECT_FALSE(alive());
}
