// Drives the fanocheck binary end to end. The binary path arrives as the
// first command-line argument (wired up by CTest).

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;

struct RunResult {
  int status = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string out_file = "cli_test_output.tmp";
  std::string cmd = g_binary + " " + args + " > " + out_file + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.status = WEXITSTATUS(rc);
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

}  // namespace

TEST_CASE("verify-claims certifies a small range with status 0") {
  auto r = run("verify-claims --M 5..7");
  CHECK(r.status == 0);
  CHECK(r.output.find("OK") != std::string::npos);
}

TEST_CASE("a corrupted bound turns the status to 1 and reports the violation") {
  auto r = run("verify-claims --M 6..6 --corrupt prop7=3.01");
  CHECK(r.status == 1);
  CHECK(r.output.find("FAILED") != std::string::npos);
}

TEST_CASE("structured reports parse back line by line") {
  auto r = run("verify-claims --M 5..6 --format structured");
  CHECK(r.status == 0);
  std::istringstream lines(r.output);
  std::string line;
  int records = 0;
  bool saw_header = false, saw_overall = false;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);  // throws on malformed records
    ++records;
    if (j.contains("schema")) {
      saw_header = true;
      CHECK(j["schema"] == "fanocheck-report-v1");
    }
    if (j.contains("overall")) saw_overall = true;
  }
  CHECK(saw_header);
  CHECK(saw_overall);
  CHECK(records > 10);
}

TEST_CASE("identical configurations produce byte-identical structured reports") {
  auto a = run("verify-claims --M 5..6 --format structured");
  auto b = run("verify-claims --M 5..6 --format structured");
  CHECK(a.output == b.output);
  // the worker-pool size must not change the bytes either
  auto c = run("verify-claims --M 5..6 --format structured --threads 4");
  CHECK(a.output == c.output);
}

TEST_CASE("check-regularity accepts a random germ and emits it") {
  auto r = run("check-regularity --random 5 3 1 --samples 2 --emit cli_germ.tmp");
  CHECK(r.status == 0);
  CHECK(r.output.find("condition (i)") != std::string::npos);
  // the emitted germ reloads and passes again with sampling disabled
  auto r2 = run("check-regularity cli_germ.tmp --samples 0");
  CHECK(r2.status == 0);
  CHECK(r2.output.find("skipped") != std::string::npos);
}

TEST_CASE("an engineered irregular germ file fails with a witness") {
  // q3 = z1^3 makes the cone a triple hyperplane
  std::ofstream g("cli_bad_germ.tmp");
  g << "5 3\n";
  g << "1 3 0 0 0 0\n";
  g << "--\n";
  g << "1 0 4 0 0 0\n1 0 0 4 0 0\n1 0 0 0 4 0\n1 0 0 0 0 4\n1 4 0 0 0 0\n";
  g << "--\n";
  g << "1 0 5 0 0 0\n1 0 0 5 0 0\n1 0 0 0 5 0\n1 0 0 0 0 5\n1 5 0 0 0 0\n";
  g.close();
  auto r = run("check-regularity cli_bad_germ.tmp --samples 0");
  CHECK(r.status == 1);
  CHECK(r.output.find("fail") != std::string::npos);
}

TEST_CASE("germ parse errors exit with status 2 and a line number") {
  std::ofstream g("cli_parse_error.tmp");
  g << "5 3\nnot a polynomial line\n";
  g.close();
  auto r = run("check-regularity cli_parse_error.tmp");
  CHECK(r.status == 2);
  CHECK(r.output.find("line") != std::string::npos);
}

TEST_CASE("graph evaluation prints path counts and the threshold") {
  std::ofstream g("cli_graph.tmp");
  g << "3 1\n2 2 1 1\n1 1 1\n1 0\n2 1\n3 2\n3 0\n";
  g.close();
  auto r = run("graph cli_graph.tmp --mu 3 --M 6");
  CHECK(r.status == 0);
  CHECK(r.output.find("p =") != std::string::npos);
  CHECK(r.output.find("threshold per unit degree") != std::string::npos);
  CHECK(r.output.find("estimate (2) holds") != std::string::npos);
  CHECK(r.output.find("removed") != std::string::npos);

  std::ofstream nu("cli_nu.tmp");
  nu << "1\n3 1 1 1\n";  // n, then nu_0..nu_3
  nu.close();
  std::ofstream m("cli_m.tmp");
  m << "1\n5 1\n";  // degY, then m0, m_1..m_L
  m.close();
  auto rv = run("graph cli_graph.tmp --mu 3 --M 6 --nu cli_nu.tmp --m cli_m.tmp");
  CHECK(rv.status == 0);
  CHECK(rv.output.find("Noether-Fano") != std::string::npos);
  CHECK(rv.output.find("estimate (1)") != std::string::npos);
}

TEST_CASE("cyclic graph files exit with status 2") {
  std::ofstream g("cli_cycle.tmp");
  g << "2 0\n2 1 1\n1 1\n0 1\n";
  g.close();
  auto r = run("graph cli_cycle.tmp --mu 3 --M 6");
  CHECK(r.status == 2);
}

TEST_CASE("involution reports the transform and untwisting") {
  auto r = run("involution --M 5 --n 4 --nu0 5");
  CHECK(r.status == 0);
  CHECK(r.output.find("1H - 0E") != std::string::npos);
  CHECK(r.output.find("no longer maximal") != std::string::npos);
  CHECK(r.output.find("5/4") != std::string::npos);

  auto r2 = run("involution --M 5 --n 4 --nu0 3");
  CHECK(r2.status == 0);
  CHECK(r2.output.find("not maximal") != std::string::npos);

  for (int M : {4, 9, 40}) {
    auto rs = run("involution --M " + std::to_string(M));
    CHECK(rs.status == 0);
    CHECK(rs.output.find("tau^2 = id: verified") != std::string::npos);
  }
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run("").status == 2);
  CHECK(run("no-such-command").status == 2);
  CHECK(run("graph").status == 2);  // missing required options
}

TEST_CASE("user claim files are verified alongside the ledger") {
  std::ofstream c("cli_claim.tmp");
  c << "s t\n";
  c << "N:\n0 0 4\n0 1 4\n1 1 1\n";
  c << "D:\n0 0 1\n0 1 2\n";
  c << "bound: 3\nstrict: no\n";
  c.close();
  auto r = run("verify-claims --M 5..5 --claims cli_claim.tmp");
  CHECK(r.status == 0);
  CHECK(r.output.find("ratio min 3") != std::string::npos);
}

int main(int argc, char** argv) {
  if (argc > 1) g_binary = argv[1];
  doctest::Context context;
  context.applyCommandLine(argc > 1 ? argc - 1 : argc, argv);
  return context.run();
}
