// Runs the tropcomm binary and checks output and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef TROPCOMM_CLI
#error "TROPCOMM_CLI must name the command-line binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Shell-level invocation; `args` is pasted verbatim.
Run run(const std::string& args, const std::string& redirect = "2>/dev/null") {
  const std::string cmd = std::string("'") + TROPCOMM_CLI + "' " + args + " " + redirect;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

const std::string kExample = "'0.166 0.861; -0.62 -0.76'";

}  // namespace

TEST_CASE("check") {
  Run r = run("check " + kExample + " '0 -inf; -inf 0'");
  CHECK(r.code == 0);
  CHECK(has(r.out, "A (x) B = 0.166 0.861; -0.62 -0.76"));
  CHECK(has(r.out, "\nCOMMUTE\n"));

  r = run("check '0 1; 2 -5' '0 100; -inf 0'");
  CHECK(r.code == 1);
  CHECK(has(r.out, "DO NOT COMMUTE"));

  r = run("check '0.1 x; 2 3' '0 0; 0 0'", "2>&1");
  CHECK(r.code == 2);
  CHECK(has(r.out, "offset 4"));

  CHECK(run("check '0 -inf; 0 0' '0 0; 0 0'").code == 2);
  CHECK(run("check '1 2 3' '0 0; 0 0'").code == 2);
  CHECK(run("check " + kExample + " '0 -inf; -inf 0' --format json").out.find(
            "\"commute\": true") != std::string::npos);
}

TEST_CASE("matrix sources") {
  const std::string path = "cli_matrix.txt";
  {
    std::ofstream f(path);
    f << "0.166 0.861\n-0.62 -0.76\n";
  }
  CHECK(run("check " + path + " '0 -inf; -inf 0'").code == 0);
  Run r = run("basis - --grid-radius 3", "< " + path + " 2>/dev/null");
  CHECK(r.code == 0);
  CHECK(has(r.out, "case: AboveDiagonal"));
  std::remove(path.c_str());
  CHECK(run("basis '[[0.166, 0.861], [-0.62, -0.76]]' --grid-radius 3").code == 0);
}

TEST_CASE("basis") {
  Run r = run("basis " + kExample);
  CHECK(r.code == 0);
  CHECK(has(r.out, "seed: 1"));
  CHECK(has(r.out, "alpha1: -0.14"));
  CHECK(has(r.out, "alpha2: -1.621"));
  CHECK(has(r.out, "beta2 = (0, -0.14, -inf, 0)"));
  CHECK(has(r.out, "beta3 = (0, -inf, -1.621, 0)"));
  CHECK(has(r.out, "beta4 = (0, 0.695, -0.786, -inf)"));
  CHECK(has(r.out, "verdict: PASS"));

  r = run("basis '0 -1; -1 0' --grid-radius 3");
  CHECK(r.code == 0);
  CHECK(has(r.out, "case: EqualDiagonal"));
  CHECK(has(r.out, "beta6 ="));

  r = run("basis '1 2; 3 1.0000000001' --grid-radius 3");
  CHECK(r.code == 0);
  CHECK(has(r.out, "case: EqualDiagonal"));
  CHECK(has(r.out, "warning:"));

  r = run("basis '1 2; 0 -1' --mutate-basis");
  CHECK(r.code == 1);
  CHECK(has(r.out, "witness (-4, -3, -5, -inf)"));

  r = run("basis " + kExample + " --format json --seed 9");
  CHECK(r.code == 0);
  CHECK(has(r.out, "\"seed\": 9"));
  CHECK(has(r.out, "\"case\": \"AboveDiagonal\""));

  CHECK(run("basis '0 -inf; 1 2'").code == 2);
  CHECK(run("basis " + kExample + " --tol -1").code == 2);
  CHECK(run("basis " + kExample + " --grid-radius 0").code == 2);
  CHECK(run("basis " + kExample + " --format svg").code == 2);
}

TEST_CASE("bary") {
  Run r = run("bary " + kExample + " --format tsv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("label\tphi1\tphi2\tphi3\tx\ty\nbeta1\t0\t0\t1\t", 0) == 0);
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 5);

  r = run("bary " + kExample, "2>&1 >/dev/null");
  CHECK(has(r.out, "omega: phi = (0.420577341, 0.0956435624, 0.483779096)"));
  CHECK(has(r.out, "(concurrent)"));

  const std::string svg = "cli_plot.svg";
  r = run("bary " + kExample + " --out " + svg);
  CHECK(r.code == 0);
  CHECK(has(r.out, "concurrency residual:"));
  std::ifstream in(svg);
  const std::string content((std::istreambuf_iterator<char>(in)), {});
  CHECK(has(content, "</svg>"));
  std::remove(svg.c_str());

  r = run("bary '1 2; 3 1'", "2>&1");
  CHECK(r.code == 3);
  CHECK(has(r.out, "projection undefined for equal diagonal"));
  CHECK(run("bary " + kExample + " --out /nonexistent/dir/p.svg").code == 2);
}

TEST_CASE("verify") {
  Run r = run("verify --grid-radius 3");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("seed: 1\n", 0) == 0);
  CHECK(has(r.out, "verdict: PASS"));
  CHECK(has(r.out, "alpha2 resolution:"));

  for (int seed = 2; seed <= 4; ++seed) {
    CHECK(run("verify --grid-radius 3 --seed " + std::to_string(seed)).code == 0);
  }

  r = run("verify --grid-radius 3 --mutate-basis");
  CHECK(r.code == 1);
  CHECK(has(r.out, "witness"));
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("check '0 0; 0 0'").code == 2);
  CHECK(run("--help", "> /dev/null").code == 0);
}
