// SPDX-License-Identifier: Apache-2.0

#include "oppm/cli.hpp"

#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "oppm");
  std::ostringstream out, err;
  const int code = oppm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Workdir {
 public:
  Workdir() : dir_(fs::temp_directory_path() / ("oppm_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Workdir() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) const {
    const auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("match-string on the running example") {
  Workdir w;
  const auto p = w.write("p.txt", "22 41 35 37\n");
  const auto t = w.write("t.txt", "63 18 48 29 42 56 25 51\n");
  auto r = run({"match-string", p, t});
  CHECK(r.code == 0);
  CHECK(r.out == "5\n");

  r = run({"match-string", p, t, "--stats"});
  CHECK(r.out == "5\ngoto=8 fail=5\n");

  r = run({"match-string", p, t, "--oracle"});
  CHECK(r.out == "5\n");
  CHECK(run({"match-string", p, t, "--oracle", "--stats"}).code == 1);
}

TEST_CASE("match-tree") {
  Workdir w;
  const auto p = w.write("p.txt", "1 2\n");
  const auto tree = w.write("tree.txt", "tree 5\n0 1 10\n1 2 20\n1 3 5\n2 4 30\n");
  CHECK(run({"match-tree", p, tree}).out == "2\n4\n");
  CHECK(run({"match-tree", p, tree, "--no-prune"}).out == "2\n4\n");
  CHECK(run({"match-tree", p, tree, "--oracle"}).out == "2\n4\n");
  const auto stats = run({"match-tree", p, tree, "--stats"}).out;
  CHECK(stats.rfind("goto=", std::string::npos) != std::string::npos);

  const auto bad = w.write("bad.txt", "tree 3\n0 1 1\n0 1 2\n");
  const auto r = run({"match-tree", p, bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("bad.txt:3") != std::string::npos);
}

TEST_CASE("dag subcommands") {
  Workdir w;
  const auto t = w.write("t.txt", "5 2 1 4 3 6\n");
  const auto p = w.write("p.txt", "1 2 3\n");
  const auto dag_path = w.path("g.dag");
  CHECK(run({"build-dasg", t, "-o", dag_path}).code == 0);
  std::ifstream in(dag_path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "dag 7 21");

  auto r = run({"match-dag", p, dag_path, "--witness"});
  CHECK(r.code == 0);
  CHECK(r.out == "yes\n0 2 4 6\n");
  CHECK(run({"match-dag", p, dag_path, "--oracle"}).out == "yes\n");

  const auto longp = w.write("long.txt", "1 2 3 4 5 6 7\n");
  CHECK(run({"match-dag", longp, dag_path}).out == "no\n");
  CHECK(run({"match-dag", longp, dag_path}).code == 0);

  CHECK(run({"opsm", p, t}).out == "yes\n");
  const auto down = w.write("down.txt", "1 2\n");
  const auto two = w.write("two.txt", "2 1\n");
  CHECK(run({"opsm", down, two}).out == "no\n");
  CHECK(run({"opsm", down, two, "--oracle"}).out == "no\n");

  const auto cyclic = w.write("cyc.dag", "dag 2 1\n1 1 1\n");
  CHECK(run({"match-dag", p, cyclic}).code == 2);
}

TEST_CASE("gen and bench") {
  Workdir w;
  const auto tree_path = w.path("adv.tree");
  const auto pat_path = w.path("adv.pat");
  CHECK(run({"gen", "adversarial", "--height", "5", "--m", "3", "-o", tree_path,
             "--pattern-out", pat_path}).code == 0);
  const auto r = run({"match-tree", pat_path, tree_path});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 8);

  CHECK(run({"gen", "random-string", "--length", "8", "--sigma", "2", "--seed", "42"}).out ==
        run({"gen", "random-string", "--length", "8", "--sigma", "2", "--seed", "42"}).out);
  CHECK(run({"gen", "random-tree", "--nodes", "10"}).out.rfind("tree 10\n", 0) == 0);
  CHECK(run({"gen", "random-dag", "--vertices", "5", "--density", "0"}).out == "dag 5 0\n");

  const auto bench = run({"bench", "adversarial", "--heights", "8,10"});
  CHECK(bench.code == 0);
  std::istringstream lines(bench.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "h,N,m,goto,fail_pruned,fail_naive");
  int rows = 0;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<std::uint64_t> v;
    for (std::string f; std::getline(fields, f, ',');) v.push_back(std::stoull(f));
    REQUIRE(v.size() == 6);
    const auto h = v[0], m = v[2];
    CHECK(v[1] == (std::uint64_t{2} << h) - 1);
    CHECK(v[5] >= (m - 1) * (std::uint64_t{1} << (h - 2)));
    ++rows;
  }
  CHECK(rows == 2);

  const auto dasg = run({"bench", "dasg", "--lengths", "6,10"});
  CHECK(dasg.code == 0);
  CHECK(dasg.out.rfind("n,V,E,m,explored,found\n", 0) == 0);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"match-string", "/nonexistent/p", "/nonexistent/t"}).code == 1);
  CHECK(run({"bench", "adversarial", "--heights", "2"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("malformed input exits with 2") {
  Workdir w;
  const auto p = w.write("p.txt", "1 two\n");
  const auto t = w.write("t.txt", "1 2 3\n");
  const auto r = run({"match-string", p, t});
  CHECK(r.code == 2);
  CHECK(r.err.find("p.txt:1:3") != std::string::npos);

  const auto empty = w.write("e.txt", "");
  CHECK(run({"match-string", empty, t}).code == 2);
}
