#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string bin_path() {
  const char* env = std::getenv("WGI_BIN");
  REQUIRE(env != nullptr);
  return env;
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = bin_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("wgi_cli_test_") + name + ".graph";
  std::ofstream file(path);
  file << content;
  return path;
}

}  // namespace

TEST_CASE("inertia command") {
  const std::string c5 = write_temp("c5", "5 5\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n0 4 1\n");
  SECTION("all methods agree on C5") {
    RunResult r = run("inertia " + c5 + " --method all");
    CHECK(r.status == 0);
    CHECK(r.out.find("3 2 0") == 0);
    CHECK(r.out.find("agreement") != std::string::npos);
  }
  SECTION("K23") {
    const std::string k23 = write_temp("k23", "5 6\n0 2 1\n0 3 1\n0 4 1\n1 2 1\n1 3 1\n1 4 1\n");
    RunResult r = run("inertia " + k23);
    CHECK(r.status == 0);
    CHECK(r.out.find("1 1 3") == 0);
  }
  SECTION("edgeless graph") {
    const std::string empty3 = write_temp("empty3", "3 0\n");
    RunResult r = run("inertia " + empty3 + " --method all");
    CHECK(r.status == 0);
    CHECK(r.out.find("0 0 3") == 0);
  }
  SECTION("json output") {
    RunResult r = run("--json inertia " + c5 + " --method all");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"agreement\":true") != std::string::npos);
  }
  SECTION("parse failure exits 2") {
    const std::string bad = write_temp("bad", "2 1\n0 1 -3\n");
    CHECK(run("inertia " + bad).status == 2);
  }
  SECTION("missing file exits 2") { CHECK(run("inertia no_such_file.graph").status == 2); }
}

TEST_CASE("classify command") {
  SECTION("unit diamond") {
    const std::string diamond = write_temp("diamond", "4 5\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n");
    RunResult r = run("classify " + diamond);
    CHECK(r.status == 0);
    CHECK(r.out.find("theta(1,0,1)") != std::string::npos);
    CHECK(r.out.find("Thm 5.2") != std::string::npos);
    CHECK(r.out.find("rank=3") != std::string::npos);
  }
  SECTION("unit bowtie") {
    const std::string bowtie =
        write_temp("bowtie", "5 6\n0 1 1\n1 2 1\n0 2 1\n0 3 1\n3 4 1\n0 4 1\n");
    RunResult r = run("classify " + bowtie);
    CHECK(r.status == 0);
    CHECK(r.out.find("infinity(3,1,3)") != std::string::npos);
    CHECK(r.out.find("Table 1") != std::string::npos);
    CHECK(r.out.find("i+=2") != std::string::npos);
  }
  SECTION("non-bicyclic input exits 2") {
    const std::string c4 = write_temp("c4", "4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n");
    CHECK(run("classify " + c4).status == 2);
  }
}

TEST_CASE("bounds command") {
  RunResult r = run("bounds --family 'theta(1,1,1)'");
  CHECK(r.status == 0);
  CHECK(r.out.find("stated bound: 3/2") != std::string::npos);
  CHECK(r.out.find("effective bound: 2") != std::string::npos);
  CHECK(r.out.find("caveat") != std::string::npos);
}

TEST_CASE("census command") {
  SECTION("rank filter yields the single K23 record") {
    RunResult r = run("census --n 5 --grid 1 --filter rank=2");
    CHECK(r.status == 0);
    CHECK(r.out.find("base=theta p=1 l=1 q=1") != std::string::npos);
    CHECK(r.out.find("records=1") != std::string::npos);
  }
  SECTION("five underlying graphs at n=5") {
    RunResult r = run("census --n 5 --grid 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("records=5") != std::string::npos);
  }
  SECTION("i+=1 filter matches the theta(1,0,1) condition count") {
    // 2^5 assignments; i+=1 exactly when a2c1=a1c2: 3 of 4 (a,c) sign patterns
    // are ruled out; by direct count 12 of 32 assignments qualify.
    RunResult r = run("census --n 4 --grid 1,2 --filter i+=1");
    CHECK(r.status == 0);
    CHECK(r.out.find("base=theta p=1 l=0 q=1") != std::string::npos);
  }
  SECTION("unsupported n exits 2") { CHECK(run("census --n 3 --grid 1").status == 2); }
  SECTION("byte-identical reruns") {
    RunResult a = run("census --n 6 --grid 1,2 --filter base=infinity");
    RunResult b = run("census --n 6 --grid 1,2 --filter base=infinity");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
  SECTION("threaded run matches single-threaded output") {
    RunResult a = run("census --n 6 --grid 1,2");
    RunResult b = run("census --n 6 --grid 1,2 --threads 4");
    CHECK(a.out == b.out);
  }
}

TEST_CASE("transform command") {
  const std::string p2 = write_temp("p2", "2 1\n0 1 1\n");
  RunResult r = run("transform star-merge " + p2 + " --u1 0 --u2 1 --l-weights 1 --t-weights 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("monotone: yes") != std::string::npos);
}

TEST_CASE("derive-condition command") {
  RunResult r = run("derive-condition --base 'theta(1,0,1)' --target i+=1 --grid 1,2 --holdout 1,3 "
                    "--max-degree 2 --no-sums");
  CHECK(r.status == 0);
  CHECK(r.out.find("validated on holdout:") != std::string::npos);
  CHECK(r.out.find("a1*c2 = a2*c1") != std::string::npos);
}
