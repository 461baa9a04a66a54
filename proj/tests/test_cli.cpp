#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "homtwist/document.hpp"
#include "homtwist/structures.hpp"

// Integration tests against the real binary: the exit-code contract is part
// of the external interface.

namespace fs = std::filesystem;
using namespace homtwist;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("homtwist_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

int run_cli(const std::string& args, const fs::path& stdout_file) {
  const std::string cmd =
      std::string(HOMTWIST_CLI_PATH) + " " + args + " > " + stdout_file.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("example then check: valid bundle exits 0, with and without oracle") {
  TempDir dir;
  const fs::path doc = dir.path / "z2.json";
  const fs::path out = dir.path / "out.json";
  CHECK(run_cli("example z2-graded-bundle --out " + doc.string(), out) == 0);
  CHECK(run_cli("check " + doc.string(), out) == 0);
  CHECK(slurp(out).find("\"overall\": true") != std::string::npos);
  CHECK(run_cli("check " + doc.string() + " --oracle", out) == 0);
  CHECK(slurp(out).find("\"oracle_agrees\": true") != std::string::npos);
}

TEST_CASE("check output bytes are deterministic") {
  TempDir dir;
  const fs::path doc = dir.path / "z2.json";
  const fs::path out1 = dir.path / "out1.json";
  const fs::path out2 = dir.path / "out2.json";
  REQUIRE(run_cli("example z2-graded-bundle --out " + doc.string(), out1) == 0);
  CHECK(run_cli("check " + doc.string(), out1) == 0);
  CHECK(run_cli("check " + doc.string(), out2) == 0);
  CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("mutated bundle exits 1 and the report names the bundle axiom") {
  TempDir dir;
  const fs::path doc = dir.path / "mutated.json";
  const fs::path out = dir.path / "out.json";
  REQUIRE(run_cli("example z2-graded-bundle-mutated --out " + doc.string(), out) == 0);
  CHECK(run_cli("check " + doc.string(), out) == 1);
  const std::string report = slurp(out);
  CHECK(report.find("\"overall\": false") != std::string::npos);
  CHECK(report.find("bundle_axiom") != std::string::npos);
  // axiom filtering: the failing axiom alone still fails, a passing one passes
  CHECK(run_cli("check " + doc.string() + " --axioms bundle_axiom", out) == 1);
  CHECK(run_cli("check " + doc.string() + " --axioms multiplicativity", out) == 0);
}

TEST_CASE("malformed input exits 2") {
  TempDir dir;
  const fs::path doc = dir.path / "bad.json";
  const fs::path out = dir.path / "out.json";
  {
    std::ofstream f(doc);
    f << "{\"format_version\": \"homtwist/1\", \"scalars\": \"rational-string\", "
         "\"structures\": {\"e\": {\"kind\": \"endomorphism\", \"dim\": 1, "
         "\"matrix\": [[\"1/0\"]]}}}";
  }
  CHECK(run_cli("check " + doc.string(), out) == 2);

  {
    std::ofstream f(doc);
    f << "not json";
  }
  CHECK(run_cli("check " + doc.string(), out) == 2);

  CHECK(run_cli("check " + (dir.path / "missing.json").string(), out) == 2);
}

TEST_CASE("usage errors exit 2") {
  TempDir dir;
  const fs::path doc = dir.path / "z2.json";
  const fs::path out = dir.path / "out.json";
  REQUIRE(run_cli("example z2-graded-bundle --out " + doc.string(), out) == 0);
  CHECK(run_cli("check " + doc.string() + " --structure nope", out) == 2);
  CHECK(run_cli("check " + doc.string() + " --axioms nonsense", out) == 2);
  CHECK(run_cli("check " + doc.string() + " --structure alpha_c_sign", out) == 2);
  CHECK(run_cli("example no-such-example", out) == 2);
  CHECK(run_cli("induce " + doc.string() + " --op warp --bundle z2_graded", out) == 2);
  CHECK(run_cli("frobnicate", out) == 2);
}

TEST_CASE("deform: valid pair produces a bundle that checks clean") {
  TempDir dir;
  const fs::path doc = dir.path / "z2.json";
  const fs::path deformed = dir.path / "deformed.json";
  const fs::path out = dir.path / "out.json";
  REQUIRE(run_cli("example z2-graded-bundle --out " + doc.string(), out) == 0);

  CHECK(run_cli("deform " + doc.string() +
                    " --bundle z2_graded --alpha-h alpha_h_identity --alpha-c alpha_c_sign "
                    "--out " + deformed.string(),
                out) == 0);
  CHECK(run_cli("check " + deformed.string() + " --oracle", out) == 0);
}

TEST_CASE("deform: identity pair reproduces the input bundle byte-for-byte") {
  TempDir dir;
  const fs::path doc = dir.path / "z2.json";
  const fs::path deformed = dir.path / "deformed.json";
  const fs::path out = dir.path / "out.json";
  REQUIRE(run_cli("example z2-graded-bundle --out " + doc.string(), out) == 0);
  REQUIRE(run_cli("deform " + doc.string() +
                      " --bundle z2_graded --alpha-h alpha_h_identity "
                      "--alpha-c alpha_c_identity --out " + deformed.string(),
                  out) == 2);  // no alpha_c_identity record in that document
  CHECK(run_cli("deform " + doc.string() +
                    " --bundle z2_graded --alpha-h alpha_h_identity --alpha-c alpha_h_identity "
                    "--out " + deformed.string(),
                out) == 0);

  const io::Document in_doc = io::read_document_file(doc);
  const io::Document out_doc = io::read_document_file(deformed);
  REQUIRE(out_doc.structures.count("z2_graded") == 1);
  CHECK(io::structures_equal(out_doc.structures.at("z2_graded"),
                             in_doc.structures.at("z2_graded")));
}

TEST_CASE("deform: failing prechecks exit 1") {
  TempDir dir;
  const fs::path doc = dir.path / "z2.json";
  const fs::path deformed = dir.path / "deformed.json";
  const fs::path out = dir.path / "out.json";
  REQUIRE(run_cli("example z2-graded-bundle --out " + doc.string(), out) == 0);
  CHECK(run_cli("deform " + doc.string() +
                    " --bundle z2_graded --alpha-h alpha_h_identity --alpha-c alpha_c_swap "
                    "--out " + deformed.string(),
                out) == 1);
  CHECK(!fs::exists(deformed));
}

TEST_CASE("induce characterize") {
  TempDir dir;
  const fs::path doc = dir.path / "z2.json";
  const fs::path mutated = dir.path / "mutated.json";
  const fs::path out = dir.path / "out.json";
  REQUIRE(run_cli("example z2-graded-bundle --out " + doc.string(), out) == 0);
  REQUIRE(run_cli("example z2-graded-bundle-mutated --out " + mutated.string(), out) == 0);

  CHECK(run_cli("induce " + doc.string() + " --op characterize --bundle z2_graded", out) == 0);
  std::string report = slurp(out);
  CHECK(report.find("\"axiom_holds\": true") != std::string::npos);
  CHECK(report.find("\"morphism_holds\": true") != std::string::npos);

  CHECK(run_cli("induce " + mutated.string() + " --op characterize --bundle z2_graded_mutated",
                out) == 0);
  report = slurp(out);
  CHECK(report.find("\"axiom_holds\": false") != std::string::npos);
  CHECK(report.find("\"morphism_holds\": false") != std::string::npos);
}

TEST_CASE("induce tilde and tensor emit checkable comodules") {
  TempDir dir;
  const fs::path doc = dir.path / "z2.json";
  const fs::path tilde = dir.path / "tilde.json";
  const fs::path square = dir.path / "square.json";
  const fs::path out = dir.path / "out.json";
  REQUIRE(run_cli("example z2-graded-bundle --out " + doc.string(), out) == 0);

  CHECK(run_cli("induce " + doc.string() + " --op tilde --bundle z2_graded --out " +
                    tilde.string(),
                out) == 0);
  CHECK(run_cli("check " + tilde.string() + " --oracle", out) == 0);

  CHECK(run_cli("induce " + doc.string() + " --op tensor --bundle z2_graded --out " +
                    square.string(),
                out) == 0);
  CHECK(run_cli("check " + square.string() + " --oracle", out) == 0);

  // missing --out for tilde is a usage error
  CHECK(run_cli("induce " + doc.string() + " --op tilde --bundle z2_graded", out) == 2);
}

TEST_CASE("induce tensor on a dim-1 host gives the scalar coaction") {
  TempDir dir;
  const fs::path doc = dir.path / "tiny.json";
  const fs::path square = dir.path / "square.json";
  const fs::path out = dir.path / "out.json";
  REQUIRE(run_cli("example trivial-bundle --out " + doc.string(), out) == 0);
  CHECK(run_cli("induce " + doc.string() + " --op tensor --bundle trivial_bundle --out " +
                    square.string(),
                out) == 0);
  const io::Document result = io::read_document_file(square);
  const auto& record =
      std::get<io::ComoduleRecord>(result.structures.at("trivial_bundle_tensor_square"));
  CHECK(record.comodule.delta == identity(1));
}

TEST_CASE("example --list names every document") {
  TempDir dir;
  const fs::path out = dir.path / "out.json";
  CHECK(run_cli("example --list", out) == 0);
  const std::string listing = slurp(out);
  CHECK(listing.find("z2-graded-bundle") != std::string::npos);
  CHECK(listing.find("trivial-bundle") != std::string::npos);
}

TEST_CASE("example to stdout parses") {
  TempDir dir;
  const fs::path out = dir.path / "out.json";
  CHECK(run_cli("example z3-group-bialgebra", out) == 0);
  const io::Document doc = io::parse_document(slurp(out));
  CHECK(doc.structures.count("z3_group") == 1);
}

}  // TEST_SUITE
