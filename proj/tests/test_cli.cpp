#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "quiltforge/io.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("quiltforge-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args) {
  std::string cmd = std::string("\"") + QUILTFORGE_CLI + "\" " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit 2") {
  CHECK(run("") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("verify") == 2);
  CHECK(run("verify --pair '7(9)'") == 2);
  CHECK(run("verify --pair no-such-file.json") == 2);
  CHECK(run("verify --pair '7(1)' --bc robin") == 2);
  CHECK(run("render --pair '7(1)' -o /tmp --stroke-a solid") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("label commands") {
  TempDir tmp;
  auto out = tmp.path / "v.json";
  CHECK(run("verify --pair '7(1)' --mode graph --k 2 -o " + out.string()) == 0);
  auto j = quiltforge::Json::parse(slurp(out));
  CHECK(j["passed"] == true);
  CHECK(j["transplantResidual"] == "0/1");
  CHECK(run("signature --pair '7(3)' -o " + (tmp.path / "s.json").string()) == 0);
  CHECK(run("render --pair '7(2)' -o " + tmp.path.string()) == 0);
  CHECK(fs::exists(tmp.path / "7-2-left.svg"));
  CHECK(fs::exists(tmp.path / "7-2-right.svg"));
}

TEST_CASE("verification failures exit 1") {
  TempDir tmp;
  auto pair = tmp.path / "iso.json";
  std::ofstream(pair) << R"json({"left": {"n": 3, "a": "(1 2)", "b": "(2 3)", "c": ""},
                            "right": {"n": 3, "a": "(2 3)", "b": "(1 3)", "c": ""}})json";
  CHECK(run("verify --pair " + pair.string()) == 1);
}

TEST_CASE("seeds, quilt, catalog and reverify") {
  TempDir tmp;
  auto seeds = tmp.path / "seeds.json";
  CHECK(run("seeds --sizes 7,13 -o " + seeds.string()) == 0);
  CHECK(quiltforge::Json::parse(slurp(seeds)).size() == 3);
  auto quilt = tmp.path / "quilt.json";
  CHECK(run("quilt --seed " + seeds.string() + " --name 13b -o " + quilt.string()) == 0);
  CHECK(quiltforge::Json::parse(slurp(quilt))["classCount"] == 4);
  CHECK(run("quilt --seed " + seeds.string() + " --name 99 -o " + quilt.string()) == 2);

  auto dir = tmp.path / "cat";
  CHECK(run("catalog --sizes 7 --no-spectral -o " + dir.string()) == 0);
  CHECK(fs::exists(dir / "svg" / "7-3-right.svg"));
  CHECK(run("reverify " + (dir / "catalog.json").string()) == 0);

  auto j = quiltforge::Json::parse(slurp(dir / "catalog.json"));
  j["quilts"][0]["classes"][0]["intertwiner"][0][0] = "9/1";
  std::ofstream(dir / "bad.json") << j.dump();
  CHECK(run("reverify " + (dir / "bad.json").string()) == 1);
}

}  // TEST_SUITE
