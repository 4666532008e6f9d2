#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "polyrep/mask.hpp"
#include "polyrep/schemes.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr interleaved
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(POLYREP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    output.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/polyrep_test_") + name;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

TEST_CASE("scheme emits a loadable mask document") {
  const auto res = run("scheme butterfly");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("\"dilation\": 2") != std::string::npos);

  const std::string path = temp_path("butterfly.json");
  write_file(path, res.output);
  const polyrep::Mask mask = polyrep::read_mask_file(path);
  CHECK(mask.symbol() == polyrep::butterfly().symbol());
}

TEST_CASE("unknown scheme names list the alternatives and exit 1") {
  const auto res = run("scheme does_not_exist");
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("butterfly") != std::string::npos);
  CHECK(res.output.find("sqrt3_iterated") != std::string::npos);
}

TEST_CASE("analyze: pinned values via the scheme pipeline") {
  const std::string path = temp_path("b222.json");
  REQUIRE(run("scheme b222 -o " + path).exit_code == 0);

  const auto res = run("analyze " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("reproduction degree: 1") != std::string::npos);
  CHECK(res.output.find("(2, 2)") != std::string::npos);

  const auto butterfly_res = run("scheme butterfly | " POLYREP_CLI_PATH " analyze -");
  CHECK(butterfly_res.exit_code == 0);
  CHECK(butterfly_res.output.find("reproduction degree: 3") != std::string::npos);
  CHECK(butterfly_res.output.find("(0, 0)") != std::string::npos);
  CHECK(butterfly_res.output.find("interpolatory:       yes") != std::string::npos);
}

TEST_CASE("analyze reports are byte stable across runs") {
  for (const char* name :
       {"cubic_bspline", "b222", "butterfly", "dd4", "three_dim", "sqrt3_iterated"}) {
    const std::string path = temp_path(std::string(name) + ".json");
    REQUIRE(run(std::string("scheme ") + name + " -o " + path).exit_code == 0);
    const auto first = run("analyze " + path);
    const auto second = run("analyze " + path);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    const auto json_first = run("analyze --format json " + path);
    const auto json_second = run("analyze --format json " + path);
    CHECK(json_first.output == json_second.output);
  }
}

TEST_CASE("analyze rejects invalid documents with exit 2") {
  const std::string path = temp_path("bad_dilation.json");
  write_file(path, R"({"dimension": 1, "dilation": 1,
    "coefficients": [{"index": [0], "value": "1"}]})");
  const auto res = run("analyze " + path);
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("dilation") != std::string::npos);

  write_file(path, "this is not json");
  CHECK(run("analyze " + path).exit_code == 1);
}

TEST_CASE("oracle agrees with the certificate") {
  const std::string path = temp_path("butterfly.json");
  REQUIRE(run("scheme butterfly -o " + path).exit_code == 0);

  const auto res = run("oracle " + path + " --degree 4 --steps 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("certified degree = 3") != std::string::npos);
  CHECK(res.output.find("FAIL") != std::string::npos);  // some degree-4 monomial misses

  const std::string spline = temp_path("cubic.json");
  REQUIRE(run("scheme cubic_bspline -o " + spline).exit_code == 0);
  const auto spline_res = run("oracle " + spline + " --degree 2");
  CHECK(spline_res.exit_code == 0);
  CHECK(spline_res.output.find("x^(2),FAIL") != std::string::npos);

  // negative dilation end to end
  const std::string sqrt3 = temp_path("sqrt3.json");
  REQUIRE(run("scheme sqrt3_iterated -o " + sqrt3).exit_code == 0);
  const auto sqrt3_res = run("oracle " + sqrt3 + " --degree 2 --steps 1");
  CHECK(sqrt3_res.exit_code == 0);
  CHECK(sqrt3_res.output.find("certified degree = 1") != std::string::npos);

  // every remaining built-in keeps the cross-check trap quiet
  for (const char* name : {"b222", "dd4", "three_dim"}) {
    const std::string mask = temp_path(std::string(name) + ".json");
    REQUIRE(run(std::string("scheme ") + name + " -o " + mask).exit_code == 0);
    CHECK(run("oracle " + mask + " --degree 2 --steps 1").exit_code == 0);
  }
}

TEST_CASE("oracle with a user parametrization") {
  const std::string spline = temp_path("cubic.json");
  REQUIRE(run("scheme cubic_bspline -o " + spline).exit_code == 0);
  // the wrong tau reproduces nothing beyond constants
  const auto res = run("oracle " + spline + " --degree 1 --tau 0");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("certified degree = 0") != std::string::npos);
}

TEST_CASE("oracle refuses a box smaller than the stencil") {
  const std::string path = temp_path("butterfly.json");
  REQUIRE(run("scheme butterfly -o " + path).exit_code == 0);
  const auto res = run("oracle " + path + " --degree 1 --radius 1");
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("radius") != std::string::npos);
}

TEST_CASE("subdivide delta data yields the mask coefficients") {
  const std::string mask_path = temp_path("cubic.json");
  REQUIRE(run("scheme cubic_bspline -o " + mask_path).exit_code == 0);
  const std::string data_path = temp_path("delta.csv");
  write_file(data_path, "i0,value\n0,1\n");
  const auto res =
      run("subdivide " + mask_path + " --data " + data_path + " --steps 1 --zero-extended");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("0,1/8,") != std::string::npos);
  CHECK(res.output.find("2,3/4,") != std::string::npos);  // 6/8 canonicalized
}

TEST_CASE("render emits the sum footer and a raster for 2-D masks") {
  const std::string spline = temp_path("cubic.json");
  REQUIRE(run("scheme cubic_bspline -o " + spline).exit_code == 0);
  const auto res = run("render " + spline + " --steps 6");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("# sum = 64") != std::string::npos);  // 2^6

  const std::string b222 = temp_path("b222.json");
  REQUIRE(run("scheme b222 -o " + b222).exit_code == 0);
  const std::string img = temp_path("b222.pgm");
  const std::string csv = temp_path("b222.csv");
  const auto render =
      run("render " + b222 + " --steps 4 -o " + csv + " --image " + img);
  CHECK(render.exit_code == 0);
  std::ifstream pgm(img, std::ios::binary);
  std::string magic(2, '\0');
  pgm.read(magic.data(), 2);
  CHECK(magic == "P5");

  // raster for a univariate mask is an input error
  const auto bad = run("render " + spline + " --steps 3 --image " + img);
  CHECK(bad.exit_code == 2);
}
