#include "cli.hpp"

#include <bezout/error.hpp>

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using bezout::cli::parse_system_file;
using bezout::cli::run;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bezout");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("bezout_cli_" + name + ".sys");
  std::ofstream(path) << body;
  return path.string();
}

std::string system_file(const std::string& name, int n1, int n2, const std::string& f1, const std::string& f2,
                        const std::string& extra = "") {
  return write_temp(name, "[system]\nn1 = " + std::to_string(n1) + "\nn2 = " + std::to_string(n2) + "\nF1 = " + f1 +
                              "\nF2 = " + f2 + "\n" + extra);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_system_file") {
  const auto f = parse_system_file("# demo\n[system]\nn1 = 2\nn2 = 1\nF1 = x*y - 1  # hyperbola\nF2 = x\nH = x - y\nseed = 4\n");
  CHECK(f.n1 == 2);
  CHECK(f.n2 == 1);
  CHECK(f.F1 == "x*y - 1");
  CHECK(f.H == "x - y");
  CHECK(f.seed == 4u);
  CHECK_FALSE(f.radius.has_value());
  try {
    parse_system_file("n1 = 1\nn2 = 1\nF1 = x\nG = y\n");
    FAIL("expected ParseError");
  } catch (const bezout::ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_system_file("n1 = 1\nF1 = x\nF2 = y\n"), bezout::ParseError);
  CHECK_THROWS_AS(parse_system_file("n1 = one\nn2 = 1\nF1 = x\nF2 = y\n"), bezout::ParseError);
}

TEST_CASE("count") {
  const auto a = invoke({"count", system_file("lin", 1, 1, "x", "y")});
  CHECK(a.code == 0);
  const json j = a.doc();
  CHECK(j["count"] == 1);
  CHECK(j["status"] == "ok");
  const auto b = invoke({"count", system_file("hyp", 2, 1, "x*y - 1", "y - 1", "H = x - y\n"), "--method", "all"});
  CHECK(b.code == 0);
  const json jb = b.doc();
  CHECK(jb["count"] == 1);
  CHECK(jb["dims"] == json::array({0, 1, 1}));
  for (const char* k : {"filtration", "eliminant", "oracle"}) CHECK(jb["counts"][k] == 1);
  CHECK(jb["advisory"].contains("numeric"));
  const auto c = invoke({"count", system_file("empty", 2, 1, "x*y - 1", "x")});
  CHECK(c.code == 0);
  CHECK(c.doc()["count"] == 0);
}

TEST_CASE("invalid systems") {
  const auto a = invoke({"count", system_file("common", 2, 1, "x*y", "x")});
  CHECK(a.code == 2);
  CHECK(a.doc()["status"] == "InfiniteFiber");
  CHECK(a.doc()["valid"] == false);
  const auto b = invoke({"count", system_file("drop", 2, 2, "x", "y")});
  CHECK(b.code == 2);
  const auto c = invoke({"count", system_file("badline", 2, 1, "x*y - 1", "x", "H = x\n")});
  CHECK(c.code == 3);
  const auto d = invoke({"count", write_temp("broken", "n1 = 1\nn2 = 1\nF1 = x +\nF2 = y\n")});
  CHECK(d.code == 1);
  CHECK(invoke({"count", "/nonexistent/file.sys"}).code == 1);
}

TEST_CASE("trace") {
  const auto a = invoke({"trace", system_file("trace", 2, 1, "x*y - 1", "x", "H = x - y\n")});
  CHECK(a.code == 0);
  const json j = a.doc();
  CHECK(j["dims"] == json::array({0, 1, 2, 2}));
  CHECK(j["monotone"] == true);
  CHECK(j["concave"] == true);
  CHECK(j["stabilized_at"] == 2);
  CHECK(j["dim_K"] == 3);
  CHECK(j["count"] == 0);
}

TEST_CASE("zeuthen") {
  const auto a = invoke({"zeuthen", system_file("zeu", 2, 1, "y^2 - x", "x + y - 1")});
  CHECK(a.code == 0);
  const json j = a.doc();
  CHECK(j["count"] == 2);
  REQUIRE(j["cycles"].size() == 1);
  CHECK(j["cycles"][0]["den"] == 2);
  CHECK(j["cycles"][0]["lead_exp"] == "1/2");
  CHECK(invoke({"zeuthen", system_file("zeu2", 2, 1, "y^2 - x", "x + y - 1"), "--radius", "50"}).doc()["count"] == 2);
}

TEST_CASE("bound-check") {
  const auto a = invoke({"bound-check", system_file("aut", 2, 1, "x + y^2", "y")});
  CHECK(a.code == 0);
  const json j = a.doc();
  CHECK(j["k"] == 0);
  CHECK(j["satisfied"] == true);
  CHECK(j["degree_estimate"] == 1);
}

TEST_CASE("gen") {
  const std::vector<std::string> args{"gen", "--family", "line_products", "--n1", "2", "--n2", "2", "--seed", "9"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("# points") != std::string::npos);
  const auto f = parse_system_file(a.out);
  CHECK(f.n1 == 2);
  const auto counted = invoke({"count", write_temp("gen", a.out)});
  CHECK(counted.doc()["count"] == 4);
  CHECK(invoke({"gen", "--family", "bogus"}).code == 1);
  CHECK(invoke({"gen", "--family", "dk_family", "--n1", "2", "--n2", "2"}).code == 0);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"count"}).code == 1);
  CHECK(invoke({"count", "x.sys", "--method", "magic"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("stdout is byte-identical across runs") {
  const std::string f = system_file("repeat", 2, 2, "x^2 + y - 3", "x*y - 2");
  for (const char* cmd : {"count", "trace", "zeuthen"}) {
    const auto a = invoke({cmd, f});
    const auto b = invoke({cmd, f});
    CHECK(a.out == b.out);
    CHECK(a.err.find("took") != std::string::npos);
  }
}

TEST_CASE("selftest small") {
  const auto a = invoke({"selftest", "--scale", "small"});
  CHECK(a.code == 0);
  std::istringstream lines(a.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    ++n;
    CHECK(line.rfind("PASS [", 0) == 0);
  }
  CHECK(n == 9);
}

}
