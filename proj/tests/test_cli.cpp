#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ckbound/graph6.hpp"
#include "ckbound/json_io.hpp"
#include "oracles.hpp"

using namespace ckbound;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ckbound-test-" + name);
}

}  // namespace

TEST_CASE("spectrum command") {
  auto r = run({"spectrum", "icosahedron", "--exact"});
  CHECK(r.code == 0);
  CHECK(r.out == "5^1 (sqrt5)^3 (-1)^5 (-sqrt5)^3\n");
  CHECK(run({"spectrum", "complete:4"}).out == "3^1 (-1)^3\n");
  CHECK(run({"spectrum", "srg:57,24,11,9"}).out == "24^1 5^18 (-3)^38\n");

  r = run({"spectrum", "cycle:5"});
  CHECK(r.code == 0);
  CHECK(r.err.find("numeric") != std::string::npos);

  r = run({"spectrum", "johnson:7,2", "--json"});
  const Json j = Json::parse(r.out);
  CHECK(j.at("exact") == true);
  const std::string expected = R"([{"mult":1,"value":"10"},{"mult":6,"value":"3"},{"mult":14,"value":"-2"}])";
  CHECK(j.at("spectrum").dump() == expected);

  r = run({"spectrum", "icosahedron", "--numeric", "--json"});
  CHECK(Json::parse(r.out).at("exact") == false);
  CHECK(run({"spectrum", "icosahedron", "--numeric", "--exact"}).code == 2);
}

TEST_CASE("spectrum command errors") {
  auto r = run({"spectrum", "johnson:x"});
  CHECK(r.code == 2);
  CHECK(r.err.find("byte 8") != std::string::npos);
  CHECK(run({"spectrum", "paley:7"}).code == 2);
  CHECK(run({"spectrum", "srg:10,3,1,1"}).code == 2);
  CHECK(run({"spectrum"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bound command") {
  auto r = run({"bound", "icosahedron", "--k", "4", "--t", "sup"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(1+sqrt5)/12 (0.269672)") != std::string::npos);
  CHECK(run({"bound", "johnson:10,2", "--k", "10", "--t", "sup"}).out.find("7/45") != std::string::npos);
  r = run({"bound", "icosahedron", "--k", "4", "--t", "1"});
  CHECK(r.out.find("sqrt5/12 (0.186339)") != std::string::npos);

  r = run({"bound", "icosahedron", "--k", "4", "--json"});
  const Json cert = Json::parse(r.out);
  CHECK(cert.at("ratio").at("exact") == "1/12+1/12*sqrt(5)");
  CHECK(exactly_equal(recheck_certificate(cert).ratio, EigenValue::quadratic(Rational(1, 12), Rational(1, 12), 5)));

  r = run({"bound", "complete:5", "--k", "2"});
  CHECK(r.out.find("not attained") != std::string::npos);

  r = run({"bound", "icosahedron", "--k", "4", "--t", "3", "--json"});
  const Json fin = Json::parse(r.out);
  CHECK(fin.at("eigenvalue") == "2+3*sqrt(5)");

  CHECK(run({"bound", "icosahedron", "--k", "13"}).code == 2);
  CHECK(run({"bound", "icosahedron", "--k", "0"}).code == 2);
  CHECK(run({"bound", "icosahedron", "--k", "4", "--t", "0"}).code == 2);
  CHECK(run({"bound", "icosahedron", "--k", "4", "--t", "inf"}).code == 2);
  CHECK(run({"bound", "icosahedron"}).code == 2);
}

TEST_CASE("table command") {
  auto r = run({"table", "--range", "4..24"});
  CHECK(r.code == 0);
  std::size_t rows = 0, yes = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0]))) ++rows;
    if (line.ends_with("yes")) ++yes;
  }
  CHECK(rows == 21);
  CHECK(yes == 21);

  r = run({"table", "--range", "8..8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("J(8,2), Gosset") != std::string::npos);
  CHECK(r.out.find("5/28") != std::string::npos);

  r = run({"table", "--range", "4..24", "--json"});
  std::istringstream jl(r.out);
  std::size_t count = 0;
  for (std::string line; std::getline(jl, line); ++count) {
    const Json row = Json::parse(line);
    CHECK(row.at("match") == true);
    CHECK(row.at("expected").get<std::string>() == row.at("ratio").at("exact").get<std::string>());
  }
  CHECK(count == 21);

  CHECK(run({"table", "--range", "1..3"}).code == 2);
  CHECK(run({"table", "--range", "20..25"}).code == 2);
  CHECK(run({"table", "--range", "9..4"}).code == 2);
  CHECK(run({"table", "--range", "a..b"}).code == 2);
}

TEST_CASE("search command") {
  auto r = run({"search", "--k", "3", "--n", "6", "--method", "exhaustive"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(std::abs(j.at("best_ratio").get<double>() - 1.0 / 3) < 1e-12);
  CHECK(search_result_from_json(j).best_ratio == j.at("best_ratio").get<double>());

  const auto a = run({"search", "--k", "4", "--n", "10", "--seed", "3", "--budget", "2000"});
  const auto b = run({"search", "--k", "4", "--n", "10", "--seed", "3", "--budget", "2000"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out).at("seed") == 3);
  CHECK(Json::parse(run({"search", "--k", "2", "--n", "5", "--budget", "50"}).out).at("seed") == kDefaultSeed);

  const auto file = temp_file("all4.g6");
  {
    std::ofstream f(file);
    for (std::uint64_t mask = 0; mask < 64; ++mask) f << g6_encode(oracle::from_mask(4, mask)) << '\n';
  }
  r = run({"search", "--k", "2", "--g6-file", file.string()});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("best_ratio").get<double>() == doctest::Approx(0.5));
  CHECK(Json::parse(r.out).at("method") == "stream");
  std::filesystem::remove(file);
}

TEST_CASE("search flag conflicts") {
  CHECK(run({"search", "--k", "3", "--n", "6", "--g6-file", "x.g6"}).code == 2);
  CHECK(run({"search", "--k", "3", "--method", "anneal", "--g6-file", "x.g6"}).code == 2);
  CHECK(run({"search", "--k", "3", "--method", "stream"}).code == 2);
  CHECK(run({"search", "--k", "3"}).code == 2);
  CHECK(run({"search", "--k", "3", "--n", "8", "--method", "exhaustive"}).code == 2);
  CHECK(run({"search", "--k", "3", "--n", "6", "--method", "tabu"}).code == 2);
  CHECK(run({"search", "--k", "7", "--n", "6", "--method", "exhaustive"}).code == 2);
  CHECK(run({"search", "--k", "3", "--n", "6", "--budget", "0"}).code == 2);
  CHECK(run({"search", "--k", "2", "--g6-file", "/nonexistent/file.g6"}).code == 2);
}

TEST_CASE("a stream that only ties the record writes no witness") {
  const auto file = temp_file("ico.g6");
  const auto witness = temp_file("witness.json");
  {
    std::ofstream f(file);
    f << g6_encode(icosahedron()) << '\n';
  }
  auto r = run({"search", "--k", "4", "--g6-file", file.string(), "--witness-file", witness.string()});
  CHECK(r.code == 0);
  CHECK_FALSE(std::filesystem::exists(witness));
  std::filesystem::remove(file);
}

TEST_CASE("campaign command") {
  auto r = run({"campaign", "--n-range", "6,9", "--budget", "4000", "--restarts", "2", "--seeds", "1,2"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("exceeded") == false);
  CHECK(j.at("per_n").size() == 2);
  CHECK(j.at("global_best").at("best_ratio").get<double>() <= 1.0 / 3 + 1e-9);
  CHECK_FALSE(j.contains("witness"));

  r = run({"campaign"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("per_n").empty());
  CHECK(run({"campaign", "--n-range", "2..4"}).code == 2);
}

TEST_CASE("verify command") {
  auto r = run({"verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("bound table") != std::string::npos);

  const std::string corrupted = g6_encode(icosahedron().with_edge_toggled(0, 1).with_edge_toggled(0, 6));
  r = run({"verify", "--icosahedron-g6", corrupted});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL  icosahedron spectrum") != std::string::npos);

  r = run({"verify", "--json"});
  const Json j = Json::parse(r.out);
  CHECK(j.at("passed") == true);
  CHECK(j.at("checks").size() >= 6);

  const auto cert_file = temp_file("cert.json");
  {
    std::ofstream f(cert_file);
    f << run({"bound", "srg:243,132,81,60", "--k", "22", "--json"}).out;
  }
  CHECK(run({"verify", "--certificate", cert_file.string()}).code == 0);
  {
    Json forged = Json::parse(run({"bound", "srg:243,132,81,60", "--k", "22", "--json"}).out);
    forged["ratio"]["exact"] = "26/243";
    std::ofstream f(cert_file);
    f << forged.dump();
  }
  r = run({"verify", "--certificate", cert_file.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL  certificate") != std::string::npos);
  std::filesystem::remove(cert_file);
}
