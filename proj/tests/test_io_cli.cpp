#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "coslab/errors.hpp"
#include "coslab/io.hpp"
#include "coslab/s2_verify.hpp"
#include "coslab/zonal.hpp"

using namespace coslab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("coslab_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("JSON round trips") {
  const auto g = S2Grid::make(6, 12);
  const auto f = synthesize(random_coeffs(4, 1, false), g);
  const auto f2 = grid_function_from_json(json(f));
  CHECK(f2.grid == f.grid);
  CHECK(f2.values == f.values);

  const auto c = random_coeffs(5, 2, true);
  CHECK(harmonic_coeffs_from_json(json(c)).c == c.c);

  const GrassmannFunctionS2 phi{GrassmannFunctionS2::Kind::planes, even_part(f)};
  const auto phi2 = grassmann_from_json(json(phi));
  CHECK(phi2.kind == phi.kind);
  CHECK(phi2.repr.values == phi.repr.values);

  const ZonalFunction z{4, {1.0, 0.5, -0.25}};
  const auto z2 = zonal_from_json(json(z));
  CHECK(z2.n == 4);
  CHECK(z2.coeffs == z.coeffs);

  const auto r = representation_from_json(json(z));
  CHECK(std::holds_alternative<ZonalFunction>(r));
}

TEST_CASE("malformed and unknown inputs are rejected") {
  CHECK_THROWS_AS(representation_from_json(json{{"values", {1, 2}}}), ParseError);
  CHECK_THROWS_AS(representation_from_json(json{{"kind", "tensor"}}), RepresentationMismatch);
  CHECK_THROWS_AS(grid_function_from_json(json{{"kind", "grid"}, {"grid", {{"n_theta", 2}, {"n_phi", 4}}},
                                               {"values", {1.0, 2.0}}}),
                  ParseError);
  CHECK_THROWS_AS(zonal_from_json(json{{"kind", "grid"}}), RepresentationMismatch);
}

TEST_CASE("multiplier subcommand") {
  auto r = run({"multiplier", "--family", "m", "--n", "3", "--alpha", "0.5", "--jmax", "2"});
  CHECK(r.code == cli::ok);
  CHECK(r.out.rfind("j,value\n0,4\n1,0\n2,", 0) == 0);

  r = run({"multiplier", "--family", "q", "--alpha", "0", "--n", "5", "--jmax", "4"});
  CHECK(r.code == cli::ok);
  CHECK(r.out == "j,value\n0,1\n1,0\n2,1\n3,0\n4,1\n");

  r = run({"multiplier", "--family", "m", "--alpha", "1"});
  CHECK(r.code == cli::excluded_parameter);
  CHECK(r.err.find("{1, 3, 5, ...}") != std::string::npos);

  CHECK(run({"multiplier", "--family", "m"}).code == cli::parse_error);
  CHECK(run({"multiplier", "--family", "m", "--alpha", "abc"}).code == cli::parse_error);
  CHECK(run({"no-such-command"}).code == cli::parse_error);

  r = run({"multiplier", "--family", "funk", "--n", "3", "--jmax", "2", "--format", "json"});
  CHECK(r.code == cli::ok);
  const auto j = json::parse(r.out);
  CHECK(j.at("rows").size() == 3);
}

TEST_CASE("constant subcommand") {
  auto r = run({"constant", "--name", "lambda2", "--n", "3", "--i", "2"});
  CHECK(r.code == cli::ok);
  CHECK(std::stod(r.out) == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)));
  CHECK(run({"constant", "--name", "bogus"}).code == cli::parse_error);
  CHECK(run({"constant", "--list"}).out.find("koldobsky_tilde") != std::string::npos);
}

TEST_CASE("apply subcommand") {
  TempDir dir;
  SUBCASE("funk of the t^2 zonal profile") {
    const auto t2 = zonal_project(3, [](double t) { return t * t; }, 2);
    write_json_file(dir / "t2.json", json(t2));
    REQUIRE(run({"apply", "--op", "funk", dir / "t2.json", dir / "out.json"}).code == cli::ok);
    const auto out = read_json_file(dir / "out.json");
    const auto g = zonal_from_json(out);
    for (double t : {-0.8, 0.0, 0.5}) CHECK(g(t) == doctest::Approx((1.0 - t * t) / 2.0).epsilon(1e-13));
    CHECK(out.at("meta").at("op") == "funk");
  }
  SUBCASE("direct M^2 of the constant grid") {
    write_json_file(dir / "one.json", json(GridFunction::constant(S2Grid::make(8, 16), 1.0)));
    REQUIRE(run({"apply", "--op", "cosine", "--method", "direct", "--alpha", "2", dir / "one.json",
                 dir / "out.json"})
                .code == cli::ok);
    const auto g = grid_function_from_json(read_json_file(dir / "out.json"));
    for (double v : g.values) CHECK(v == doctest::Approx(-2.0 * std::sqrt(std::numbers::pi)).epsilon(1e-13));
    CHECK(run({"apply", "--op", "cosine", "--method", "direct", "--alpha", "5", dir / "one.json", dir / "x.json"})
              .code == cli::excluded_parameter);
    CHECK(run({"apply", "--op", "dualradon", dir / "one.json", dir / "x.json"}).code ==
          cli::representation_mismatch);
  }
  SUBCASE("Q^0 output is byte-stable") {
    write_json_file(dir / "c.json", json(random_coeffs(6, 3, false)));
    REQUIRE(run({"apply", "--op", "qalpha", "--alpha", "0", dir / "c.json", dir / "a.json"}).code == cli::ok);
    REQUIRE(run({"apply", "--op", "qalpha", "--alpha", "0", dir / "c.json", dir / "b.json"}).code == cli::ok);
    CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
    const auto even = harmonic_coeffs_from_json(read_json_file(dir / "a.json"));
    const auto in = random_coeffs(6, 3, false);
    for (int j = 0; j <= 6; ++j) {
      for (int k = -j; k <= j; ++k) CHECK(even.at(j, k) == (j % 2 == 0 ? in.at(j, k) : 0.0));
    }
  }
  SUBCASE("missing and malformed files") {
    CHECK(run({"apply", "--op", "funk", dir / "missing.json", dir / "x.json"}).code == cli::parse_error);
    std::ofstream(dir / "bad.json") << "{not json";
    CHECK(run({"apply", "--op", "funk", dir / "bad.json", dir / "x.json"}).code == cli::parse_error);
  }
}

TEST_CASE("body subcommands") {
  TempDir dir;
  REQUIRE(run({"body", "make", "--shape", "ball", "--r", "2", "--n", "3", dir / "b.json"}).code == cli::ok);
  REQUIRE(run({"body", "intersect", dir / "b.json", dir / "ib.json"}).code == cli::ok);
  const auto ib = star_body_from_json(read_json_file(dir / "ib.json"));
  for (double v : ib.grid().values) CHECK(v == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-13));

  REQUIRE(run({"body", "make", "--shape", "ball", "--r", "1", "--n", "3", dir / "unit.json"}).code == cli::ok);
  auto r = run({"body", "classify", "--alpha-min", "-3", "--alpha-max", "2.9", "--steps", "59", "--csv",
                dir / "sweep.csv", dir / "unit.json"});
  CHECK(r.code == cli::ok);
  const auto report = json::parse(r.out);
  CHECK(report.at("results").size() == 59);
  std::istringstream csv(slurp(dir / "sweep.csv"));
  std::string line;
  int lines = 0;
  while (std::getline(csv, line)) ++lines;
  CHECK(lines == 60);

  r = run({"body", "classify", "--alpha", "0", dir / "unit.json"});
  CHECK(r.code == cli::ok);
  CHECK(json::parse(r.out).at("skipped").size() == 1);

  REQUIRE(run({"body", "make", "--shape", "ellipsoid", "--axes", "1,1.5,2", "--n", "3", dir / "L.json"}).code ==
          cli::ok);
  REQUIRE(run({"body", "intersect", "--i", "2", dir / "L.json", dir / "K.json"}).code == cli::ok);
  r = run({"body", "pair-check", "--i", "2", dir / "K.json", dir / "L.json"});
  CHECK(r.code == cli::ok);
  CHECK(json::parse(r.out).at("fail_count") == 0);
  CHECK(run({"body", "pair-check", "--i", "2", dir / "unit.json", dir / "unit.json"}).code ==
        cli::identity_failure);

  auto bad = GridFunction::constant(S2Grid::make(8, 16), 1.0);
  bad.values[3] = -1.0;
  write_json_file(dir / "neg.json", json{{"n", 3}, {"repr_kind", "grid"}, {"payload", json(bad)}});
  CHECK(run({"body", "intersect", dir / "neg.json", dir / "x.json"}).code == cli::rejected_body);
  CHECK(run({"body", "make", "--shape", "ball", "--r", "-1", dir / "x.json"}).code == cli::parse_error);
}

TEST_CASE("verify subcommand") {
  auto r = run({"verify", "--suite", "multipliers", "--n", "2,3", "--jmax", "50"});
  CHECK(r.code == cli::ok);
  const auto j = json::parse(r.out);
  CHECK(j.at("fail_count") == 0);
  CHECK(j.at("pass_count").get<int>() > 0);
  CHECK(j.at("results").size() == static_cast<std::size_t>(j.at("pass_count").get<int>()));
  CHECK(j.at("config").at("multipliers").at("jmax") == 50);

  // Deterministic apart from the wall time.
  auto a = json::parse(run({"verify", "--suite", "s2", "--groups", "duality", "--samples", "2"}).out);
  auto b = json::parse(run({"verify", "--suite", "s2", "--groups", "duality", "--samples", "2"}).out);
  a.erase("wall_time");
  b.erase("wall_time");
  CHECK(a == b);

  CHECK(run({"verify", "--suite", "bogus"}).code == cli::parse_error);
  CHECK(run({"verify", "--suite", "s2", "--groups", "bogus"}).code == cli::parse_error);
  // A tolerance no quadrature can meet turns into exit 1.
  CHECK(run({"verify", "--suite", "s2", "--groups", "cross_engine", "--samples", "1", "--tol", "1e-20"}).code ==
        cli::identity_failure);
}

TEST_CASE("config file supplies defaults the command line can override") {
  TempDir dir;
  std::ofstream(dir / "cfg.txt") << "# defaults\njmax = 3\nformat=json\nlmax=99\n";
  const auto flags = cli::config_flags(dir / "cfg.txt");
  CHECK(flags.size() == 6);
  auto r = run({"--config", dir / "cfg.txt", "multiplier", "--family", "m", "--alpha", "0.5"});
  REQUIRE(r.code == cli::ok);
  CHECK(json::parse(r.out).at("rows").size() == 4);
  r = run({"--config", dir / "cfg.txt", "multiplier", "--family", "m", "--alpha", "0.5", "--jmax", "1"});
  CHECK(json::parse(r.out).at("rows").size() == 2);
  CHECK(run({"--config", dir / "missing.txt", "multiplier", "--family", "funk"}).code == cli::parse_error);
}
