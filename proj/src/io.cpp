#include "coslab/io.hpp"

#include <fstream>
#include <sstream>

#include "coslab/errors.hpp"

namespace coslab {
namespace {

using nlohmann::json;

template <class F>
auto parse_guard(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

S2Grid grid_from_json(const json& j) {
  return S2Grid::make(j.at("n_theta").get<int>(), j.at("n_phi").get<int>());
}

std::vector<double> values_for(const json& j, const S2Grid& g) {
  auto v = j.at("values").get<std::vector<double>>();
  if (v.size() != g.size()) {
    std::ostringstream msg;
    msg << "expected " << g.size() << " grid values, got " << v.size();
    throw ParseError(msg.str());
  }
  return v;
}

void require_kind(const json& j, const char* kind) {
  if (j.contains("kind") && j.at("kind") != kind) {
    throw RepresentationMismatch(std::string("expected a '") + kind + "' representation, got '" +
                                 j.at("kind").get<std::string>() + "'");
  }
}

}  // namespace

void to_json(json& j, const S2Grid& g) { j = json{{"n_theta", g.n_theta}, {"n_phi", g.n_phi}}; }

void to_json(json& j, const GridFunction& f) {
  j = json{{"kind", "grid"}, {"grid", f.grid}, {"values", f.values}};
}

void to_json(json& j, const HarmonicCoeffs& c) {
  j = json{{"kind", "harmonic"}, {"L", c.L}, {"ordering", "j-major,k-ascending"}, {"coeffs", c.c}};
}

void to_json(json& j, const GrassmannFunctionS2& g) {
  j = json{{"kind", "grassmann"},
           {"grassmann", g.kind == GrassmannFunctionS2::Kind::lines ? "lines" : "planes"},
           {"grid", g.repr.grid},
           {"values", g.repr.values}};
}

void to_json(json& j, const ZonalFunction& z) {
  j = json{{"kind", "zonal"}, {"n", z.n}, {"basis", "orthonormal-gegenbauer-prob"}, {"coeffs", z.coeffs}};
}

void to_json(json& j, const StarBody& b) {
  j = json{{"n", b.n},
           {"repr_kind", b.is_grid() ? "grid" : "zonal"},
           {"payload", b.is_grid() ? json(b.grid()) : json(b.zonal())},
           {"meta", {{"shape", b.shape}, {"params", b.params}}}};
}

void to_json(json& j, const ClassVerdict& v) {
  j = json{{"alpha", v.alpha},          {"member", to_string(v.member)}, {"min_value", v.min_value},
           {"margin", v.margin},        {"smoothing_t", v.smoothing_t},  {"tail_energy", v.tail_energy},
           {"band_limit", v.band_limit}};
}

GridFunction grid_function_from_json(const json& j) {
  require_kind(j, "grid");
  return parse_guard("grid function", [&] {
    auto g = grid_from_json(j.at("grid"));
    auto v = values_for(j, g);
    return GridFunction{std::move(g), std::move(v)};
  });
}

HarmonicCoeffs harmonic_coeffs_from_json(const json& j) {
  require_kind(j, "harmonic");
  return parse_guard("harmonic coefficients", [&] {
    HarmonicCoeffs c(j.at("L").get<int>());
    auto v = j.at("coeffs").get<std::vector<double>>();
    if (v.size() != c.c.size()) throw ParseError("coefficient count does not match (L+1)^2");
    c.c = std::move(v);
    return c;
  });
}

GrassmannFunctionS2 grassmann_from_json(const json& j) {
  require_kind(j, "grassmann");
  return parse_guard("grassmann function", [&] {
    const auto kind = j.at("grassmann").get<std::string>();
    GrassmannFunctionS2 g;
    if (kind == "lines") g.kind = GrassmannFunctionS2::Kind::lines;
    else if (kind == "planes") g.kind = GrassmannFunctionS2::Kind::planes;
    else throw ParseError("grassmann must be 'lines' or 'planes'");
    auto grid = grid_from_json(j.at("grid"));
    auto v = values_for(j, grid);
    g.repr = GridFunction{std::move(grid), std::move(v)};
    return g;
  });
}

ZonalFunction zonal_from_json(const json& j) {
  require_kind(j, "zonal");
  return parse_guard("zonal function", [&] {
    ZonalFunction z{j.at("n").get<int>(), j.at("coeffs").get<std::vector<double>>()};
    if (z.n < 2 || z.coeffs.empty()) throw ParseError("zonal function needs n >= 2 and at least one coefficient");
    return z;
  });
}

StarBody star_body_from_json(const json& j) {
  return parse_guard("star body", [&] {
    StarBody b;
    b.n = j.at("n").get<int>();
    const auto kind = j.at("repr_kind").get<std::string>();
    if (kind == "grid") b.repr = grid_function_from_json(j.at("payload"));
    else if (kind == "zonal") b.repr = zonal_from_json(j.at("payload"));
    else throw ParseError("repr_kind must be 'grid' or 'zonal'");
    if (j.contains("meta")) {
      b.shape = j.at("meta").value("shape", "custom");
      b.params = j.at("meta").value("params", json::object());
    }
    if (b.is_grid() && b.n != 3) throw ParseError("grid bodies must have n = 3");
    if (!b.is_grid() && b.zonal().n != b.n) throw ParseError("zonal payload dimension differs from n");
    return b;
  });
}

Representation representation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("input has no 'kind' field");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "grid") return grid_function_from_json(j);
  if (kind == "harmonic") return harmonic_coeffs_from_json(j);
  if (kind == "grassmann") return grassmann_from_json(j);
  if (kind == "zonal") return zonal_from_json(j);
  throw RepresentationMismatch("unknown representation kind '" + kind + "'");
}

json to_json(const Representation& r) {
  return std::visit([](const auto& x) { return json(x); }, r);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace coslab
