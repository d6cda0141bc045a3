#include "coslab/identity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace coslab {

void IdentityReport::accumulate(double computed, double expected) {
  const double abs_err = std::abs(computed - expected);
  const double mag = std::abs(expected);
  const double rel_err = mag > 0.0 ? abs_err / mag : abs_err;
  max_abs_err = std::max(max_abs_err, abs_err);
  max_rel_err = std::max(max_rel_err, rel_err);
  max_mixed_err = std::max(max_mixed_err, mag > 1.0 ? rel_err : abs_err);
  if (!std::isfinite(computed) || !std::isfinite(expected)) {
    max_abs_err = max_rel_err = max_mixed_err = std::numeric_limits<double>::infinity();
  }
}

void IdentityReport::accumulate(std::span<const double> computed, std::span<const double> expected) {
  const std::size_t count = std::min(computed.size(), expected.size());
  for (std::size_t k = 0; k < count; ++k) accumulate(computed[k], expected[k]);
  if (computed.size() != expected.size()) {
    max_abs_err = max_rel_err = max_mixed_err = std::numeric_limits<double>::infinity();
  }
}

double IdentityReport::metric_value() const {
  switch (metric) {
    case ErrorMetric::absolute: return max_abs_err;
    case ErrorMetric::relative: return max_rel_err;
    case ErrorMetric::mixed: break;
  }
  return max_mixed_err;
}

bool IdentityReport::finalize(double tol) {
  tolerance = tol;
  pass = metric_value() <= tol;
  return pass;
}

std::string to_string(ErrorMetric m) {
  switch (m) {
    case ErrorMetric::absolute: return "absolute";
    case ErrorMetric::relative: return "relative";
    case ErrorMetric::mixed: break;
  }
  return "mixed";
}

void to_json(nlohmann::json& j, const IdentityParams& p) {
  j = nlohmann::json::object();
  if (p.n) j["n"] = *p.n;
  if (p.i) j["i"] = *p.i;
  if (p.alpha) j["alpha"] = *p.alpha;
  if (p.beta) j["beta"] = *p.beta;
  if (p.jmax) j["jmax"] = *p.jmax;
  if (p.band_limit) j["band_limit"] = *p.band_limit;
  if (p.seed) j["seed"] = *p.seed;
}

namespace {
// Infinity is not representable in JSON; report it as null.
nlohmann::json finite_or_null(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}
}  // namespace

void to_json(nlohmann::json& j, const IdentityReport& r) {
  j = nlohmann::json{{"identity", r.identity},
                     {"params", r.params},
                     {"max_abs_err", finite_or_null(r.max_abs_err)},
                     {"max_rel_err", finite_or_null(r.max_rel_err)},
                     {"metric", to_string(r.metric)},
                     {"tolerance", r.tolerance},
                     {"pass", r.pass}};
  if (!r.note.empty()) j["note"] = r.note;
}

void to_json(nlohmann::json& j, const SkippedCheck& s) {
  j = nlohmann::json{{"identity", s.identity}, {"params", s.params}, {"reason", s.reason}};
}

void sort_reports(std::vector<IdentityReport>& reports) {
  auto key = [](const IdentityReport& r) {
    constexpr double none = -std::numeric_limits<double>::infinity();
    return std::make_tuple(r.identity, r.params.n.value_or(-1), r.params.i.value_or(-1),
                           r.params.alpha.value_or(none), r.params.beta.value_or(none),
                           r.params.jmax.value_or(-1), r.params.band_limit.value_or(-1),
                           r.params.seed.value_or(0));
  };
  std::stable_sort(reports.begin(), reports.end(),
                   [&](const IdentityReport& a, const IdentityReport& b) { return key(a) < key(b); });
}

}  // namespace coslab
