#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace coslab {

/// Parameters an identity check was run with. Unset fields are omitted from JSON.
struct IdentityParams {
  std::optional<int> n;
  std::optional<int> i;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<int> jmax;
  std::optional<int> band_limit;
  std::optional<std::uint64_t> seed;
};

/// How the per-sample errors of a check are turned into the pass criterion.
enum class ErrorMetric {
  mixed,     ///< relative where |expected| > 1, absolute otherwise
  absolute,
  relative,
};

struct IdentityReport {
  std::string identity;
  IdentityParams params;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  double max_mixed_err = 0.0;
  ErrorMetric metric = ErrorMetric::mixed;
  double tolerance = 0.0;
  bool pass = true;
  std::string note;

  IdentityReport() = default;
  explicit IdentityReport(std::string name, IdentityParams p = {})
      : identity(std::move(name)), params(std::move(p)) {}

  /// Folds one (computed, expected) pair into the running maxima.
  void accumulate(double computed, double expected);
  void accumulate(std::span<const double> computed, std::span<const double> expected);
  /// Sets `pass` from the selected metric. Returns pass.
  bool finalize(double tol);
  double metric_value() const;
};

/// A parameter combination that was not evaluated, with the reason.
struct SkippedCheck {
  std::string identity;
  IdentityParams params;
  std::string reason;
};

void to_json(nlohmann::json& j, const IdentityParams& p);
void to_json(nlohmann::json& j, const IdentityReport& r);
void to_json(nlohmann::json& j, const SkippedCheck& s);
std::string to_string(ErrorMetric m);

/// Sorts reports by (identity, params) so serialized output is deterministic.
void sort_reports(std::vector<IdentityReport>& reports);

}  // namespace coslab
