#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hsb {

struct CheckRecord {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
};

/// Outcome of a CLI command: named residual checks plus free-form results.
class Report {
public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  /// Passes iff residual is finite and <= tolerance.
  void check(const std::string& name, double residual, double tolerance);
  /// Boolean check recorded with residual 0 or 1 against tolerance 0.
  void require(const std::string& name, bool ok);

  nlohmann::json& parameters() noexcept { return parameters_; }
  nlohmann::json& results() noexcept { return results_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  const std::string& command() const noexcept { return command_; }
  /// Sorted by name.
  std::vector<CheckRecord> records() const;
  bool passed() const;

  /// Canonical encoding: sorted keys, doubles printed with 17 significant digits.
  std::string to_json() const;

private:
  std::string command_;
  nlohmann::json parameters_ = nlohmann::json::object();
  nlohmann::json results_ = nlohmann::json::object();
  std::vector<CheckRecord> records_;
  std::optional<std::uint64_t> seed_;
};

/// Canonical dump used for reports: no whitespace, sorted keys, %.17g doubles,
/// non-finite numbers as null.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace hsb
