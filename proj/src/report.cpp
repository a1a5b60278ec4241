#include "hsb/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hsb {

void Report::check(const std::string& name, double residual, double tolerance) {
  records_.push_back({name, residual, tolerance, std::isfinite(residual) && residual <= tolerance});
}

void Report::require(const std::string& name, bool ok) { records_.push_back({name, ok ? 0.0 : 1.0, 0.0, ok}); }

std::vector<CheckRecord> Report::records() const {
  std::vector<CheckRecord> out = records_;
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

bool Report::passed() const {
  return std::all_of(records_.begin(), records_.end(), [](const auto& r) { return r.pass; });
}

std::string Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : records())
    checks.push_back({{"name", r.name}, {"residual", r.residual}, {"tolerance", r.tolerance}, {"pass", r.pass}});
  nlohmann::json j = {{"command", command_}, {"parameters", parameters_}, {"results", results_},
                      {"checks", std::move(checks)},  {"pass", passed()}};
  j["seed"] = seed_ ? nlohmann::json(*seed_) : nlohmann::json(nullptr);
  return canonical_dump(j);
}

namespace {

void dump(const nlohmann::json& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map order: sorted keys
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(it.key()).dump();
        out += ':';
        dump(it.value(), out);
      }
      out += '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      out += '[';
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k > 0) out += ',';
        dump(j[k], out);
      }
      out += ']';
      break;
    }
    case nlohmann::json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      break;
    }
    default: out += j.dump();
  }
}

}  // namespace

std::string canonical_dump(const nlohmann::json& j) {
  std::string out;
  dump(j, out);
  return out;
}

}  // namespace hsb
