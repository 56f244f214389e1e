#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qrr/series.hpp"

namespace qrr {

struct IdentityReport {
  std::string identity_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Exponent order = 0;
  bool verified = false;
  std::optional<Exponent> first_mismatch;
  std::vector<Coeff> lhs_prefix;
  std::vector<Coeff> rhs_prefix;
  std::int64_t runtime_ms = 0;
};

// Compares lhs and rhs to O(q^order) and fills in everything but the id and
// params. Prefixes start at the lowest exponent either side can reach.
IdentityReport compare_series(std::string id, nlohmann::ordered_json params, const TruncSeries& lhs,
                              const TruncSeries& rhs, Exponent order);

// {identity_id, params, order, verified, first_mismatch, runtime_ms}; the
// coefficient prefixes ride along as lhs_prefix/rhs_prefix.
nlohmann::ordered_json to_json(const IdentityReport& r);
IdentityReport report_from_json(const nlohmann::ordered_json& j);
std::string to_text(const IdentityReport& r);

// Big coefficients become JSON strings, everything else plain integers.
nlohmann::ordered_json coeff_to_json(const Coeff& c);
Coeff coeff_from_json(const nlohmann::ordered_json& j);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Runs body() -> IdentityReport and stamps the elapsed time on it.
template <class F>
IdentityReport timed(F&& body) {
  Stopwatch sw;
  IdentityReport r = body();
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

}  // namespace qrr
