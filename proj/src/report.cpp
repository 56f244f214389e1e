#include "qrr/report.hpp"

#include <limits>
#include <sstream>

#include "qrr/error.hpp"

namespace qrr {

namespace {

constexpr std::size_t kPrefixLength = 8;

std::vector<Coeff> window(const TruncSeries& s, Exponent from, Exponent order) {
  std::vector<Coeff> out;
  for (Exponent e = from; e < order && out.size() < kPrefixLength; ++e) out.push_back(s[e]);
  return out;
}

}  // namespace

IdentityReport compare_series(std::string id, nlohmann::ordered_json params, const TruncSeries& lhs,
                              const TruncSeries& rhs, Exponent order) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.params = std::move(params);
  r.order = order;
  const Agreement a = equal_to_order(lhs, rhs, order);
  r.verified = a.equal;
  r.first_mismatch = a.first_mismatch;
  const Exponent lo = std::min({lhs.offset(), rhs.offset(), Exponent{0}});
  r.lhs_prefix = window(lhs, lo, order);
  r.rhs_prefix = window(rhs, lo, order);
  return r;
}

nlohmann::ordered_json coeff_to_json(const Coeff& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

Coeff coeff_from_json(const nlohmann::ordered_json& j) {
  if (j.is_string()) return Coeff(j.get<std::string>());
  if (j.is_number_integer()) return Coeff(j.get<std::int64_t>());
  throw Error(ErrorKind::ParseError, "coefficient must be an integer or a decimal string");
}

nlohmann::ordered_json to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["identity_id"] = r.identity_id;
  j["params"] = r.params;
  j["order"] = r.order;
  j["verified"] = r.verified;
  j["first_mismatch"] = r.first_mismatch ? nlohmann::ordered_json(*r.first_mismatch) : nlohmann::ordered_json();
  j["runtime_ms"] = r.runtime_ms;
  auto prefix = [](const std::vector<Coeff>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : v) arr.push_back(coeff_to_json(c));
    return arr;
  };
  j["lhs_prefix"] = prefix(r.lhs_prefix);
  j["rhs_prefix"] = prefix(r.rhs_prefix);
  return j;
}

IdentityReport report_from_json(const nlohmann::ordered_json& j) {
  IdentityReport r;
  try {
    r.identity_id = j.at("identity_id").get<std::string>();
    r.params = j.at("params");
    r.order = j.at("order").get<Exponent>();
    r.verified = j.at("verified").get<bool>();
    if (!j.at("first_mismatch").is_null()) r.first_mismatch = j.at("first_mismatch").get<Exponent>();
    r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    if (j.contains("lhs_prefix"))
      for (const auto& c : j["lhs_prefix"]) r.lhs_prefix.push_back(coeff_from_json(c));
    if (j.contains("rhs_prefix"))
      for (const auto& c : j["rhs_prefix"]) r.rhs_prefix.push_back(coeff_from_json(c));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report: ") + e.what());
  }
  return r;
}

std::string to_text(const IdentityReport& r) {
  std::ostringstream os;
  os << (r.verified ? "ok   " : "FAIL ") << r.identity_id;
  if (!r.params.empty()) os << ' ' << r.params.dump();
  os << "  O(q^" << r.order << ")";
  if (r.first_mismatch) os << "  first mismatch at q^" << *r.first_mismatch;
  os << "  " << r.runtime_ms << " ms";
  return os.str();
}

}  // namespace qrr
