#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qrr/series.hpp"

namespace qrr {

// sum over s >= 0 of (-1)^(sign.s) q^((s^T A2 s + L2.s)/2) / prod_sets (q)_{sum s_i}.
// A2 and L2 hold twice the quadratic and linear forms, so half-integral
// linear coefficients stay exact.
struct MultisumSpec {
  std::string name;
  std::vector<std::string> var_names;
  std::vector<std::vector<Exponent>> A2;
  std::vector<Exponent> L2;
  std::vector<Exponent> sign_vec;
  std::vector<std::vector<int>> denom_sets;
  Exponent crossings = 0;
  std::vector<Exponent> target;  // multiset of h-indices; empty means 1

  int num_vars() const { return static_cast<int>(var_names.size()); }
};

// Shape, symmetry, nonnegativity, parity and growth checks. Throws
// InvalidSpec, NonIntegralExponent or NoGrowthDirection.
void validate_spec(const MultisumSpec& spec);

nlohmann::ordered_json spec_to_json(const MultisumSpec& spec);
// Throws ParseError on malformed input and InvalidSpec on a bad shape.
MultisumSpec spec_from_json(const nlohmann::ordered_json& j);
MultisumSpec spec_from_text(const std::string& text);

// The multisum to O(q^prec), prec >= 1.
TruncSeries eval_multisum(const MultisumSpec& spec, Exponent prec);

// (q)_inf^crossings times the multisum.
TruncSeries phi_series(const MultisumSpec& spec, Exponent prec);

// Product of h_b over the multiset.
TruncSeries rhs_series(const std::vector<Exponent>& target, Exponent prec);

}  // namespace qrr
