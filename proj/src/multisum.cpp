#include "qrr/multisum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qrr/classical.hpp"
#include "qrr/error.hpp"
#include "qrr/qpoch.hpp"

namespace qrr {

using json = nlohmann::ordered_json;

void validate_spec(const MultisumSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.num_vars());
  auto bad = [&](const std::string& what) { throw Error(ErrorKind::InvalidSpec, spec.name + ": " + what); };
  if (spec.A2.size() != n || spec.L2.size() != n || spec.sign_vec.size() != n) bad("dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.A2[i].size() != n) bad("A2 is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (spec.A2[i][j] != spec.A2[j][i]) bad("A2 is not symmetric");
      if (i != j && spec.A2[i][j] < 0) bad("negative off-diagonal entry in A2");
    }
  }
  for (const auto& set : spec.denom_sets)
    for (int v : set)
      if (v < 0 || static_cast<std::size_t>(v) >= n) bad("denominator index out of range");
  for (Exponent t : spec.target)
    if (t < 1) bad("target h-index must be positive");
  if (spec.crossings < 0) bad("negative crossing number");
  for (std::size_t i = 0; i < n; ++i) {
    const Exponent a = spec.A2[i][i], l = spec.L2[i];
    // Own term (a x^2 + l x)/2 must be a nonnegative integer for all x >= 0.
    if ((a + l) % 2 != 0) {
      throw Error(ErrorKind::NonIntegralExponent, spec.name + ": odd exponent in " + spec.var_names[i]);
    }
    if (a < 0 || a + l < 0) bad("exponent can go negative in " + spec.var_names[i]);
    if (a == 0 && l <= 0) {
      throw Error(ErrorKind::NoGrowthDirection, spec.name + ": no growth in " + spec.var_names[i]);
    }
  }
}

json spec_to_json(const MultisumSpec& spec) {
  json j;
  j["schema_version"] = 1;
  if (!spec.name.empty()) j["name"] = spec.name;
  j["vars"] = spec.var_names;
  j["A2"] = spec.A2;
  j["L2"] = spec.L2;
  j["sign"] = spec.sign_vec;
  j["denoms"] = spec.denom_sets;
  j["crossings"] = spec.crossings;
  j["target"] = spec.target;
  return j;
}

MultisumSpec spec_from_json(const json& j) {
  MultisumSpec s;
  try {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "spec must be a JSON object");
    if (j.value("schema_version", 0) != 1) throw Error(ErrorKind::ParseError, "unsupported schema_version");
    s.name = j.value("name", std::string{});
    j.at("vars").get_to(s.var_names);
    j.at("A2").get_to(s.A2);
    j.at("L2").get_to(s.L2);
    j.at("sign").get_to(s.sign_vec);
    j.at("denoms").get_to(s.denom_sets);
    j.at("crossings").get_to(s.crossings);
    j.at("target").get_to(s.target);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  validate_spec(s);
  return s;
}

MultisumSpec spec_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return spec_from_json(j);
}

namespace {

struct Den {
  std::vector<std::pair<std::size_t, Exponent>> earlier;  // (depth, multiplicity)
  Exponent self = 0;                                      // multiplicity of the current variable
};

struct Level {
  Exponent a = 0, l = 0;
  bool odd = false;
  std::vector<std::pair<std::size_t, Exponent>> cross;  // (depth, A2 entry)
  std::vector<Den> dens;                                 // sets completed at this depth
  std::vector<std::size_t> frontier;                     // depths the remaining sum depends on
};

// Depth-first evaluation with the tail sums memoized on the variables they
// actually depend on. R_k(frontier) is the sum over variables k.. n-1.
class Evaluator {
 public:
  Evaluator(const MultisumSpec& spec) {
    const auto n = static_cast<std::size_t>(spec.num_vars());
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return spec.A2[x][x] > spec.A2[y][y]; });
    std::vector<std::size_t> depth(n);
    for (std::size_t k = 0; k < n; ++k) depth[order[k]] = k;

    levels_.resize(n);
    memo_.resize(n);
    std::vector<std::vector<bool>> linked(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t v = order[k];
      auto& lv = levels_[k];
      lv.a = spec.A2[v][v];
      lv.l = spec.L2[v];
      lv.odd = spec.sign_vec[v] % 2 != 0;
      for (std::size_t j = 0; j < k; ++j) {
        const Exponent c = spec.A2[v][order[j]];
        if (c != 0) {
          lv.cross.emplace_back(j, c);
          linked[j][k] = linked[k][j] = true;
        }
      }
    }
    for (const auto& set : spec.denom_sets) {
      if (set.empty()) continue;
      std::map<std::size_t, Exponent> mult;
      for (int v : set) ++mult[depth[static_cast<std::size_t>(v)]];
      const std::size_t last = mult.rbegin()->first;
      Den d;
      for (auto [dp, m] : mult) {
        if (dp == last) d.self = m;
        else d.earlier.emplace_back(dp, m);
        for (const auto& other : mult) linked[dp][other.first] = true;
      }
      levels_[last].dens.push_back(std::move(d));
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < k; ++j) {
        bool needed = false;
        for (std::size_t i = k; i < n && !needed; ++i) needed = linked[j][i];
        if (needed) levels_[k].frontier.push_back(j);
      }
    vals_.assign(n, 0);
  }

  std::vector<Coeff> run(Exponent prec) { return tail(0, prec); }

 private:
  // Coefficients 0 .. need-1 of R_k at the current values of earlier depths.
  // The returned vector may be longer than need.
  const std::vector<Coeff>& tail(std::size_t k, Exponent need) {
    if (k == levels_.size()) {
      if (static_cast<Exponent>(one_.size()) < need) {
        one_.assign(static_cast<std::size_t>(need), Coeff{});
        one_[0] = 1;
      }
      return one_;
    }
    const auto& lv = levels_[k];
    std::vector<Exponent> key;
    key.reserve(lv.frontier.size());
    for (std::size_t j : lv.frontier) key.push_back(vals_[j]);
    auto& slot = memo_[k][key];
    if (static_cast<Exponent>(slot.size()) >= need) return slot;

    std::vector<Coeff> acc(static_cast<std::size_t>(need));
    Exponent cross = 0;
    for (auto [j, c] : lv.cross) cross += c * vals_[j];
    std::vector<Coeff> w;
    for (Exponent x = 0;; ++x) {
      const Exponent e = (lv.a * x * x + lv.l * x) / 2 + x * cross;
      if (e >= need) break;  // e is nondecreasing in x
      vals_[k] = x;
      const Exponent len = need - e;
      const auto& sub = tail(k + 1, len);
      w.assign(sub.begin(), sub.begin() + len);
      for (const auto& d : lv.dens) {
        Exponent m = d.self * x;
        for (auto [j, mult] : d.earlier) m += mult * vals_[j];
        div_qpoch_inplace(w, m);
      }
      add_shifted(acc, w, e, lv.odd && x % 2 != 0 ? -1 : 1);
    }
    vals_[k] = 0;
    // The recursion never touches memo_[k], so slot is still valid.
    slot = std::move(acc);
    return slot;
  }

  std::vector<Level> levels_;
  std::vector<std::map<std::vector<Exponent>, std::vector<Coeff>>> memo_;
  std::vector<Exponent> vals_;
  std::vector<Coeff> one_;
};

}  // namespace

TruncSeries eval_multisum(const MultisumSpec& spec, Exponent prec) {
  validate_spec(spec);
  if (prec < 1) throw Error(ErrorKind::InvalidArgument, "order must be at least 1");
  Evaluator ev(spec);
  auto c = ev.run(prec);
  c.resize(static_cast<std::size_t>(prec));
  return TruncSeries::from_coeffs(std::move(c), 0);
}

TruncSeries phi_series(const MultisumSpec& spec, Exponent prec) {
  auto s = eval_multisum(spec, prec);
  return ts_pow(qpoch_inf(prec), static_cast<unsigned>(spec.crossings)) * s;
}

TruncSeries rhs_series(const std::vector<Exponent>& target, Exponent prec) {
  TruncSeries r = TruncSeries::one(prec);
  for (Exponent b : target) {
    if (b < 1) throw Error(ErrorKind::InvalidArgument, "h-index must be positive");
    r = r * h_series(b, prec);
  }
  return r;
}

}  // namespace qrr
