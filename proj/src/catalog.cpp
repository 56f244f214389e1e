#include "qrr/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "qrr/error.hpp"

namespace qrr {

namespace {

using json = nlohmann::ordered_json;

class SpecBuilder {
 public:
  SpecBuilder(std::string name, std::vector<std::string> vars) {
    s_.name = std::move(name);
    s_.var_names = std::move(vars);
    const auto n = s_.var_names.size();
    s_.A2.assign(n, std::vector<Exponent>(n, 0));
    s_.L2.assign(n, 0);
    s_.sign_vec.assign(n, 0);
    s_.crossings = static_cast<Exponent>(n);
    // Every variable carries its own (q)_x.
    for (std::size_t i = 0; i < n; ++i) s_.denom_sets.push_back({static_cast<int>(i)});
  }

  int idx(const std::string& v) const {
    auto it = std::find(s_.var_names.begin(), s_.var_names.end(), v);
    if (it == s_.var_names.end()) throw Error(ErrorKind::InvalidSpec, s_.name + ": no variable " + v);
    return static_cast<int>(it - s_.var_names.begin());
  }

  // x (k x + m) / 2
  SpecBuilder& half(const std::string& v, Exponent k, Exponent m) {
    const int i = idx(v);
    s_.A2[i][i] += k;
    s_.L2[i] += m;
    return *this;
  }
  SpecBuilder& cross(const std::string& u, const std::string& v) {
    const int i = idx(u), j = idx(v);
    s_.A2[i][j] += 1;
    s_.A2[j][i] += 1;
    return *this;
  }
  SpecBuilder& lin(const std::string& v) {
    s_.L2[idx(v)] += 2;
    return *this;
  }
  SpecBuilder& den(const std::string& u, const std::string& v) {
    s_.denom_sets.push_back({idx(u), idx(v)});
    return *this;
  }
  SpecBuilder& sign(const std::string& v) {
    s_.sign_vec[idx(v)] = 1;
    return *this;
  }
  SpecBuilder& target(std::vector<Exponent> t) {
    s_.target = std::move(t);
    return *this;
  }

  MultisumSpec done() const {
    validate_spec(s_);
    return s_;
  }

 private:
  MultisumSpec s_;
};

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Compact transcription for single-letter variables:
//   halves "a:5:3" is a(5a+3)/2, pairs "ab" are products for cross terms and
//   two-variable denominators.
MultisumSpec transcribe(const std::string& name, const std::string& vars, const std::string& halves,
                        const std::string& crosses, const std::string& lins, const std::string& dens,
                        const std::string& signs, std::vector<Exponent> target) {
  std::vector<std::string> vs;
  for (char c : vars) vs.emplace_back(1, c);
  SpecBuilder b(name, vs);
  for (const auto& h : words(halves)) {
    std::istringstream in(h);
    std::string v, k, m;
    std::getline(in, v, ':');
    std::getline(in, k, ':');
    std::getline(in, m, ':');
    b.half(v, std::stoll(k), std::stoll(m));
  }
  for (const auto& w : words(crosses)) b.cross(w.substr(0, 1), w.substr(1, 1));
  for (const auto& w : words(lins)) b.lin(w);
  for (const auto& w : words(dens)) b.den(w.substr(0, 1), w.substr(1, 1));
  for (const auto& w : words(signs)) b.sign(w);
  return b.target(std::move(target)).done();
}

MultisumSpec fixed_spec(const std::string& key) {
  if (key == "5_1")
    return transcribe(key, "abcde", "a:5:3", "ab ac ad ae bc cd de", "b c d e", "ab ac ad ae", "a", {5});
  if (key == "5_2")
    return transcribe(key, "abcde", "a:4:2 b:2:0", "ac ad ae bc cd de", "c d e", "bc ac ad ae", "", {4});
  if (key == "6_2")
    return transcribe(key, "abcdef", "f:4:2 e:3:1", "ab af bc bf cd ce cf de", "a b c d", "af bf ce cf de", "e",
                      {3, 4});
  if (key == "7_1")
    return transcribe(key, "abcdefg", "a:7:5", "ab ac ad ae af ag bc cd de ef fg", "b c d e f g",
                      "ab ac ad ae af ag", "a", {7});
  if (key == "7_2")
    return transcribe(key, "abcdefg", "a:6:4 b:2:0", "bc ac ad ae af ag cd de ef fg", "c d e f g",
                      "bc ac ad ae af ag", "", {6});
  if (key == "7_4")
    return transcribe(key, "abcdefg", "f:4:2 g:4:2", "ab ag bc bg cd cf cg de df ef", "a b c d e",
                      "ag bg cf cg df ef", "", {4, 4});
  if (key == "7_7")
    return transcribe(key, "abcdefg", "e:3:1 f:3:1 g:3:1", "ab ad ae af bf cd cg de dg", "a b c d",
                      "ae de af bf cg dg", "e f g", {3, 3, 3});
  if (key == "8_2")
    return transcribe(key, "abcdefgh", "a:6:4 b:3:1", "ad ae af ag ah bc bd cd de ef fg gh", "c d e f g h",
                      "bc bd ad ae af ag ah", "b", {3, 6});
  if (key == "8_4")
    return transcribe(key, "abcdefgh", "e:3:1 c:2:0 d:2:0 f:2:0 g:2:0 h:2:0", "ae be ab bc bd af ag ah", "a b",
                      "ae af ag ah bc bd be", "e", {3});
  if (key == "m3_1") return transcribe(key, "abc", "b:2:0 c:2:0", "ab ac", "a", "ab ac", "", {});
  if (key == "m7_7")
    return transcribe(key, "abcdefg", "d:2:0 e:3:1 f:3:1 g:2:0", "ab ad ae bc be bf cf cg", "a b c",
                      "ad ae be bf cf cg", "e f", {3, 3});
  if (key == "m8_4")
    return transcribe(key, "abcdefgh", "g:5:3 h:4:0", "ab ah bc bh cd cg ch de dg ef eg fg", "a b c d e f h",
                      "ah bh cg ch dg eg fg", "g", {4, 5});
  throw Error(ErrorKind::UnknownKnot, "unknown knot '" + key + "'");
}

}  // namespace

const std::vector<std::string>& catalog_keys() {
  static const std::vector<std::string> keys{"5_1", "5_2",  "6_2", "7_1",  "7_2",  "7_4",  "7_7",
                                             "8_2", "8_4", "Kp_pos", "T2p", "m3_1", "m7_7", "m8_4"};
  return keys;
}

bool is_family(const std::string& key) { return key == "Kp_pos" || key == "T2p"; }

MultisumSpec torus_spec(Exponent p) {
  if (p < 1) throw Error(ErrorKind::BadParameter, "T2p needs p >= 1");
  std::vector<std::string> vars{"a"};
  for (Exponent n = 1; n <= 2 * p; ++n) vars.push_back("b" + std::to_string(n));
  SpecBuilder b("T2p", vars);
  b.half("a", 2 * p + 1, 2 * p - 1).sign("a").target({2 * p + 1});
  for (Exponent n = 1; n <= 2 * p; ++n) {
    const auto bn = vars[static_cast<std::size_t>(n)];
    b.cross("a", bn).lin(bn).den("a", bn);
    if (n < 2 * p) b.cross(bn, vars[static_cast<std::size_t>(n + 1)]);
  }
  return b.done();
}

MultisumSpec twist_spec(Exponent p) {
  if (p < 1) throw Error(ErrorKind::BadParameter, "Kp_pos needs p >= 1");
  std::vector<std::string> vars{"a", "b"};
  for (Exponent n = 1; n <= 2 * p - 1; ++n) vars.push_back("c" + std::to_string(n));
  SpecBuilder b("Kp_pos", vars);
  b.half("a", 2 * p, 2 * (p - 1)).half("b", 2, 0).cross("b", "c1").den("b", "c1").target({2 * p});
  for (Exponent n = 1; n <= 2 * p - 1; ++n) {
    const auto cn = vars[static_cast<std::size_t>(n + 1)];
    b.cross("a", cn).lin(cn).den("a", cn);
    if (n < 2 * p - 1) b.cross(cn, vars[static_cast<std::size_t>(n + 2)]);
  }
  return b.done();
}

MultisumSpec printed_m7_2_spec() {
  return transcribe("m7_2_printed", "abcdefg", "c:3:1 d:2:0 e:2:0 f:2:0 g:2:0", "ab ac ad ae af ag bc", "a b",
                    "ac ad ae af ag bc", "", {3});
}

MultisumSpec catalog_spec(const std::string& key, std::optional<Exponent> p) {
  if (std::find(catalog_keys().begin(), catalog_keys().end(), key) == catalog_keys().end()) {
    throw Error(ErrorKind::UnknownKnot, "unknown knot '" + key + "'");
  }
  if (!is_family(key)) {
    if (p) throw Error(ErrorKind::BadParameter, key + " takes no parameter");
    return fixed_spec(key);
  }
  if (!p) throw Error(ErrorKind::BadParameter, key + " needs a parameter p");
  return key == "T2p" ? torus_spec(*p) : twist_spec(*p);
}

IdentityReport verify_spec(const MultisumSpec& spec, json params, Exponent prec) {
  if (prec < 1) throw Error(ErrorKind::InvalidArgument, "order must be at least 1");
  return timed([&] {
    return compare_series(spec.name, std::move(params), phi_series(spec, prec), rhs_series(spec.target, prec), prec);
  });
}

IdentityReport verify_knot(const std::string& key, std::optional<Exponent> p, Exponent prec) {
  auto spec = catalog_spec(key, p);
  json params = json::object();
  if (p) params["p"] = *p;
  return verify_spec(spec, std::move(params), prec);
}

}  // namespace qrr
