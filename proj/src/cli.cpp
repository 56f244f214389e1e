#include "qrr/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>

#include "qrr/catalog.hpp"
#include "qrr/classical.hpp"
#include "qrr/diagram.hpp"
#include "qrr/error.hpp"
#include "qrr/qpoch.hpp"
#include "qrr/transform.hpp"

namespace qrr {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  Exponent order = 50;
  std::string format = "json";
  std::string knot;
  std::string spec_file;
  Exponent p_max = 5;
  bool parallel = false;
};

// Thread-safe sink for report lines.
class ReportSink {
 public:
  ReportSink(std::ostream& out, const std::string& format) : out_(out), text_(format == "text") {}

  void emit(const IdentityReport& r) {
    const std::string line = text_ ? to_text(r) : to_json(r).dump();
    std::lock_guard<std::mutex> lock(mu_);
    out_ << line << '\n' << std::flush;
    all_ok_ = all_ok_ && r.verified;
  }
  int status() const { return all_ok_ ? 0 : 2; }

 private:
  std::ostream& out_;
  bool text_;
  std::mutex mu_;
  bool all_ok_ = true;
};

Exponent parse_int(const std::string& name, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::BadParameter, "--" + name + " expects an integer, got '" + v + "'");
  }
}

std::vector<Exponent> parse_list(const std::string& name, const std::string& v) {
  std::vector<Exponent> out;
  if (v.empty()) return out;
  std::stringstream in(v);
  for (std::string item; std::getline(in, item, ',');) out.push_back(parse_int(name, item));
  return out;
}

// Named parameters for verify-identity, all taken as strings and converted
// per identity.
class Params {
 public:
  void bind(CLI::App* app) {
    for (const char* n : {"s", "k", "i", "m", "A", "t", "K", "alpha", "beta", "sigma", "b", "p", "a", "n", "c", "l",
                          "n-max"}) {
      app->add_option("--" + std::string(n), values_[n], std::string("parameter ") + n);
    }
  }
  bool has(const std::string& n) const {
    auto it = values_.find(n);
    return it != values_.end() && !it->second.empty();
  }
  Exponent get(const std::string& n) const {
    if (!has(n)) throw Error(ErrorKind::BadParameter, "missing --" + n);
    return parse_int(n, values_.at(n));
  }
  Exponent get(const std::string& n, Exponent fallback) const { return has(n) ? get(n) : fallback; }
  std::vector<Exponent> list(const std::string& n) const {
    if (!has(n)) throw Error(ErrorKind::BadParameter, "missing --" + n);
    return parse_list(n, values_.at(n));
  }

 private:
  std::map<std::string, std::string> values_;
};

int as_int(Exponent v) { return static_cast<int>(v); }

IdentityReport run_identity(const std::string& id, const Params& p, Exponent order) {
  if (id == "rr") return rr_check(as_int(p.get("s")), order);
  if (id == "ag") return ag_check(as_int(p.get("k")), as_int(p.get("i")), order);
  if (id == "euler1") return euler1_check(p.get("m", 1), order);
  if (id == "euler2") return euler2_check(p.get("m", 1), order);
  if (id == "andy") return andy_check(p.get("A"), order);
  if (id == "qbt") return qbt_check(Monomial::q_power(p.get("t", 1)), p.get("K"));
  if (id == "jtp") return jtp_check(p.get("alpha"), p.get("beta"), as_int(p.get("sigma", -1)), order);
  if (id == "h-odd-product") return h_odd_product_check(p.get("b"), order);
  if (id == "h-even-unilateral") return h_even_unilateral_check(p.get("p"), order);
  if (id == "negab") return negab_check(p.get("a"), p.get("b"));
  if (id == "lemma-key") return lemma_key_check(p.get("n"), p.list("c"), order);
  if (id == "blb3") return blb3_check(order);
  if (id == "genblb3") return genblb3_check(p.get("l"), order);
  if (id == "bailey") {
    auto pair = b3_pair();
    const Exponent steps = p.get("m", 0);
    if (steps < 0) throw Error(ErrorKind::BadParameter, "--m must be nonnegative");
    for (Exponent s = 0; s < steps; ++s) pair = bailey_chain_step(pair);
    auto r = bailey_verify(pair, p.get("n-max", 8), order);
    r.params["steps"] = steps;
    return r;
  }
  if (id == "sumtosum") return sumtosum_report(p.list("i"));
  throw Error(ErrorKind::BadParameter, "unknown identity '" + id + "'");
}

struct Task {
  std::string key;
  std::optional<Exponent> p;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_verify_table(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.spec_file.empty()) {
    ReportSink sink(out, cfg.format);
    sink.emit(verify_spec(spec_from_text(read_file(cfg.spec_file)), {}, cfg.order));
    return sink.status();
  }
  std::vector<Task> tasks;
  for (const auto& k : catalog_keys()) {
    if (!cfg.knot.empty() && cfg.knot != k) continue;
    if (is_family(k))
      for (Exponent p = 1; p <= cfg.p_max; ++p) tasks.push_back({k, p});
    else
      tasks.push_back({k, std::nullopt});
  }
  if (tasks.empty()) throw Error(ErrorKind::UnknownKnot, "unknown knot '" + cfg.knot + "'");
  ReportSink sink(out, cfg.format);
  if (!cfg.parallel) {
    for (const auto& t : tasks) sink.emit(verify_knot(t.key, t.p, cfg.order));
    return sink.status();
  }
  std::vector<std::future<void>> jobs;
  for (const auto& t : tasks)
    jobs.push_back(std::async(std::launch::async, [&, t] { sink.emit(verify_knot(t.key, t.p, cfg.order)); }));
  for (auto& j : jobs) j.get();
  return sink.status();
}

TruncSeries named_series(const std::string& spec, Exponent order) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto args = parse_list("series", arg);
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw Error(ErrorKind::BadParameter, "series " + name + " takes " + std::to_string(n) + " parameter(s)");
    }
  };
  if (name == "h") return need(1), h_series(args[0], order);
  if (name == "rr") return need(1), rr_lhs(as_int(args[0]), order);
  if (name == "ag") return need(2), ag_lhs(as_int(args[0]), as_int(args[1]), order);
  if (name == "even") return need(1), even_unilateral_sum(args[0], order);
  if (name == "qpoch_inf") return need(0), qpoch_inf(order);
  if (name == "partitions") return need(0), ts_invert(qpoch_inf(order));
  throw Error(ErrorKind::BadParameter, "unknown series '" + name + "'");
}

void print_series(const TruncSeries& s, const std::string& format, std::ostream& out) {
  if (format == "text") {
    out << s.to_string() << '\n';
    return;
  }
  json arr = json::array();
  for (Exponent e = std::min<Exponent>(s.offset(), 0); e < s.prec(); ++e) arr.push_back(coeff_to_json(s[e]));
  out << arr.dump() << '\n';
}

}  // namespace

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids{
      "rr",    "ag",        "euler1", "euler2",  "andy",   "qbt",     "jtp",      "h-odd-product", "h-even-unilateral",
      "negab", "lemma-key", "blb3",   "genblb3", "bailey", "sumtosum"};
  return ids;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("QRR_ORDER")) {
    try {
      cfg.order = parse_int("QRR_ORDER", env);
    } catch (const Error& e) {
      err << e.what() << '\n';
      return 1;
    }
  }

  CLI::App app{"Exact truncated q-series verification of knot multisum identities", "qrr"};
  app.require_subcommand(1);
  app.add_option("--order", cfg.order, "truncation order N (series are exact below q^N)");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--parallel", cfg.parallel, "run independent verifications concurrently");

  auto* table = app.add_subcommand("verify-table", "verify every catalog identity");
  table->add_option("--knot", cfg.knot, "restrict to one catalog key");
  table->add_option("--p-max", cfg.p_max, "largest p for the two families");
  table->add_option("--spec-file", cfg.spec_file, "verify a multisum spec JSON against its target instead")
      ->excludes("--knot");

  std::string identity;
  Params params;
  auto* ident = app.add_subcommand("verify-identity", "verify one classical or transform identity");
  ident->add_option("id", identity, "identity id (see catalog)")->required();
  params.bind(ident);

  std::string knot, spec_file, diagram_file, series;
  std::optional<Exponent> p;
  auto* compute = app.add_subcommand("compute", "print a series");
  auto* src = compute->add_option_group("source");
  src->add_option("--knot", knot, "catalog key (prints Phi)");
  src->add_option("--spec-file", spec_file, "multisum spec JSON (prints Phi)");
  src->add_option("--diagram", diagram_file, "diagram JSON (prints Phi)");
  src->add_option("--series", series, "named series NAME:PARAM, e.g. h:5");
  src->require_option(1);
  compute->add_option("--p", p, "family parameter");

  auto* cat = app.add_subcommand("catalog", "list knot keys and identity ids");

  // Both global and subcommand positions are accepted for the common flags.
  for (auto* sub : {table, ident, compute, cat}) {
    sub->fallthrough();
  }

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (cfg.order < 1) throw Error(ErrorKind::InvalidArgument, "--order must be at least 1");
    if (cfg.p_max < 1) throw Error(ErrorKind::InvalidArgument, "--p-max must be at least 1");

    if (*table) return cmd_verify_table(cfg, out);

    if (*ident) {
      ReportSink sink(out, cfg.format);
      sink.emit(run_identity(identity, params, cfg.order));
      return sink.status();
    }

    if (*compute) {
      TruncSeries s = TruncSeries::zero(1);
      if (!series.empty()) s = named_series(series, cfg.order);
      else if (!knot.empty()) s = phi_series(catalog_spec(knot, p), cfg.order);
      else if (!spec_file.empty()) s = phi_series(spec_from_text(read_file(spec_file)), cfg.order);
      else s = phi_series(build_from_diagram(load_diagram(diagram_file)), cfg.order);
      print_series(s, cfg.format, out);
      return 0;
    }

    if (*cat) {
      if (cfg.format == "text") {
        out << "knots:";
        for (const auto& k : catalog_keys()) out << ' ' << k;
        out << "\nidentities:";
        for (const auto& i : identity_ids()) out << ' ' << i;
        out << '\n';
      } else {
        json j;
        j["knots"] = catalog_keys();
        j["identities"] = identity_ids();
        out << j.dump() << '\n';
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace qrr
