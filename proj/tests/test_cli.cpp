#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qrr/cli.hpp"
#include "qrr/report.hpp"

using namespace qrr;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int st = run_cli(args, out, err);
  return {st, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("verify-table streams one verified report per entry") {
  auto r = run({"verify-table", "--order", "30", "--p-max", "3"});
  CHECK(r.status == 0);
  auto ls = lines(r.out);
  CHECK(ls.size() == 14 + 2 * 2);
  for (const auto& l : ls) {
    auto j = nlohmann::ordered_json::parse(l);
    CHECK(j["verified"] == true);
    // Canonical field order and byte-identical round trip.
    CHECK(to_json(report_from_json(j)).dump() == l);
    CHECK(j.begin().key() == "identity_id");
  }
}

TEST_CASE("verify-table options") {
  auto one = run({"verify-table", "--knot", "7_1", "--order", "60"});
  CHECK(one.status == 0);
  CHECK(lines(one.out).size() == 1);
  auto fam = run({"--format", "text", "verify-table", "--knot", "T2p", "--p-max", "2", "--order", "20"});
  CHECK(lines(fam.out).size() == 2);
  CHECK(fam.out.rfind("ok", 0) == 0);
  auto par = run({"verify-table", "--order", "25", "--parallel"});
  CHECK(par.status == 0);
  CHECK(lines(par.out).size() == 22);
  CHECK(run({"verify-table", "--order", "0"}).status == 1);
  CHECK(run({"verify-table", "--p-max", "0"}).status == 1);
  CHECK(run({"verify-table", "--knot", "4_1"}).status == 1);
  CHECK(run({"verify-table", "--format", "xml"}).status == 1);
  CHECK(run({}).status == 1);
}

TEST_CASE("verify-identity dispatch") {
  CHECK(run({"verify-identity", "rr", "--s", "0", "--order", "100"}).status == 0);
  CHECK(run({"verify-identity", "lemma-key", "--n", "5", "--c", "0,0,0,0", "--order", "30"}).status == 0);
  CHECK(run({"verify-identity", "ag", "--k", "3", "--i", "3", "--order", "60"}).status == 0);
  CHECK(run({"verify-identity", "qbt", "--t", "2", "--K", "5"}).status == 0);
  CHECK(run({"verify-identity", "jtp", "--alpha", "5", "--beta", "3", "--order", "40"}).status == 0);
  CHECK(run({"verify-identity", "negab", "--a", "3", "--b", "2"}).status == 0);
  CHECK(run({"verify-identity", "genblb3", "--l", "4", "--order", "40"}).status == 0);
  CHECK(run({"verify-identity", "bailey", "--m", "1", "--order", "30"}).status == 0);
  CHECK(run({"verify-identity", "sumtosum", "--i", "3,1,4"}).status == 0);
  CHECK(run({"verify-identity", "frobnicate"}).status == 1);
  CHECK(run({"verify-identity", "rr"}).status == 1);
  CHECK(run({"verify-identity", "rr", "--s", "x"}).status == 1);
}

TEST_CASE("compute") {
  CHECK(run({"compute", "--series", "h:4", "--order", "12"}).out == "[1,-1,0,1,0,0,-1,0,0,0,1,0]\n");
  CHECK(run({"compute", "--knot", "m3_1", "--order", "10"}).out == "[1,0,0,0,0,0,0,0,0,0]\n");
  CHECK(run({"compute", "--knot", "T2p", "--p", "1", "--order", "6", "--format", "text"}).out ==
        "1 - q - q^2 + q^5 + O(q^6)\n");
  CHECK(run({"compute", "--diagram", std::string(QRR_DATA_DIR) + "/diagrams/m7_2.json", "--order", "8"}).out ==
        "[1,-1,-1,0,0,1,0,1]\n");
  auto bad = run({"compute", "--spec-file", "/nonexistent/bad.json"});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("ParseError") != std::string::npos);
  CHECK(run({"compute"}).status == 1);
  CHECK(run({"compute", "--series", "zeta:2"}).status == 1);
}

TEST_CASE("an unverified spec exits with 2") {
  const std::string path = "cli_test_spec.json";
  auto write = [&](const std::string& target) {
    std::ofstream f(path);
    f << R"({"schema_version":1,"name":"single","vars":["a"],"A2":[[2]],"L2":[0],"sign":[0],"denoms":[[0]],)"
      << R"("crossings":1,"target":)" << target << "}";
  };
  // sum q^{a^2}/(q)_a times (q)_inf is the first Rogers-Ramanujan product, not h_5.
  write("[5]");
  auto bad = run({"verify-table", "--spec-file", path, "--order", "20"});
  CHECK(bad.status == 2);
  auto j = nlohmann::ordered_json::parse(bad.out);
  CHECK(j["verified"] == false);
  CHECK(j.contains("first_mismatch"));
  std::remove(path.c_str());
}

TEST_CASE("QRR_ORDER sets the default order") {
  setenv("QRR_ORDER", "17", 1);
  auto r = run({"verify-identity", "blb3"});
  CHECK(nlohmann::ordered_json::parse(r.out)["order"] == 17);
  auto flag = run({"verify-identity", "blb3", "--order", "9"});
  CHECK(nlohmann::ordered_json::parse(flag.out)["order"] == 9);
  setenv("QRR_ORDER", "abc", 1);
  CHECK(run({"catalog"}).status == 1);
  unsetenv("QRR_ORDER");
  auto c = run({"catalog"});
  CHECK(c.out.find("\"m8_4\"") != std::string::npos);
  CHECK(c.out.find("\"lemma-key\"") != std::string::npos);
}
