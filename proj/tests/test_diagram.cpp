#include "doctest.h"
#include "qrr/catalog.hpp"
#include "qrr/diagram.hpp"
#include "qrr/error.hpp"

using namespace qrr;

namespace {

const std::string kData = QRR_DATA_DIR;

Diagram load(const std::string& name) { return load_diagram(kData + "/diagrams/" + name + ".json"); }

std::vector<std::vector<Exponent>> printed_72_q() {
  return {{0, 1, 0, 0, 0, 2, 1, 1}, {1, 0, 1, 0, 0, 0, 1, 0}, {0, 1, 0, 1, 0, 0, 1, 0},
          {0, 0, 1, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 1, 1, 0}, {2, 0, 0, 0, 1, 0, 1, 1},
          {1, 1, 1, 1, 1, 1, 6, 0}, {1, 0, 0, 0, 0, 1, 0, 2}};
}

}  // namespace

TEST_CASE("7_2 diagram reproduces the printed matrices") {
  auto d = load("7_2");
  CHECK(d.fstar == std::optional<std::string>("h"));
  auto s = build_from_diagram(d);
  CHECK(s.var_names == std::vector<std::string>{"c", "d", "e", "f", "g", "a", "b"});
  CHECK(s.crossings == 7);
  // Printed Q' and L' with the h row and column removed.
  auto q = printed_72_q();
  std::vector<Exponent> l2{2, 2, 2, 2, 2, 2, 4, 0};
  const std::vector<int> keep{0, 1, 2, 3, 4, 6, 7};
  for (std::size_t i = 0; i < keep.size(); ++i) {
    CHECK(s.L2[i] == l2[static_cast<std::size_t>(keep[i])]);
    for (std::size_t j = 0; j < keep.size(); ++j) CHECK(s.A2[i][j] == q[keep[i]][keep[j]]);
  }
  auto full = face_forms(d);
  CHECK(full.faces == std::vector<std::string>{"c", "d", "e", "f", "g", "h", "a", "b"});
  CHECK(full.Q == q);
  CHECK(full.L2 == l2);
  CHECK(eval_multisum(s, 30) == eval_multisum(catalog_spec("7_2"), 30));
  CHECK(phi_series(s, 30) == phi_series(catalog_spec("7_2"), 30));
  CHECK(verify_spec(s, {}, 30).verified);
}

TEST_CASE("F* rule and its override") {
  auto d = load("7_2");
  d.fstar.reset();
  // c and h tie on both counts; the smallest id wins.
  CHECK(choose_fstar(d) == "c");
  auto s = build_from_diagram(d);
  CHECK(s.var_names == std::vector<std::string>{"d", "e", "f", "g", "h", "a", "b"});
  CHECK(phi_series(s, 30) == phi_series(build_from_diagram(load("7_2")), 30));
  auto bad = load("7_2");
  bad.fstar = "a";
  CHECK_THROWS_AS(build_from_diagram(bad), Error);
}

TEST_CASE("mirror 7_2") {
  auto d = load("m7_2");
  auto s = build_from_diagram(d);
  CHECK(s.var_names == std::vector<std::string>{"c", "d", "e", "f", "g", "a", "b"});
  // Doubled L' = [1,0,0,0,0,(1),2,2] with h dropped.
  CHECK(s.L2 == std::vector<Exponent>{1, 0, 0, 0, 0, 2, 2});
  CHECK(s.sign_vec == std::vector<Exponent>{1, 0, 0, 0, 0, 0, 0});
  CHECK(s.A2[0][0] == 3);
  CHECK(s.A2[1][1] == 2);
  CHECK(s.A2[5][6] == 1);
  auto full = face_forms(d);
  CHECK(full.L2 == std::vector<Exponent>{1, 0, 0, 0, 0, 1, 2, 2});
  // The printed h diagonal reads 2, but h borders three edges.
  CHECK(full.Q[5][5] == 3);
  CHECK(verify_spec(s, {}, 30).verified);
  auto printed = printed_m7_2_spec();
  printed.sign_vec[2] = 1;
  CHECK(phi_series(s, 30) == phi_series(printed, 30));
  CHECK(mirror(load("7_2")).faces[0].color == 'B');
}

TEST_CASE("trefoil and its mirror") {
  auto t = build_from_diagram(load("3_1"));
  CHECK(choose_fstar(load("3_1")) == "L1");
  CHECK(phi_series(t, 30) == phi_series(torus_spec(1), 30));
  auto m = build_from_diagram(load("m3_1"));
  CHECK(m.var_names == std::vector<std::string>{"L2", "L3", "o"});
  CHECK(eval_multisum(m, 30) == eval_multisum(catalog_spec("m3_1"), 30));
  CHECK(phi_series(m, 30) == TruncSeries::one(30));
}

TEST_CASE("mirroring twice is the identity") {
  for (const char* n : {"7_2", "m7_2", "3_1", "m3_1"}) {
    auto d = load(n);
    auto dd = mirror(mirror(d));
    CHECK(diagram_to_json(dd).dump() == diagram_to_json(d).dump());
    CHECK(phi_series(build_from_diagram(dd), 25) == phi_series(build_from_diagram(d), 25));
  }
}

TEST_CASE("malformed diagrams") {
  auto d = load("3_1");
  auto two_ext = d;
  two_ext.faces[1].exterior = true;
  CHECK_THROWS_WITH_AS(validate_diagram(two_ext), doctest::Contains("MalformedDiagram"), Error);
  auto mono = d;
  mono.edges[0].faces = {"L1", "L2"};
  CHECK_THROWS_AS(validate_diagram(mono), Error);
  auto euler = d;
  euler.edges.pop_back();
  CHECK_THROWS_AS(validate_diagram(euler), Error);
  auto ghost = d;
  ghost.edges[0].faces = {"o", "nope"};
  CHECK_THROWS_AS(validate_diagram(ghost), Error);
  CHECK_THROWS_WITH_AS(diagram_from_json(nlohmann::ordered_json::parse("{\"schema_version\":1}")),
                       doctest::Contains("ParseError"), Error);
  CHECK_THROWS_AS(load_diagram(kData + "/diagrams/missing.json"), Error);
}

TEST_CASE("diagram JSON round trip") {
  auto d = load("7_2");
  auto j = diagram_to_json(d);
  CHECK(diagram_to_json(diagram_from_json(j)).dump() == j.dump());
}

TEST_CASE("Tait graphs") {
  auto g = tait_graph(load("7_2"));
  CHECK(g.num_vertices == 6);
  CHECK(g.edges.size() == 7);
  auto r = reduce_tait(g);
  CHECK(r.edge_set.size() == 6);
  CHECK(tait_iso(r, reduce_tait(twist_tait(3))));
  CHECK(tait_iso(r, reduce_tait(cycle_graph(6))));
  CHECK_FALSE(tait_iso(r, reduce_tait(torus_tait(2))));
  CHECK(tait_iso(reduce_tait(tait_graph(load("3_1"))), reduce_tait(torus_tait(1))));

  CHECK(reduce_tait(twist_tait(2)).edge_set.size() == 4);
  MultiGraph dbl{2, {{0, 1}, {1, 0}}, {}};
  CHECK(reduce_tait(dbl).edge_set == std::set<std::pair<int, int>>{{0, 1}});
  auto simple = reduce_tait(cycle_graph(5));
  CHECK(reduce_tait(cycle_graph(5)).edge_set == simple.edge_set);

  CHECK(tait_iso(simple, simple));
  MultiGraph path{3, {{0, 1}, {1, 2}}, {}};
  CHECK_FALSE(tait_iso(reduce_tait(path), reduce_tait(cycle_graph(3))));
  // A pentagon with its vertices relabelled.
  MultiGraph pent{5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}}, {}};
  CHECK(tait_iso(reduce_tait(pent), simple));
  CHECK_THROWS_WITH_AS(tait_iso(reduce_tait(cycle_graph(13)), reduce_tait(cycle_graph(13))),
                       doctest::Contains("TooLarge"), Error);
}
