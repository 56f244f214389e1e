#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qrr/multisum.hpp"

namespace qrr {

struct Face {
  std::string id;
  char color = 'A';  // 'A' or 'B'
  bool exterior = false;
};

struct DiagramEdge {
  std::string id;
  std::array<std::string, 2> faces;
};

// A crossing with its four surrounding faces in cyclic order.
struct Crossing {
  std::string id;
  std::array<std::string, 4> faces;
};

struct Diagram {
  std::string name;
  std::vector<Face> faces;
  std::vector<DiagramEdge> edges;
  std::vector<Crossing> vertices;
  std::optional<std::string> fstar;  // overrides the automatic choice
  std::vector<Exponent> target;      // carried into the spec
};

// Exactly one exterior face, opposite colors across every edge and at
// consecutive faces around every crossing, V - E + F = 2. Throws
// MalformedDiagram.
void validate_diagram(const Diagram& d);

Diagram diagram_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json diagram_to_json(const Diagram& d);
Diagram load_diagram(const std::string& path);

// Swaps the two colors.
Diagram mirror(const Diagram& d);

// The face whose variable is pinned to zero: from the color class not
// containing the exterior, the one bordering the most faces of the other
// class, then the most such faces other than the exterior, then the
// smallest id. d.fstar wins if set.
std::string choose_fstar(const Diagram& d);

// Faces in variable order: the class opposite the exterior first, then the
// exterior's class, each sorted by id, with the exterior and F* removed.
std::vector<std::string> variable_faces(const Diagram& d);

// Q and doubled L over every face but the exterior, F* kept in its place
// in the variable order. This is the form the matrices are usually printed in.
struct FaceForms {
  std::vector<std::string> faces;
  std::vector<std::vector<Exponent>> Q;
  std::vector<Exponent> L2;
};
FaceForms face_forms(const Diagram& d);

// A2 = Q restricted to the variables, L2 = 2 L, sign = L2 mod 2, one
// denominator per edge, crossings = number of vertices.
MultisumSpec build_from_diagram(const Diagram& d);

struct MultiGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
};

struct ReducedTaitGraph {
  int num_vertices = 0;
  std::set<std::pair<int, int>> edge_set;  // stored with first <= second
};

// Vertices are the faces of the class opposite the exterior, one edge per
// crossing.
MultiGraph tait_graph(const Diagram& d);
ReducedTaitGraph reduce_tait(const MultiGraph& g);

// Brute force over vertex bijections; TooLarge above 12 vertices.
bool tait_iso(const ReducedTaitGraph& g1, const ReducedTaitGraph& g2);

MultiGraph cycle_graph(int n);
// T(2, 2p+1): the (2p+1)-cycle.
MultiGraph torus_tait(int p);
// K_p: a 2p-cycle with one edge doubled.
MultiGraph twist_tait(int p);

}  // namespace qrr
