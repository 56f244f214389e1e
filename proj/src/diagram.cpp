#include "qrr/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "qrr/error.hpp"

namespace qrr {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const Diagram& d, const std::string& what) {
  throw Error(ErrorKind::MalformedDiagram, (d.name.empty() ? std::string("diagram") : d.name) + ": " + what);
}

std::map<std::string, const Face*> face_index(const Diagram& d) {
  std::map<std::string, const Face*> m;
  for (const auto& f : d.faces)
    if (!m.emplace(f.id, &f).second) malformed(d, "duplicate face " + f.id);
  return m;
}

const Face& exterior(const Diagram& d) {
  for (const auto& f : d.faces)
    if (f.exterior) return f;
  malformed(d, "no exterior face");
}

// Faces of the other color sharing an edge with f.
std::set<std::string> across(const Diagram& d, const std::string& f) {
  std::set<std::string> out;
  for (const auto& e : d.edges) {
    if (e.faces[0] == f) out.insert(e.faces[1]);
    if (e.faces[1] == f) out.insert(e.faces[0]);
  }
  return out;
}

}  // namespace

void validate_diagram(const Diagram& d) {
  auto idx = face_index(d);
  int ext = 0;
  for (const auto& f : d.faces) {
    if (f.color != 'A' && f.color != 'B') malformed(d, "face " + f.id + " has no valid color");
    ext += f.exterior ? 1 : 0;
  }
  if (ext != 1) malformed(d, "need exactly one exterior face");
  auto color = [&](const std::string& id) {
    auto it = idx.find(id);
    if (it == idx.end()) malformed(d, "unknown face " + id);
    return it->second->color;
  };
  for (const auto& e : d.edges)
    if (color(e.faces[0]) == color(e.faces[1])) malformed(d, "edge " + e.id + " joins faces of one color");
  for (const auto& v : d.vertices)
    for (int i = 0; i < 4; ++i)
      if (color(v.faces[i]) == color(v.faces[(i + 1) % 4])) malformed(d, "crossing " + v.id + " is not checkerboard");
  const auto euler = static_cast<long>(d.vertices.size()) - static_cast<long>(d.edges.size()) +
                     static_cast<long>(d.faces.size());
  if (euler != 2) malformed(d, "V - E + F = " + std::to_string(euler));
  if (d.fstar) {
    const auto& x = exterior(d);
    if (color(*d.fstar) == x.color) malformed(d, "F* must not share the exterior's color");
  }
}

Diagram diagram_from_json(const json& j) {
  Diagram d;
  try {
    if (j.value("schema_version", 0) != 1) throw Error(ErrorKind::ParseError, "unsupported schema_version");
    d.name = j.value("name", std::string{});
    for (const auto& f : j.at("faces")) {
      const auto c = f.at("color").get<std::string>();
      if (c != "A" && c != "B") throw Error(ErrorKind::ParseError, "face color must be A or B");
      d.faces.push_back(Face{f.at("id").get<std::string>(), c[0], f.value("exterior", false)});
    }
    for (const auto& e : j.at("edges")) {
      DiagramEdge de{e.at("id").get<std::string>(), {}};
      if (e.at("faces").size() != 2) throw Error(ErrorKind::ParseError, "edge " + de.id + " needs two faces");
      for (int i = 0; i < 2; ++i) de.faces[i] = e.at("faces").at(i).get<std::string>();
      d.edges.push_back(de);
    }
    for (const auto& v : j.at("vertices")) {
      Crossing c{v.at("id").get<std::string>(), {}};
      if (v.at("faces").size() != 4) throw Error(ErrorKind::ParseError, "vertex " + c.id + " needs four faces");
      for (int i = 0; i < 4; ++i) c.faces[i] = v.at("faces").at(i).get<std::string>();
      d.vertices.push_back(c);
    }
    if (j.contains("fstar")) d.fstar = j.at("fstar").get<std::string>();
    if (j.contains("target")) j.at("target").get_to(d.target);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  validate_diagram(d);
  return d;
}

json diagram_to_json(const Diagram& d) {
  json j;
  j["schema_version"] = 1;
  if (!d.name.empty()) j["name"] = d.name;
  j["faces"] = json::array();
  for (const auto& f : d.faces)
    j["faces"].push_back({{"id", f.id}, {"color", std::string(1, f.color)}, {"exterior", f.exterior}});
  j["edges"] = json::array();
  for (const auto& e : d.edges) j["edges"].push_back({{"id", e.id}, {"faces", e.faces}});
  j["vertices"] = json::array();
  for (const auto& v : d.vertices) j["vertices"].push_back({{"id", v.id}, {"faces", v.faces}});
  if (d.fstar) j["fstar"] = *d.fstar;
  if (!d.target.empty()) j["target"] = d.target;
  return j;
}

Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  return diagram_from_json(j);
}

Diagram mirror(const Diagram& d) {
  Diagram m = d;
  for (auto& f : m.faces) f.color = f.color == 'A' ? 'B' : 'A';
  if (!m.name.empty()) m.name = m.name[0] == 'm' ? m.name.substr(1) : "m" + m.name;
  return m;
}

std::string choose_fstar(const Diagram& d) {
  validate_diagram(d);
  if (d.fstar) return *d.fstar;
  const Face& x = exterior(d);
  std::vector<const Face*> cand;
  for (const auto& f : d.faces)
    if (f.color != x.color) cand.push_back(&f);
  if (cand.empty()) malformed(d, "no candidate for F*");
  auto score = [&](const Face* f) {
    auto nb = across(d, f->id);
    const auto all = static_cast<long>(nb.size());
    return std::make_pair(all, all - static_cast<long>(nb.count(x.id)));
  };
  const Face* best = cand.front();
  for (const Face* f : cand) {
    const auto s = score(f), b = score(best);
    if (s > b || (s == b && f->id < best->id)) best = f;
  }
  return best->id;
}

std::vector<std::string> variable_faces(const Diagram& d) {
  const std::string fs = choose_fstar(d);
  auto faces = face_forms(d).faces;
  faces.erase(std::remove(faces.begin(), faces.end(), fs), faces.end());
  return faces;
}

FaceForms face_forms(const Diagram& d) {
  validate_diagram(d);
  const Face& x = exterior(d);
  FaceForms out;
  std::vector<std::string> second;
  for (const auto& f : d.faces) {
    if (f.exterior) continue;
    (f.color != x.color ? out.faces : second).push_back(f.id);
  }
  std::sort(out.faces.begin(), out.faces.end());
  std::sort(second.begin(), second.end());
  out.faces.insert(out.faces.end(), second.begin(), second.end());
  auto idx = face_index(d);

  std::map<std::string, Exponent> e_count;
  for (const auto& e : d.edges)
    for (const auto& f : e.faces) ++e_count[f];
  auto ce = [&](const std::string& f, const std::string& g) {
    Exponent c = 0;
    for (const auto& e : d.edges)
      if ((e.faces[0] == f && e.faces[1] == g) || (e.faces[0] == g && e.faces[1] == f)) ++c;
    return c;
  };
  auto cv = [&](const std::string& f, const std::string& g) {
    Exponent c = 0;
    for (const auto& v : d.vertices) {
      const bool hf = std::find(v.faces.begin(), v.faces.end(), f) != v.faces.end();
      const bool hg = std::find(v.faces.begin(), v.faces.end(), g) != v.faces.end();
      c += hf && hg ? 1 : 0;
    }
    return c;
  };

  const auto n = out.faces.size();
  out.Q.assign(n, std::vector<Exponent>(n, 0));
  out.L2.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Face& fi = *idx.at(out.faces[i]);
    // L = 1 on B faces and e(F)/2 - 1 on A faces; doubled.
    out.L2[i] = fi.color == 'B' ? 2 : e_count[fi.id] - 2;
    for (std::size_t j = 0; j < n; ++j) {
      const Face& fj = *idx.at(out.faces[j]);
      Exponent q = 0;
      if (i == j) q = fi.color == 'A' ? e_count[fi.id] : 0;
      else if (fi.color == 'B' && fj.color == 'B') q = cv(fi.id, fj.id);
      else if (fi.color != fj.color) q = ce(fi.id, fj.id);
      out.Q[i][j] = q;
    }
  }
  return out;
}

MultisumSpec build_from_diagram(const Diagram& d) {
  const FaceForms ff = face_forms(d);
  const Face& x = exterior(d);
  const std::string fs = choose_fstar(d);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < ff.faces.size(); ++i)
    if (ff.faces[i] != fs) keep.push_back(i);
  const auto n = keep.size();

  MultisumSpec s;
  s.name = d.name;
  s.A2.assign(n, std::vector<Exponent>(n, 0));
  s.L2.assign(n, 0);
  s.sign_vec.assign(n, 0);
  s.crossings = static_cast<Exponent>(d.vertices.size());
  s.target = d.target;
  std::map<std::string, int> pos;
  for (std::size_t i = 0; i < n; ++i) {
    s.var_names.push_back(ff.faces[keep[i]]);
    pos[s.var_names.back()] = static_cast<int>(i);
    s.L2[i] = ff.L2[keep[i]];
    s.sign_vec[i] = ((s.L2[i] % 2) + 2) % 2;
    for (std::size_t j = 0; j < n; ++j) s.A2[i][j] = ff.Q[keep[i]][keep[j]];
  }
  // Every variable needs an edge to a pinned face, otherwise nothing bounds
  // it from below.
  for (const auto& v : s.var_names) {
    auto nb = across(d, v);
    if (!nb.count(x.id) && !nb.count(fs)) malformed(d, "face " + v + " is not bounded below");
  }
  for (const auto& e : d.edges) {
    std::vector<int> set;
    for (const auto& f : e.faces)
      if (pos.count(f)) set.push_back(pos[f]);
    if (!set.empty()) s.denom_sets.push_back(set);
  }
  validate_spec(s);
  return s;
}

MultiGraph tait_graph(const Diagram& d) {
  validate_diagram(d);
  const Face& x = exterior(d);
  auto idx = face_index(d);
  MultiGraph g;
  std::map<std::string, int> vid;
  for (const auto& f : d.faces)
    if (f.color != x.color) {
      vid[f.id] = g.num_vertices++;
      g.labels.push_back(f.id);
    }
  for (const auto& v : d.vertices) {
    // Opposite corners share a color; pick the pair in the shaded class.
    const int o = idx.at(v.faces[0])->color != x.color ? 0 : 1;
    g.edges.emplace_back(vid.at(v.faces[o]), vid.at(v.faces[o + 2]));
  }
  return g;
}

ReducedTaitGraph reduce_tait(const MultiGraph& g) {
  ReducedTaitGraph r;
  r.num_vertices = g.num_vertices;
  for (auto [u, v] : g.edges) r.edge_set.emplace(std::min(u, v), std::max(u, v));
  return r;
}

bool tait_iso(const ReducedTaitGraph& g1, const ReducedTaitGraph& g2) {
  constexpr int kMax = 12;
  if (g1.num_vertices > kMax || g2.num_vertices > kMax) {
    throw Error(ErrorKind::TooLarge, "isomorphism search is limited to 12 vertices");
  }
  if (g1.num_vertices != g2.num_vertices || g1.edge_set.size() != g2.edge_set.size()) return false;
  const int n = g1.num_vertices;
  auto adjacency = [n](const ReducedTaitGraph& g) {
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edge_set) a[u][v] = a[v][u] = true;
    return a;
  };
  const auto a1 = adjacency(g1), a2 = adjacency(g2);
  std::vector<int> deg1(n, 0), deg2(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      deg1[i] += a1[i][j] ? 1 : 0;
      deg2[i] += a2[i][j] ? 1 : 0;
    }
  // Extend a partial map vertex by vertex, checking adjacency as we go.
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int i) {
    if (i == n) return true;
    for (int t = 0; t < n; ++t) {
      if (used[t] || deg1[i] != deg2[t]) continue;
      bool ok = true;
      for (int j = 0; j <= i && ok; ++j) {
        const int tj = j == i ? t : image[j];
        ok = a1[i][j] == a2[t][tj];
      }
      if (!ok) continue;
      image[i] = t;
      used[t] = true;
      if (extend(i + 1)) return true;
      used[t] = false;
    }
    image[i] = -1;
    return false;
  };
  return extend(0);
}

MultiGraph cycle_graph(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "cycle needs at least one vertex");
  MultiGraph g;
  g.num_vertices = n;
  for (int i = 0; i < n; ++i) {
    g.labels.push_back("v" + std::to_string(i));
    g.edges.emplace_back(i, (i + 1) % n);
  }
  return g;
}

MultiGraph torus_tait(int p) {
  if (p < 1) throw Error(ErrorKind::BadParameter, "p must be at least 1");
  return cycle_graph(2 * p + 1);
}

MultiGraph twist_tait(int p) {
  if (p < 1) throw Error(ErrorKind::BadParameter, "p must be at least 1");
  auto g = cycle_graph(2 * p);
  g.edges.emplace_back(0, 1);
  return g;
}

}  // namespace qrr
