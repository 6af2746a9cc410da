#include "ctv/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace ctv {
namespace {

// nlohmann::json objects use std::map underneath, so keys are emitted
// sorted and dumps are reproducible.

std::string kind_name(PolyKind k) {
  switch (k) {
    case PolyKind::Segments: return "segments";
    case PolyKind::Simplices: return "simplices";
    case PolyKind::VPoly: return "vpoly";
  }
  throw std::logic_error("unknown polytope kind");
}

PolyKind kind_from(const std::string& s) {
  if (s == "segments") return PolyKind::Segments;
  if (s == "simplices") return PolyKind::Simplices;
  if (s == "vpoly") return PolyKind::VPoly;
  throw std::invalid_argument("unknown polytope kind: " + s);
}

std::string variant_name(SVariant v) {
  switch (v) {
    case SVariant::Join: return "join";
    case SVariant::SliceJoin: return "slice";
    case SVariant::ConvSliceJoin: return "convslice";
  }
  throw std::logic_error("unknown S variant");
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational: expected a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

Json point_to_json(const Point& p) {
  Json a = Json::array();
  for (const auto& c : p) a.push_back(rational_to_json(c));
  return a;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("point: expected an array");
  Point p;
  for (const auto& c : j) p.push_back(rational_from_json(c));
  return p;
}

Json hyperplane_to_json(const OrientedHyperplane& h) {
  return Json{{"normal", point_to_json(h.normal)}, {"offset", rational_to_json(h.offset)}};
}

OrientedHyperplane hyperplane_from_json(const Json& j) {
  return {point_from_json(j.at("normal")), rational_from_json(j.at("offset"))};
}

Json spec_to_json(const InstanceSpec& s) {
  Json j{{"d", s.d},
         {"k", s.k},
         {"r", s.r},
         {"members_per_color", s.members_per_color},
         {"kind", kind_name(s.kind)},
         {"coord_bound", s.coord_bound},
         {"spread", s.spread},
         {"seed", s.seed},
         {"hard", s.hard},
         {"oracle", s.oracle}};
  if (s.kind == PolyKind::VPoly) j["vpoly_vertices"] = s.vpoly_vertices;
  return j;
}

InstanceSpec spec_from_json(const Json& j) {
  InstanceSpec s;
  s.d = j.at("d").get<long>();
  s.k = j.at("k").get<long>();
  s.r = j.at("r").get<long>();
  s.members_per_color = j.at("members_per_color").get<long>();
  s.kind = kind_from(j.at("kind").get<std::string>());
  if (j.contains("vpoly_vertices")) s.vpoly_vertices = j.at("vpoly_vertices").get<long>();
  if (j.contains("coord_bound")) s.coord_bound = j.at("coord_bound").get<long>();
  if (j.contains("spread")) s.spread = j.at("spread").get<long>();
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("hard")) s.hard = j.at("hard").get<bool>();
  if (j.contains("oracle")) s.oracle = j.at("oracle").get<std::string>();
  s.validate();
  return s;
}

Json instance_to_json(const Instance& inst) {
  Json members = Json::array();
  for (size_t i = 0; i < inst.family.size(); ++i) {
    Json verts = Json::array();
    for (const auto& v : inst.family.members[i].vertices) verts.push_back(point_to_json(v));
    members.push_back(Json{{"id", inst.family.ids[i]},
                           {"color", inst.family.coloring.color[i]},
                           {"vertices", verts}});
  }
  Json points = Json::array();
  for (const auto& p : inst.ordering.points) points.push_back(point_to_json(p));
  return Json{{"spec", spec_to_json(inst.spec)},
              {"family", Json{{"d", inst.family.d}, {"r", inst.family.coloring.r},
                              {"members", members}}},
              {"ordering", Json{{"k", inst.ordering.k}, {"points", points}}}};
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  inst.spec = spec_from_json(j.at("spec"));
  const Json& fam = j.at("family");
  inst.family.d = fam.at("d").get<size_t>();
  inst.family.coloring.r = fam.at("r").get<int>();
  for (const auto& m : fam.at("members")) {
    inst.family.ids.push_back(m.at("id").get<std::string>());
    inst.family.coloring.color.push_back(m.at("color").get<int>());
    std::vector<Point> verts;
    for (const auto& v : m.at("vertices")) verts.push_back(point_from_json(v));
    inst.family.members.push_back(Polytope::make(std::move(verts)));
  }
  inst.family.validate();
  const Json& ord = j.at("ordering");
  inst.ordering.k = ord.at("k").get<size_t>();
  for (const auto& p : ord.at("points")) inst.ordering.points.push_back(point_from_json(p));
  if (inst.ordering.points.size() != inst.family.size())
    throw std::invalid_argument("instance: ordering does not cover the family");
  return inst;
}

Json certificate_to_json(const Certificate& cert) {
  if (const auto* t = std::get_if<TransversalWitness>(&cert)) {
    Json inc = Json::array();
    for (const auto& p : t->incidence)
      inc.push_back(Json{{"member", p.member},
                         {"vmin", p.vmin},
                         {"vmax", p.vmax},
                         {"lambda", rational_to_json(p.lambda)}});
    return Json{{"type", "transversal"},
                {"color", t->color},
                {"hyperplane", hyperplane_to_json(t->h)},
                {"incidence", inc}};
  }
  if (const auto* r = std::get_if<RadonViolation>(&cert)) {
    Json w1 = Json::array(), w2 = Json::array();
    for (const auto& w : r->pair.weights1) w1.push_back(rational_to_json(w));
    for (const auto& w : r->pair.weights2) w2.push_back(rational_to_json(w));
    return Json{{"type", "radon_violation"},
                {"part1", r->pair.part1},
                {"part2", r->pair.part2},
                {"witness", point_to_json(r->pair.witness)},
                {"weights1", w1},
                {"weights2", w2},
                {"separator", hyperplane_to_json(r->separator)}};
  }
  const auto& o = std::get<OpenCase>(cert);
  return Json{{"type", "open_case"},
              {"colors_checked", o.colors_checked},
              {"circuits_checked", o.circuits_checked},
              {"note", o.note}};
}

Certificate certificate_from_json(const Json& j) {
  if (!j.contains("type") && j.contains("certificate"))
    return certificate_from_json(j.at("certificate"));  // `verify --both` wrapper
  std::string type = j.at("type").get<std::string>();
  if (type == "transversal") {
    TransversalWitness t;
    t.color = j.at("color").get<int>();
    t.h = hyperplane_from_json(j.at("hyperplane"));
    for (const auto& p : j.at("incidence")) {
      IncidenceProof ip;
      ip.member = p.at("member").get<size_t>();
      ip.vmin = p.at("vmin").get<size_t>();
      ip.vmax = p.at("vmax").get<size_t>();
      ip.lambda = rational_from_json(p.at("lambda"));
      t.incidence.push_back(std::move(ip));
    }
    return t;
  }
  if (type == "radon_violation") {
    RadonViolation r;
    r.pair.part1 = j.at("part1").get<std::vector<size_t>>();
    r.pair.part2 = j.at("part2").get<std::vector<size_t>>();
    r.pair.witness = point_from_json(j.at("witness"));
    for (const auto& w : j.at("weights1")) r.pair.weights1.push_back(rational_from_json(w));
    for (const auto& w : j.at("weights2")) r.pair.weights2.push_back(rational_from_json(w));
    r.separator = hyperplane_from_json(j.at("separator"));
    return r;
  }
  if (type == "open_case") {
    OpenCase o;
    o.colors_checked = j.at("colors_checked").get<long>();
    o.circuits_checked = j.at("circuits_checked").get<long>();
    o.note = j.value("note", "");
    return o;
  }
  throw std::invalid_argument("certificate: unknown type " + type);
}

Json zero_cell_to_json(const ZeroCellHit& hit) {
  Json weights = Json::array();
  for (const auto& w : hit.witness.weights) weights.push_back(rational_to_json(w));
  return Json{{"cell", hit.cell},
              {"variant", variant_name(hit.witness.variant)},
              {"subset", hit.witness.subset},
              {"weights", weights},
              {"H", hyperplane_to_json(hit.data.H)},
              {"F_minus", hit.data.F_minus},
              {"F_plus", hit.data.F_plus}};
}

Json complex_to_json(const SphereComplex& C, const std::vector<CentralData>& data) {
  Json cells = Json::array();
  for (size_t i = 0; i < C.cells.size(); ++i) {
    const auto& c = C.cells[i];
    Json rep = Json::array();
    for (const auto& x : c.rep) rep.push_back(x.get_str());
    Json signs = Json::array();
    for (int8_t s : c.signs) signs.push_back(static_cast<int>(s));
    Json cell{{"id", i},
              {"signs", signs},
              {"representative", rep},
              {"dim", c.dim},
              {"antipode", c.antipode},
              {"boundary_of", c.boundary_of}};
    if (i < data.size()) {
      cell["F_minus"] = data[i].F_minus;
      cell["F_plus"] = data[i].F_plus;
      cell["H"] = hyperplane_to_json(data[i].H);
    }
    cells.push_back(std::move(cell));
  }
  Json normals = Json::array();
  for (const auto& n : C.normals) {
    Json v = Json::array();
    for (const auto& x : n) v.push_back(x.get_str());
    normals.push_back(std::move(v));
  }
  return Json{{"d", C.d}, {"normals", normals}, {"cells", cells}};
}

Json probe_report_to_json(const std::vector<ProbeRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    out.push_back(Json{{"r", row.r},
                       {"seeds", row.seeds},
                       {"open_cases", row.open_cases},
                       {"generation_failures", row.generation_failures},
                       {"open_seeds", row.open_seeds}});
  }
  return Json{{"rows", out}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << dump_json(j);
}

}  // namespace ctv
