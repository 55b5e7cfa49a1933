#include "todorov/io.hpp"

#include <fstream>
#include <iostream>
#include <limits>

#include "todorov/error.hpp"

namespace todorov::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw InputError(std::string(what) + " is out of range");
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> int_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

std::vector<DivisorClass> class_list(const Json& j, const IntLattice& lat, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of classes");
  std::vector<DivisorClass> out;
  for (const auto& c : j) out.push_back(class_from_json(c, lat));
  return out;
}

Json class_list_json(const std::vector<DivisorClass>& cs) {
  Json arr = Json::array();
  for (const auto& c : cs) arr.push_back(to_json(c));
  return arr;
}

}  // namespace

Json read_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  if (path == "-") return read_json(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_json(in);
}

Json to_json(const DivisorClass& d) { return Json(d.coords); }

DivisorClass class_from_json(const Json& j, const IntLattice& lat) {
  DivisorClass d(int_vector(j, "class"));
  lat.check(d);
  return d;
}

Json to_json(const IntLattice& lat) {
  return Json{{"basis", lat.basis()}, {"gram", lat.gram()}, {"declared_even", class_list_json(lat.declared_even())}};
}

IntLattice lattice_from_json(const Json& j, Parity parity) {
  const auto& basis_json = field(j, "basis");
  if (!basis_json.is_array()) throw InputError("basis must be an array of strings");
  std::vector<std::string> basis;
  for (const auto& b : basis_json) {
    if (!b.is_string()) throw InputError("basis labels must be strings");
    basis.push_back(b.get<std::string>());
  }
  const auto& gram_json = field(j, "gram");
  if (!gram_json.is_array()) throw InputError("gram must be an array of rows");
  IntMatrix gram;
  for (const auto& row : gram_json) gram.push_back(int_vector(row, "gram row"));

  std::vector<DivisorClass> declared;
  if (auto it = j.find("declared_even"); it != j.end()) {
    if (!it->is_array()) throw InputError("declared_even must be an array of classes");
    for (const auto& c : *it) declared.emplace_back(int_vector(c, "declared_even class"));
  }
  return IntLattice(std::move(basis), std::move(gram), std::move(declared), parity);
}

Json to_json(const BranchConfiguration& cfg) {
  Json j{{"lattice", to_json(cfg.lattice)},
         {"Bprime", to_json(cfg.bp)},
         {"A", class_list_json(cfg.a)},
         {"inventory", class_list_json(cfg.inventory)},
         {"negligible_ok", cfg.negligible_ok}};
  if (!cfg.sd_obstructed.empty()) j["sd_obstructed"] = class_list_json(cfg.sd_obstructed);
  return j;
}

BranchConfiguration config_from_json(const Json& j) {
  BranchConfiguration cfg;
  cfg.lattice = lattice_from_json(field(j, "lattice"));
  cfg.bp = class_from_json(field(j, "Bprime"), cfg.lattice);
  cfg.a = class_list(field(j, "A"), cfg.lattice, "A");
  if (auto it = j.find("inventory"); it != j.end()) cfg.inventory = class_list(*it, cfg.lattice, "inventory");
  if (auto it = j.find("negligible_ok"); it != j.end()) {
    if (!it->is_boolean()) throw InputError("negligible_ok must be a boolean");
    cfg.negligible_ok = it->get<bool>();
  }
  if (auto it = j.find("sd_obstructed"); it != j.end()) cfg.sd_obstructed = class_list(*it, cfg.lattice, "sd_obstructed");
  return cfg;
}

Json to_json(const PlaneBranchCurve& c) {
  Json pts = Json::array();
  for (const auto& p : c.points)
    pts.push_back(Json{{"id", p.id}, {"parent", p.parent ? Json(*p.parent) : Json(nullptr)}, {"mult", p.mult}});
  return Json{{"degree", c.degree}, {"points", pts}};
}

PlaneBranchCurve plane_curve_from_json(const Json& j) {
  PlaneBranchCurve c;
  c.degree = static_cast<int>(as_int(field(j, "degree"), "degree"));
  if (auto it = j.find("points"); it != j.end()) {
    if (!it->is_array()) throw InputError("points must be an array");
    for (const auto& p : *it) {
      InfinitelyNearPoint pt;
      const auto& id = field(p, "id");
      if (!id.is_string()) throw InputError("point id must be a string");
      pt.id = id.get<std::string>();
      if (auto par = p.find("parent"); par != p.end() && !par->is_null()) {
        if (!par->is_string()) throw InputError("point parent must be a string or null");
        pt.parent = par->get<std::string>();
      }
      pt.mult = static_cast<int>(as_int(field(p, "mult"), "mult"));
      c.points.push_back(std::move(pt));
    }
  }
  c.topological_order();  // validates the forest
  return c;
}

DualGraph graph_from_json(const Json& j) {
  const IntLattice lat = lattice_from_json(field(j, "lattice"));
  return build_dual_graph(lat, class_list(field(j, "vertices"), lat, "vertices"));
}

SDDocument sd_document_from_json(const Json& j) {
  SDDocument doc;
  doc.lattice = lattice_from_json(field(j, "lattice"));
  doc.d = class_from_json(field(j, "D"), doc.lattice);
  const auto& tag = field(j, "case");
  if (!tag.is_string()) throw InputError("case must be a string");
  doc.sd.tag = parse_sd_tag(tag.get<std::string>());
  doc.sd.e = class_from_json(field(j, "E"), doc.lattice);
  doc.sd.gammas = class_list(field(j, "gammas"), doc.lattice, "gammas");
  if (auto it = j.find("branch_curves"); it != j.end()) doc.branch_curves = class_list(*it, doc.lattice, "branch_curves");
  return doc;
}

Json to_json(const SDDocument& doc) {
  Json j{{"lattice", to_json(doc.lattice)},
         {"D", to_json(doc.d)},
         {"case", to_string(doc.sd.tag)},
         {"E", to_json(doc.sd.e)},
         {"gammas", class_list_json(doc.sd.gammas)}};
  if (!doc.branch_curves.empty()) j["branch_curves"] = class_list_json(doc.branch_curves);
  return j;
}

Json to_json(const Rational& r) {
  if (r.denominator() == 1) return Json(r.numerator());
  return Json(std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()));
}

Json to_json(const EvennessCertificate& c) {
  Json j{{"even", c.even}};
  if (c.even) {
    j["coefficients"] = c.coefficients;
    j["half_residual"] = to_json(c.half_residual);
  }
  return j;
}

Json to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(Json{{"clause", v.clause}, {"detail", v.detail}});
  Json j{{"valid", r.ok()}, {"violations", violations}, {"nef_certificate", r.nef_certificate_partial ? "partial" : "full"}};
  if (r.evenness) j["evenness"] = to_json(*r.evenness);
  return j;
}

Json to_json(const SurfaceInvariants& inv) { return Json{{"q", inv.q}, {"p_g", inv.p_g}, {"K2", inv.k2}, {"chi", inv.chi}}; }

Json to_json(const DescentStep& s) {
  return Json{{"component", s.component.vertices},
              {"type", s.component.type.name()},
              {"component_classes", class_list_json(s.component_classes)},
              {"marking", s.marking},
              {"multiplicities", s.multiplicities},
              {"Z", to_json(s.z)},
              {"new_vertices", s.new_vertices},
              {"new_Bprime", to_json(s.new_bp)},
              {"new_A", class_list_json(s.new_a)},
              {"certificate", to_json(s.certificate)},
              {"half_difference", to_json(s.half_difference)},
              {"K2_before", s.k2_before},
              {"K2", s.k2_after}};
}

Json to_json(const CubicSplitting& c) {
  Json j{{"found", c.found}, {"certificate", to_json(c.certificate)}};
  if (c.found) {
    Json jdots = Json::array();
    for (const auto& r : c.j_dot_a) jdots.push_back(to_json(r));
    j["twice_J"] = to_json(c.twice_j);
    j["J_dot_A"] = jdots;
    j["J_square"] = to_json(c.j_square);
    j["multiplicity_one"] = c.multiplicity_one;
    j["effective"] = c.effective;
  }
  j["ok"] = c.ok();
  return j;
}

Json to_json(const SDExclusion& e) {
  Json j{{"gamma", e.gamma}, {"fired", e.fired}};
  if (e.witness) {
    j["witness"] = *e.witness;
    j["witness_pairing"] = e.witness_pairing;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const ResolutionState& r) {
  Json log = Json::array();
  for (const auto& b : r.log)
    log.push_back(Json{{"point", b.point},
                       {"mult", b.mult},
                       {"exceptional", r.lattice.basis()[b.exceptional]},
                       {"L_dot_L_plus_K", b.l_dot_l_plus_k},
                       {"K2", b.k_square}});
  return Json{{"basis", r.lattice.basis()},
              {"L", to_json(r.l)},
              {"K", to_json(r.k)},
              {"branch", to_json(r.branch)},
              {"log", log}};
}

Json to_json(const examples::FixtureDescriptor& d) {
  return Json{{"name", d.name},
              {"citation", d.citation},
              {"parameters", d.parameters},
              {"t", d.t},
              {"K2", d.k2},
              {"Bprime_square", d.bp_square},
              {"xi_census", d.xi_census}};
}

}  // namespace todorov::io
