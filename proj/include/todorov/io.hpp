#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>

#include "todorov/ade.hpp"
#include "todorov/config.hpp"
#include "todorov/cover.hpp"
#include "todorov/descent.hpp"
#include "todorov/examples.hpp"
#include "todorov/lattice.hpp"

namespace todorov::io {

using Json = nlohmann::json;

/// Every reader throws InputError on malformed documents.
Json read_json(std::istream& in);
/// "-" reads stdin.
Json read_json_file(const std::string& path);

Json to_json(const DivisorClass& d);
DivisorClass class_from_json(const Json& j, const IntLattice& lat);

/// {"basis": [...], "gram": [[...]], "declared_even": [[...]]}
Json to_json(const IntLattice& lat);
IntLattice lattice_from_json(const Json& j, Parity parity = Parity::Even);

/// {"lattice", "Bprime", "A", "inventory", "negligible_ok"} plus optional
/// "sd_obstructed".
Json to_json(const BranchConfiguration& cfg);
BranchConfiguration config_from_json(const Json& j);

/// {"degree": int, "points": [{"id", "parent", "mult"}]}
Json to_json(const PlaneBranchCurve& c);
PlaneBranchCurve plane_curve_from_json(const Json& j);

/// {"lattice", "vertices": [[...]]}
DualGraph graph_from_json(const Json& j);

/// {"lattice", "D", "case", "E", "gammas", optional "branch_curves"}
struct SDDocument {
  IntLattice lattice;
  DivisorClass d;
  SDCase sd;
  std::vector<DivisorClass> branch_curves;
};
SDDocument sd_document_from_json(const Json& j);
Json to_json(const SDDocument& doc);

Json to_json(const Rational& r);
Json to_json(const EvennessCertificate& c);
Json to_json(const ValidationReport& r);
Json to_json(const SurfaceInvariants& inv);
Json to_json(const DescentStep& s);
Json to_json(const CubicSplitting& c);
Json to_json(const SDExclusion& e);
Json to_json(const ResolutionState& r);
Json to_json(const examples::FixtureDescriptor& d);

}  // namespace todorov::io
