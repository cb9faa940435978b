#ifndef EULCAT_IO_HPP
#define EULCAT_IO_HPP

#include <string>

#include "json.hpp"

#include "eulcat/fincat.hpp"
#include "eulcat/group.hpp"
#include "eulcat/groupact.hpp"
#include "eulcat/hocolim.hpp"
#include "eulcat/rational.hpp"

namespace eulcat {

using Json = nlohmann::ordered_json;

inline constexpr int kManifestVersion = 1;

/// {"version": 1, "kind": ..., "payload": ...}
struct Manifest {
  std::string kind;
  Json payload;
};

/// Throws ParseError on malformed JSON, unknown version or unknown kind.
Manifest parse_manifest(const std::string& text);
Manifest read_manifest(const std::string& path);
Json to_json(const Manifest& m);
std::string dump(const Manifest& m);

/// Integers and rationals travel as strings ("p/q"); plain JSON integers are
/// accepted on input.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
BigInt integer_from_json(const Json& j);

Json to_json(const FinCat& c);
Json to_json(const FinGroup& g);
Json to_json(const StrictDiagram& d);
Json to_json(const PseudoDiagram& d);
Json to_json(const ScwolAction& a);
Json to_json(const ComplexOfGroups& f);
Json to_json(const CellSpectrum& s);

/// Each parser validates what it builds; structural errors keep their own kind,
/// shape errors are ParseError.
FinCat category_from_json(const Json& j);
FinGroup group_from_json(const Json& j);
StrictDiagram diagram_from_json(const Json& j);
PseudoDiagram pseudo_diagram_from_json(const Json& j);
ScwolAction action_from_json(const Json& j);
ComplexOfGroups complex_from_json(const Json& j);
CellSpectrum spectrum_from_json(const Json& j);

}  // namespace eulcat

#endif  // EULCAT_IO_HPP
