#pragma once

#include <string>

#include "json.hpp"

#include "homsurf/actions.hpp"

namespace homsurf {

using Json = nlohmann::json;

// A number, [re, im], or an object with any of "re", "im", "pii", "twopii" (summed).
Complex complex_from_json(const Json& j);
Json complex_to_json(Complex z);

// Entries are complex points of multiplicity one or {"point": c, "mult": m}.
Divisor divisor_from_json(const Json& j);
Json divisor_to_json(const Divisor& d);

// A number (constant) or [{"frequency": c, "poly": [c0, c1, ...]}, ...].
ExpPoly exppoly_from_json(const Json& j);
Json exppoly_to_json(const ExpPoly& f);

MatX matrix_from_json(const Json& j);
Json matrix_to_json(const MatX& m);

// Family name plus optional {"n", "c", "alpha", "divisor", "hopf"}.
FamilyId family_from_json(const std::string& name, const Json& params);

GroupElement element_from_json(const FamilyId& family, const Json& j);
Json element_to_json(const GroupElement& g);

// The point schema is the one of the family's surface.
SurfacePoint point_from_json(const FamilyId& family, const Json& j);
Json point_to_json(const SurfacePoint& x);

// {"ambient": "C2" | "uaff" | "qd", "divisor": ..., "generators": [...]}
Json classify_json(const Json& input);

// Projection to a quotient row of the catalogue; params as documented for the CLI.
SurfacePoint apply_cover(const std::string& label, const FamilyId& family, const Json& params, const SurfacePoint& x);

}  // namespace homsurf
