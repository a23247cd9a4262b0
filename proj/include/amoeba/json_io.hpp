#pragma once

#include <json.hpp>

#include "amoeba/classify.hpp"

namespace amoeba {

using Json = nlohmann::json;

// Rationals and integers are written as strings ("p/q") so no precision is
// lost; places as "p:2", "q:z-1", "inf", "arch", "generic".
Json to_json(const Rational &x);
Json to_json(const RatVector &v);
Json to_json(const IntVector &v);
Json to_json(const IntMatrix &m);
Json to_json(const Place &p);
Json to_json(const LaurentPoly &f);
Json to_json(const Constraint &c);
Json to_json(const Polyhedron &p);
Json to_json(const Cell &c);
Json to_json(const PolyhedralComplex &c);
Json to_json(const AdelicAmoeba &a);
Json to_json(const ArchResult &r);
Json to_json(const Halfspace &h);
Json to_json(const MeetResult &m);
Json to_json(const AdelicReport &r);
Json to_json(const Theorem1Report &r);
Json to_json(const EklReport &r);

LaurentPoly laurent_from_json(const Json &j);
Polyhedron polyhedron_from_json(const Json &j);
PolyhedralComplex complex_from_json(const Json &j);

} // namespace amoeba
