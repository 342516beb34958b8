#pragma once

#include <json.hpp>

#include "pf/distinction.hpp"
#include "pf/embed.hpp"
#include "pf/integral.hpp"

namespace pf {

using nlohmann::json;

// scalar: {"p":3,"val":-1,"unit":"2","prec":12}; zero-like: {"p":3,"zero":true,"cap":...}
json to_json(const PadicScalar& s);
PadicScalar scalar_from_json(const json& j);

// matrices as nested arrays of scalar objects
json to_json(const PadicMatrix& m);
PadicMatrix matrix_from_json(const json& j);

json to_json(const SquareClass& c);

// {"q":3,"entries":[{"val":0,"unit":"u"},...]}
json to_json(const DiagonalForm& f);
DiagonalForm form_from_json(const json& j);

json to_json(const FormInvariants& inv);

// [{"a":1,"m":2,"eps":"eps0"},{"a":0,"m":1,"eps":"1"}]
json to_json(const JordanType& jt);
JordanType jordan_from_json(const json& j);

// {"members":["1","u*pi"],"order":2}
json to_json(const NormSubgroup& g);
NormSubgroup normsubgroup_from_json(const json& j);

json to_json(const InvolutionOrbit& orb);
json to_json(const DistinctionReport& rep);
json to_json(const LemmaReport& rep);
json to_json(const EpsilonDescriptor& d);

} // namespace pf
