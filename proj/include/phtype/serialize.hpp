#pragma once

#include "phtype/algebra.hpp"
#include "phtype/morphism.hpp"
#include "phtype/obstruction.hpp"

#include "json.hpp"

namespace phtype {

using Json = nlohmann::ordered_json;

std::string algebra_name(const Algebra& a);
std::string chain_string(const Algebra& a);

Json algebra_to_json(const Algebra& a);
// rebuilds labels, metric, tensor and the recorded partition; provenance is kept descriptive only
AlgebraPtr algebra_from_json(const Json& j);

Json rational_to_json(const Rational& q);
Json matrix_to_json(const ExactMatrix& m);
Json vector_to_json(const ExactVector& v);
Json morphism_to_json(const LieMorphism& f);
Json scan_to_json(const ScanReport& r);
Json certificate_to_json(const Certificate& c);

}  // namespace phtype
