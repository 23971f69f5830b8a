#pragma once

#include <json.hpp>

#include "stacky/fan.hpp"
#include "stacky/fixed_points.hpp"
#include "stacky/lattice.hpp"
#include "stacky/picard.hpp"
#include "stacky/stability.hpp"

namespace stacky {

using json = nlohmann::json;

// Exact values cross the JSON boundary as decimal strings; counts and
// indices stay numeric.
json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const json& j);

json to_json(const FGAbelianGroup& g);
FGAbelianGroup fg_group_from_json(const json& j);

json to_json(const Fan2D& fan);
json to_json(const StackyFan& sf);
json to_json(const QuotientPresentation& qp);
json to_json(const RayQuotient& rq);
json to_json(const DinfLineClass& c);
json to_json(const GoodDivisorVerdict& v);
json to_json(const GoodSheafVerdict& v);
json to_json(const StabilityVerdict& v);
json to_json(const YoungDiagram& y);
json to_json(const FixedPoint& fp);

HilbertPoly hilbert_poly_from_json(const json& j);

} // namespace stacky
