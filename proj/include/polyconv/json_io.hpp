#ifndef POLYCONV_JSON_IO_HPP
#define POLYCONV_JSON_IO_HPP

#include <json.hpp>

#include "polyconv/analysis.hpp"
#include "polyconv/certify.hpp"
#include "polyconv/convexity.hpp"
#include "polyconv/invariants.hpp"
#include "polyconv/planes.hpp"

namespace polyconv {

using json = nlohmann::json;

json to_json(cxd z);
cxd complex_from_json(const json& j);

// Planes serialize as {"alpha": [re, im], "beta": [re, im]} when a graph
// form is available, otherwise {"basis": [[zr, zi, wr, wi], [...]]}.
json to_json(const TotallyRealPlane& p);
TotallyRealPlane plane_from_json(const json& j);

json to_json(const Mat2& m);
Mat2 mat2_from_json(const json& j);

json to_json(const InvariantReport& r);
json to_json(const ConvexityVerdict& v);
json to_json(const FamilyClassification& f);
json to_json(const CurveAnalysis& c);
json to_json(const SubharmonicityReport& s);
json to_json(const KallinReport& k);

} // namespace polyconv

#endif
