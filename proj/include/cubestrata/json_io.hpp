#pragma once

#include <json.hpp>

#include "cubestrata/atlas.hpp"
#include "cubestrata/cohomology.hpp"
#include "cubestrata/intersection.hpp"

namespace cubestrata {

using Json = nlohmann::json;

std::string vid_string(Vid v);          // "010"
Vid vid_from_string(const std::string&);

Json subdivision_to_json(const Subdivision& s);
Subdivision subdivision_from_json(const Json& j);

Json heights_to_json(const HeightFunction& h);
HeightFunction heights_from_json(const Json& j);

Json coefficients_to_json(const CoefficientAssignment& c);
CoefficientAssignment coefficients_from_json(const Json& j);

Json degeneration_to_json(const DegenerationReport& r);
Json group_to_json(const AbelianGroupDescriptor& g);
Json vinberg_to_json(const VinbergRun& run);
Json diagram_to_json(const CoxeterDiagram& d);
Json subdiagrams_to_json(const SubdiagramClassification& c);
Json crosscheck_to_json(const CrosscheckReport& r);
Json atlas_to_json(const BoundaryAtlas& a);
Json gram_to_json(const IntMatrix& m);
IntMatrix gram_from_json(const Json& j);

// Parses either an inline JSON literal or a path to a JSON file.
Json load_json_arg(const std::string& arg);

}  // namespace cubestrata
