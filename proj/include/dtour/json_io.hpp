#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "dtour/census.hpp"
#include "dtour/collapse.hpp"
#include "dtour/cycles.hpp"
#include "dtour/extraction.hpp"
#include "dtour/geometry.hpp"

namespace dtour {

using Json = nlohmann::ordered_json;

/// Compact form {"n":4,"d":2,"signs":[1,-1,1,-1]}.
Json to_json(const Tournament& t);
/// Accepts the compact form and the verbose {"n","d","faces":[{"face":[..],"sign":s},...]}
/// form (unlisted faces get 0). Throws ParseError.
Tournament tournament_from_json(const Json& j);

std::string serialize(const Tournament& t);
Tournament parse_tournament(std::string_view text);

/// {"kind":"cycle","weights":{"1,2,3":"1/4",...}}
Json to_json(const CycleCertificate& c);
/// {"kind":"chamber","y":{"1,2":"p/q",...}}
Json chamber_certificate_json(const PositiveCertificate& c, int n, int d);
/// {"kind":"zero-one","faces":[[1,2,3],...]}
Json to_json(const ZeroOneCycle& c);
/// {"steps":[{"free":[1,2],"removed":[[1,2,3],[1,2,4]]},...]}
Json to_json(const CollapseWitness& w);
CollapseWitness collapse_witness_from_json(const Json& j);

Json face_json(const Face& f);

/// {"d":2,"points":[["0","0"],["1","0"],...]}
Json to_json(const PointConfiguration& p);
PointConfiguration points_from_json(const Json& j);

/// {"n":..,"d":..,"x":{"1,2":"42",...}}; "n" and "d" may be omitted on input
/// when every coordinate is present.
Json to_json(const ChamberPoint& x);
ChamberPoint chamber_point_from_json(const Json& j);

Json to_json(const ExtractionStep& s);
Json to_json(const CensusReport& r);
std::string census_csv(const CensusReport& r);

/// Reads a whole file (or standard input for "-"). Throws std::runtime_error.
std::string read_text(const std::string& path);

}  // namespace dtour
