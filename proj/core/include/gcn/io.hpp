#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "gcn/constructors.hpp"
#include "gcn/gcset.hpp"
#include "gcn/usage.hpp"
#include "gcn/verify.hpp"

namespace gcn {

using Json = nlohmann::json;

// Rationals are "num/den" strings (den omitted when 1), points [x, y] and
// lines [a, b, c]. Objects serialize with sorted keys, so equal values give
// byte-identical text.

Json to_json(const Rat& v);
Json to_json(const Point& p);
Json to_json(const Line& l);
Json to_json(const BivarPoly& p);
Json to_json(const NodeSet& X);
Json to_json(const FamilyInstance& inst);  // NodeSet fields plus "provenance"
Json to_json(const AnalysisReport& r);
Json to_json(const UsageReport& r);
Json to_json(const UsedLineCatalog& c);
Json to_json(const UsageCensus& c);
Json to_json(const TheoremReport& r);
Json to_json(const ReportBundle& b);

/// All parsers throw Error(MalformedInput) on a wrong shape and
/// Error(MalformedNumber) on a bad rational.
Rat rat_from_json(const Json& j);
Point point_from_json(const Json& j);
Line line_from_json(const Json& j);
BivarPoly poly_from_json(const Json& j);
NodeSet node_set_from_json(const Json& j);
/// nullopt when the document carries no "provenance" key.
std::optional<FamilyInstance> instance_from_json(const Json& j);

/// Parses text, mapping syntax errors to MalformedInput.
Json parse_json(std::string_view text);
/// Two-space indentation and a trailing newline.
std::string dump_json(const Json& j);

}  // namespace gcn
