#pragma once

#include "ilsconn/elimination.hpp"
#include "ilsconn/forbidden_pattern.hpp"
#include "ilsconn/matrix.hpp"
#include "ilsconn/solution_graph.hpp"
#include "ilsconn/structure_4x3.hpp"
#include "ilsconn/witness.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

// JSON encodings. Indices are 1-based on the wire; numbers are JSON integers
// or strings such as "3/4" and "-3.25".
namespace ilsconn::io {

using nlohmann::json;

Rational rational_from_json(const json &j);
json to_json(const Rational &r);

/// {"rows": m, "cols": n, "entries": [[...], ...]}
CoeffMatrix matrix_from_json(const json &j);
json to_json(const CoeffMatrix &a);
json to_json(const SignPattern &p);

/// {"entries": [...]} or a bare array.
RhsVector vector_from_json(const json &j);
json vector_to_json(const RhsVector &b);

Point point_from_json(const json &j);
/// "1,0,2" or "[1,0,2]".
Point parse_point(std::string_view text);

json to_json(const ForbiddenPattern &fp);
ForbiddenPattern pattern_from_json(const json &j);
json to_json(const EliminationOrdering &eo);
json to_json(const ReductionResult &r);
json to_json(const ConnectivityReport &r);
json to_json(const Witness &w);
json to_json(const UniversalVerdict &v);
json to_json(const CanonicalMatch &m);
json to_json(const CanonicalPath &p);

json load_file(const std::string &path);

} // namespace ilsconn::io
