#include "ilsconn/io.hpp"

#include "ilsconn/errors.hpp"

#include <fstream>
#include <limits>

namespace ilsconn::io {

namespace {

std::vector<std::size_t> indices_to_json_base(const std::vector<std::size_t> &v) {
  std::vector<std::size_t> out(v);
  for (auto &x : out) ++x;
  return out;
}

std::vector<std::size_t> indices_from_json(const json &j, const char *what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto &e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 1)
      throw InputError(std::string(what) + " entries must be integers >= 1");
    out.push_back(e.get<std::size_t>() - 1);
  }
  return out;
}

json point_json(const Point &x) { return json(x); }

} // namespace

Rational rational_from_json(const json &j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
    return Rational(j.get<long long>());
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float())
    throw InputError("floating-point JSON numbers are not exact; write \"" +
                     j.dump() + "\" as a string");
  throw InputError("expected a number, got " + j.dump());
}

json to_json(const Rational &r) {
  if (is_integer(r)) {
    const auto &num = boost::multiprecision::numerator(r);
    if (num >= std::numeric_limits<long long>::min() &&
        num <= std::numeric_limits<long long>::max())
      return json(static_cast<long long>(num));
  }
  return json(to_string(r));
}

CoeffMatrix matrix_from_json(const json &j) {
  if (!j.is_object() || !j.contains("entries"))
    throw InputError("matrix document needs an \"entries\" array");
  const json &entries = j.at("entries");
  if (!entries.is_array()) throw InputError("matrix entries must be an array");
  std::size_t rows = entries.size();
  std::size_t cols = rows == 0 ? 0 : entries.front().size();
  if (j.contains("rows") && j.at("rows").get<std::size_t>() != rows)
    throw InputError("matrix \"rows\" does not match entries");
  if (j.contains("cols")) {
    std::size_t declared = j.at("cols").get<std::size_t>();
    if (rows != 0 && declared != cols)
      throw InputError("matrix \"cols\" does not match entries");
    cols = declared;
  }
  if (rows == 0) throw InputError("matrix must have at least one row");
  std::vector<Rational> data;
  data.reserve(rows * cols);
  for (const auto &r : entries) {
    if (!r.is_array() || r.size() != cols)
      throw InputError("matrix rows must be arrays of length " +
                       std::to_string(cols));
    for (const auto &v : r) data.push_back(rational_from_json(v));
  }
  return CoeffMatrix(rows, cols, std::move(data));
}

json to_json(const CoeffMatrix &a) {
  json entries = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (const auto &v : a.row(i)) row.push_back(to_json(v));
    entries.push_back(std::move(row));
  }
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
}

json to_json(const SignPattern &p) {
  json entries = json::array();
  for (std::size_t i = 0; i < p.rows(); ++i) {
    json row = json::array();
    for (auto v : p.row(i)) row.push_back(static_cast<int>(v));
    entries.push_back(std::move(row));
  }
  return {{"rows", p.rows()}, {"cols", p.cols()}, {"entries", entries}};
}

RhsVector vector_from_json(const json &j) {
  const json &entries = j.is_object() ? j.at("entries") : j;
  if (!entries.is_array()) throw InputError("vector entries must be an array");
  RhsVector b;
  for (const auto &v : entries) b.push_back(rational_from_json(v));
  return b;
}

json vector_to_json(const RhsVector &b) {
  json entries = json::array();
  for (const auto &v : b) entries.push_back(to_json(v));
  return {{"entries", entries}};
}

Point point_from_json(const json &j) {
  const json &entries = j.is_object() ? j.at("entries") : j;
  if (!entries.is_array()) throw InputError("point must be an array");
  Point x;
  for (const auto &v : entries) {
    if (!v.is_number_integer()) throw InputError("point coordinates must be integers");
    x.push_back(v.get<int>());
  }
  return x;
}

Point parse_point(std::string_view text) {
  std::string s(text);
  if (s.find('[') == std::string::npos) s = "[" + s + "]";
  json j = json::parse(s, nullptr, false);
  if (j.is_discarded()) throw InputError("cannot parse point \"" + std::string(text) + "\"");
  return point_from_json(j);
}

json to_json(const ForbiddenPattern &fp) {
  return {{"size", fp.size()},
          {"rows", indices_to_json_base(fp.rows)},
          {"cols", indices_to_json_base(fp.cols)}};
}

ForbiddenPattern pattern_from_json(const json &j) {
  if (!j.is_object()) throw InputError("pattern must be an object");
  return ForbiddenPattern{indices_from_json(j.at("rows"), "pattern rows"),
                          indices_from_json(j.at("cols"), "pattern cols")};
}

json to_json(const EliminationOrdering &eo) {
  return indices_to_json_base(eo.columns);
}

json to_json(const ReductionResult &r) {
  return {{"eliminated", indices_to_json_base(r.eliminated)},
          {"residual", indices_to_json_base(r.residual)}};
}

json to_json(const ConnectivityReport &r) {
  json points = json::array();
  for (const auto &x : r.points) points.push_back(point_json(x));
  json labels = json::array();
  for (auto l : r.labels) labels.push_back(l + 1);
  json certificate = nullptr;
  if (r.certificate)
    certificate = json::array({point_json(r.certificate->first),
                               point_json(r.certificate->second)});
  return {{"verdict", to_string(r.verdict)},
          {"connected", r.connected()},
          {"feasibleCount", r.feasible_count()},
          {"componentCount", r.component_count},
          {"points", points},
          {"componentLabel", labels},
          {"certificate", certificate}};
}

json to_json(const Witness &w) {
  return {{"b", vector_to_json(w.b)},
          {"pointP", point_json(w.p)},
          {"pointQ", point_json(w.q)},
          {"method", to_string(w.method)}};
}

json to_json(const UniversalVerdict &v) {
  return {{"verdict", v.universally_connected ? "universallyConnected"
                                              : "notUniversallyConnected"},
          {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
          {"path", to_string(v.path)},
          {"searchedGridSize", v.searched_grid_size},
          {"hasForbiddenPattern", v.has_forbidden_pattern},
          {"hasEliminationOrdering", v.has_elimination_ordering}};
}

json to_json(const CanonicalMatch &m) {
  std::vector<std::size_t> rows(m.row_perm.begin(), m.row_perm.end());
  std::vector<std::size_t> cols(m.col_perm.begin(), m.col_perm.end());
  return {{"rowPerm", indices_to_json_base(rows)},
          {"colPerm", indices_to_json_base(cols)}};
}

json to_json(const CanonicalPath &p) {
  json points = json::array();
  for (const auto &x : p.points) points.push_back(point_json(x));
  return {{"points", points}};
}

json load_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw InputError(path + " is not valid JSON");
  return j;
}

} // namespace ilsconn::io
