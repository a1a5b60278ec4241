#include "hsb/io.hpp"

#include <fstream>
#include <sstream>

namespace hsb {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_fail(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(std::string("missing key '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) parse_fail(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<CMatrix> matrix_list(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) parse_fail(std::string("'") + key + "' must be an array");
  std::vector<CMatrix> out;
  for (const auto& m : v) out.push_back(matrix_from_json(m));
  return out;
}

Json nested(const CMatrix& m, bool imag) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(imag ? m(i, j).imag() : m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const CMatrix& m) {
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", nested(m, false)}, {"im", nested(m, true)}};
}

CMatrix matrix_from_json(const Json& j) {
  const int rows = int_field(j, "rows");
  const int cols = int_field(j, "cols");
  if (rows < 0 || cols < 0) parse_fail("matrix dimensions must be non-negative");
  const Json& re = field(j, "re");
  const Json& im = field(j, "im");
  auto check = [&](const Json& part, const char* name) {
    if (!part.is_array() || part.size() != static_cast<std::size_t>(rows))
      parse_fail(std::string("matrix '") + name + "' must have " + std::to_string(rows) + " rows");
    for (const auto& row : part) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(cols))
        parse_fail(std::string("matrix '") + name + "' rows must have " + std::to_string(cols) + " entries");
      for (const auto& x : row)
        if (!x.is_number()) parse_fail(std::string("matrix '") + name + "' entries must be numbers");
    }
  };
  check(re, "re");
  check(im, "im");
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) m(i, k) = Complex(re[i][k].get<double>(), im[i][k].get<double>());
  return m;
}

Json to_json(const Derivation& d) { return Json{{"a", to_json(d.a())}, {"b", to_json(d.b())}}; }

Derivation derivation_from_json(const Json& j, const JordanTriple& triple) {
  try {
    return {triple, matrix_from_json(field(j, "a")), matrix_from_json(field(j, "b"))};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error) throw;
    parse_fail(e.what());
  }
}

Json to_json(const GField& g) {
  return Json{{"epsilon", static_cast<int>(g.epsilon())}, {"v", to_json(g.v().value())}, {"delta", to_json(g.delta())}};
}

GField gfield_from_json(const Json& j) {
  try {
    const Curvature eps = curvature_from_int(int_field(j, "epsilon"));
    CMatrix v = matrix_from_json(field(j, "v"));
    const JordanTriple triple(static_cast<int>(v.rows()), static_cast<int>(v.cols()));
    return {eps, JordanElement(triple, std::move(v)), derivation_from_json(field(j, "delta"), triple)};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error) throw;
    parse_fail(e.what());
  }
}

Json to_json(const CompactPoint& p) { return Json{{"z", to_json(p.z.value())}, {"a", to_json(p.a.value())}}; }

CompactPoint compact_point_from_json(const Json& j) {
  try {
    CMatrix z = matrix_from_json(field(j, "z"));
    CMatrix a = matrix_from_json(field(j, "a"));
    const JordanTriple triple(static_cast<int>(z.rows()), static_cast<int>(z.cols()));
    return {JordanElement(triple, std::move(z)), JordanElement(triple, std::move(a))};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error) throw;
    parse_fail(e.what());
  }
}

Json to_json(const ClassificationDatum& d) {
  Json df = Json::array();
  for (const auto& m : d.df.images()) df.push_back(to_json(m));
  Json beta = Json::array();
  for (const auto& m : d.beta.images()) beta.push_back(to_json(m));
  return Json{{"triple", {{"r", d.triple.r}, {"s", d.triple.s}}},
              {"h", {{"n", d.h.n}, {"hermitian", d.h.hermitian}}},
              {"df", std::move(df)},
              {"beta", std::move(beta)}};
}

ClassificationDatum datum_from_json(const Json& j) {
  try {
    const Json& t = field(j, "triple");
    const JordanTriple triple(int_field(t, "r"), int_field(t, "s"));
    const Json& h = field(j, "h");
    const Json& herm = field(h, "hermitian");
    if (!herm.is_boolean()) parse_fail("'hermitian' must be a boolean");
    const HStructure hs(int_field(h, "n"), herm.get<bool>());
    ClassificationDatum datum{triple, hs, DfMap(triple, hs.n, matrix_list(j, "df")),
                              BetaMap(triple, hs.n, matrix_list(j, "beta"))};
    datum.validate();
    return datum;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error) throw;
    parse_fail(e.what());
  }
}

ClassificationDatum parse_datum(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
  return datum_from_json(j);
}

ClassificationDatum load_datum(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_datum(buffer.str());
}

}  // namespace hsb
