#pragma once

// JSON encodings. A complex matrix is {"rows": r, "cols": c, "re": [[...]], "im": [[...]]}
// with row-major nested arrays; the other encodings are built from it.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hsb/bundle.hpp"
#include "hsb/spaces.hpp"

namespace hsb {

using Json = nlohmann::json;

Json to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

/// {"a": CMatrix, "b": CMatrix}
Json to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j, const JordanTriple& triple);

/// {"epsilon": int, "v": CMatrix, "delta": Derivation}
Json to_json(const GField& g);
GField gfield_from_json(const Json& j);

/// {"z": CMatrix, "a": CMatrix}
Json to_json(const CompactPoint& p);
CompactPoint compact_point_from_json(const Json& j);

/// {"triple": {"r", "s"}, "h": {"n", "hermitian"}, "df": [...], "beta": [...]}
/// with df in k_basis order and beta in row-major e_ij order.
Json to_json(const ClassificationDatum& d);
ClassificationDatum datum_from_json(const Json& j);

/// All parsing failures surface as Error(parse_error).
ClassificationDatum parse_datum(const std::string& text);
ClassificationDatum load_datum(const std::filesystem::path& path);

}  // namespace hsb
