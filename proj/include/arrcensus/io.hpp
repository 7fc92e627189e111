#pragma once

// JSON interchange. Rationals are strings "p/q" or "p"; readers also take
// plain JSON integers.
//
//   normal system   {"m": 2, "rows": [["1","0"], ["2","3"], ...]}
//   arrangement     the same plus "b": ["0", "-2", ...]
//   discriminantal  {"n", "m", "hyperplanes": [{"subset": [1,2,3], "normal": [...]}, ...]}
//   collection      {"n", "m", "members": [[1,2,3], ...]}
//   catalog         {"n", "m", "chambers": [{"signs": "+-..", "witness": [...], "class": k}, ...]}

#include "arrcensus/chambers.hpp"
#include "arrcensus/charpoly.hpp"
#include "arrcensus/concurrency.hpp"
#include "arrcensus/normal_system.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace arrcensus {

using Json = nlohmann::json;

Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);
Json integer_to_json(const Integer& x);

Json vector_to_json(const RationalVector& v);
RationalVector vector_from_json(const Json& j);

Json normal_system_to_json(const NormalSystem& ns);
/// Validates the rows; throws ParseError on malformed JSON shapes.
NormalSystem normal_system_from_json(const Json& j);

Json arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const Json& j);

Json discriminantal_to_json(const DiscriminantalArrangement& da);

Json line_set_to_json(LineSet s);
LineSet line_set_from_json(const Json& j);

Json collection_to_json(const SubsetCollection& d);
SubsetCollection collection_from_json(const Json& j);

Json charpoly_to_json(const CharPolynomial& p);

Json catalog_to_json(const ChamberCatalog& catalog);
ChamberCatalog catalog_from_json(const Json& j);

/// Reads and parses a JSON file; throws ParseError naming the path.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace arrcensus
