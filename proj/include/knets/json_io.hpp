#ifndef KNETS_JSON_IO_HPP
#define KNETS_JSON_IO_HPP

#include <json.hpp>

#include "knets/families.hpp"
#include "knets/latin.hpp"
#include "knets/net.hpp"
#include "knets/pencil.hpp"

namespace knets {

using Json = nlohmann::json;

/*
 * JSON is the single exchange format.  Scalars serialize as exact strings:
 * a rational is "p/q" ("p" when q = 1), an extension element is
 * { "coeffs": ["p/q", ...] } against the field declared once per file as
 * { "field": { "poly": ["c0", ..., "1"] } }.  Rational strings are accepted
 * for extension elements (embedded constants) and plain JSON integers are
 * accepted on input.
 */

Json field_to_json(const NumberField& field);
NumberField field_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const NumberField& field);

Json net_to_json(const KNetConfig& config);
// Points may be omitted; they are then computed as the cross-class meets
// (verification decides validity of the result).
KNetConfig net_from_json(const Json& j);

Json latin_to_json(const LatinSquare& square);
LatinSquare latin_from_json(const Json& j);

Json points_to_json(const NumberField& field, std::span<const ProjPoint> points);
std::pair<NumberField, std::vector<ProjPoint>> points_from_json(const Json& j);

Json line_class_to_json(const NumberField& field, const LineClass& cls);
std::pair<NumberField, LineClass> line_class_from_json(const Json& j);

Json form_to_json(const DegreeForm& form);

Json hypersurface_point_to_json(const HypersurfacePoint& p);
HypersurfacePoint hypersurface_point_from_json(const Json& j);

Json parse_json_text(const std::string& text); // Error(ParseError) on bad JSON
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace knets

#endif
