#include "knets/json_io.hpp"

#include <fstream>

#include "knets/error.hpp"

namespace knets {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(ErrorCode::ParseError, what);
}

Rational rational_from_json_value(const Json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    parse_fail("expected a rational string, got " + j.dump());
}

} // namespace

Json field_to_json(const NumberField& field) {
    Json poly = Json::array();
    for (const auto& c : field.poly()) poly.push_back(rational_to_string(c));
    return Json{{"poly", poly}};
}

NumberField field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("poly") || !j["poly"].is_array())
        parse_fail("field must be an object with a 'poly' array");
    std::vector<Rational> poly;
    for (const auto& c : j["poly"]) poly.push_back(rational_from_json_value(c));
    try {
        return NumberField::from_poly(std::move(poly));
    } catch (const Error& e) {
        parse_fail(std::string("bad defining polynomial: ") + e.what());
    }
}

Json scalar_to_json(const Scalar& s) {
    if (s.field().is_rational_field()) return rational_to_string(s.coeffs()[0]);
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(rational_to_string(c));
    return Json{{"coeffs", coeffs}};
}

Scalar scalar_from_json(const Json& j, const NumberField& field) {
    if (j.is_string() || j.is_number_integer())
        return Scalar(field, rational_from_json_value(j));
    if (j.is_object() && j.contains("coeffs") && j["coeffs"].is_array()) {
        std::vector<Rational> coeffs;
        for (const auto& c : j["coeffs"]) coeffs.push_back(rational_from_json_value(c));
        if (static_cast<int>(coeffs.size()) != field.degree())
            parse_fail("coefficient vector length " + std::to_string(coeffs.size()) +
                       " does not match field degree " + std::to_string(field.degree()));
        return Scalar::from_coeffs(field, std::move(coeffs));
    }
    parse_fail("expected a scalar (rational string or {coeffs: [...]}), got " + j.dump());
}

namespace {

Json triple_to_json(const std::array<Scalar, 3>& c) {
    return Json::array({scalar_to_json(c[0]), scalar_to_json(c[1]), scalar_to_json(c[2])});
}

std::array<Scalar, 3> triple_from_json(const Json& j, const NumberField& field) {
    if (!j.is_array() || j.size() != 3) parse_fail("expected a coordinate triple, got " + j.dump());
    return {scalar_from_json(j[0], field), scalar_from_json(j[1], field),
            scalar_from_json(j[2], field)};
}

} // namespace

Json net_to_json(const KNetConfig& config) {
    Json classes = Json::array();
    for (const auto& cls : config.classes) {
        Json lines = Json::array();
        for (const auto& l : cls.lines()) lines.push_back(triple_to_json(l.coords()));
        classes.push_back(Json{{"lines", lines}});
    }
    Json points = Json::array();
    for (const auto& p : config.points) points.push_back(triple_to_json(p.coords()));
    return Json{{"field", field_to_json(config.field)}, {"classes", classes}, {"points", points}};
}

KNetConfig net_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("classes"))
        parse_fail("net JSON needs 'field' and 'classes'");
    NumberField field = field_from_json(j["field"]);
    if (!j["classes"].is_array() || j["classes"].empty()) parse_fail("'classes' must be a nonempty array");
    std::vector<LineClass> classes;
    for (const auto& cj : j["classes"]) {
        if (!cj.is_object() || !cj.contains("lines") || !cj["lines"].is_array())
            parse_fail("each class must be an object with a 'lines' array");
        std::vector<ProjLine> lines;
        for (const auto& lj : cj["lines"]) {
            try {
                lines.emplace_back(triple_from_json(lj, field));
            } catch (const Error& e) {
                if (e.code() == ErrorCode::ParseError) throw;
                parse_fail(std::string("bad line coordinates: ") + e.what());
            }
        }
        try {
            classes.emplace_back(std::move(lines));
        } catch (const Error& e) {
            parse_fail(std::string("bad line class: ") + e.what());
        }
    }
    std::vector<ProjPoint> points;
    if (j.contains("points") && j["points"].is_array() && !j["points"].empty()) {
        for (const auto& pj : j["points"]) {
            try {
                points.emplace_back(triple_from_json(pj, field));
            } catch (const Error& e) {
                if (e.code() == ErrorCode::ParseError) throw;
                parse_fail(std::string("bad point coordinates: ") + e.what());
            }
        }
    } else {
        // points omitted: compute the cross-class meets; a shared line means
        // the configuration cannot be a net, which verification will report
        // (an empty point list fails the d^2 count).
        try {
            points = cross_class_meets(classes);
        } catch (const Error&) {
            points.clear();
        }
    }
    return KNetConfig{std::move(field), std::move(classes), std::move(points)};
}

Json latin_to_json(const LatinSquare& square) {
    return Json{{"order", square.order()}, {"cells", square.cells()}};
}

LatinSquare latin_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
        parse_fail("Latin square JSON needs a 'cells' matrix");
    Cells cells;
    for (const auto& row : j["cells"]) {
        if (!row.is_array()) parse_fail("'cells' must be a matrix");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) parse_fail("cells must be integers");
            r.push_back(v.get<int>());
        }
        cells.push_back(std::move(r));
    }
    if (j.contains("order") && j["order"].is_number_integer() &&
        j["order"].get<int>() != static_cast<int>(cells.size()))
        parse_fail("declared order does not match the matrix size");
    if (auto reason = LatinSquare::validate(cells)) parse_fail("not a Latin square: " + *reason);
    return LatinSquare(std::move(cells));
}

Json points_to_json(const NumberField& field, std::span<const ProjPoint> points) {
    Json pts = Json::array();
    for (const auto& p : points) pts.push_back(triple_to_json(p.coords()));
    return Json{{"field", field_to_json(field)}, {"points", pts}};
}

std::pair<NumberField, std::vector<ProjPoint>> points_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        parse_fail("points JSON needs a 'points' array");
    NumberField field =
        j.contains("field") ? field_from_json(j["field"]) : NumberField::rationals();
    std::vector<ProjPoint> points;
    for (const auto& pj : j["points"]) {
        try {
            points.emplace_back(triple_from_json(pj, field));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ParseError) throw;
            parse_fail(std::string("bad point coordinates: ") + e.what());
        }
    }
    return {std::move(field), std::move(points)};
}

Json line_class_to_json(const NumberField& field, const LineClass& cls) {
    Json lines = Json::array();
    for (const auto& l : cls.lines()) lines.push_back(triple_to_json(l.coords()));
    return Json{{"field", field_to_json(field)}, {"lines", lines}};
}

std::pair<NumberField, LineClass> line_class_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array())
        parse_fail("line class JSON needs a 'lines' array");
    NumberField field =
        j.contains("field") ? field_from_json(j["field"]) : NumberField::rationals();
    std::vector<ProjLine> lines;
    for (const auto& lj : j["lines"]) {
        try {
            lines.emplace_back(triple_from_json(lj, field));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ParseError) throw;
            parse_fail(std::string("bad line coordinates: ") + e.what());
        }
    }
    try {
        return {std::move(field), LineClass(std::move(lines))};
    } catch (const Error& e) {
        parse_fail(std::string("bad line class: ") + e.what());
    }
}

Json form_to_json(const DegreeForm& form) {
    Json coeffs = Json::array();
    for (const auto& c : form.coeffs()) coeffs.push_back(scalar_to_json(c));
    return Json{{"degree", form.degree()}, {"coeffs", coeffs}};
}

Json hypersurface_point_to_json(const HypersurfacePoint& p) {
    Json s = Json::array(), t = Json::array();
    for (const auto& x : p.s) s.push_back(scalar_to_json(x));
    for (const auto& x : p.t) t.push_back(scalar_to_json(x));
    return Json{{"which", quintic_kind_name(p.kind)},
                {"field", field_to_json(p.field)},
                {"s", s},
                {"t", t}};
}

HypersurfacePoint hypersurface_point_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("which") || !j.contains("s") || !j.contains("t"))
        parse_fail("hypersurface point JSON needs 'which', 's', 't'");
    std::string which = j["which"].get<std::string>();
    QuinticKind kind;
    if (which == "cyclic5") kind = QuinticKind::Cyclic;
    else if (which == "nongroup5") kind = QuinticKind::NonGroup;
    else parse_fail("unknown hypersurface '" + which + "'");
    NumberField field =
        j.contains("field") ? field_from_json(j["field"]) : NumberField::rationals();
    auto tuple = [&field](const Json& arr) {
        if (!arr.is_array() || arr.size() != 3) parse_fail("parameter tuples have 3 entries");
        return P2{scalar_from_json(arr[0], field), scalar_from_json(arr[1], field),
                  scalar_from_json(arr[2], field)};
    };
    return HypersurfacePoint{kind, field, tuple(j["s"]), tuple(j["t"])};
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json_text(text);
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace knets
