#include "arrcensus/io.hpp"

#include "arrcensus/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace arrcensus {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

}  // namespace

Json rational_to_json(const Rational& x) { return format_rational(x); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw ParseError("expected a rational string or an integer, got " + j.dump());
}

Json integer_to_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return x.convert_to<std::int64_t>();
    }
    return x.str();
}

Json vector_to_json(const RationalVector& v) {
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
    return out;
}

RationalVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    RationalVector v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = rational_from_json(j[i]);
    return v;
}

Json normal_system_to_json(const NormalSystem& ns) {
    Json rows = Json::array();
    for (Index i = 0; i < ns.coeffs().rows(); ++i) rows.push_back(vector_to_json(ns.coeffs().row(i).transpose()));
    return {{"m", ns.m()}, {"rows", rows}};
}

NormalSystem normal_system_from_json(const Json& j) {
    const int m = int_field(j, "m");
    const Json& rows = field(j, "rows");
    if (!rows.is_array()) throw ParseError("\"rows\" must be an array");
    RationalMatrix coeffs(static_cast<Index>(rows.size()), m);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const RationalVector row = vector_from_json(rows[i]);
        if (row.size() != m) {
            throw ShapeError("row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(m));
        }
        coeffs.row(static_cast<Index>(i)) = row.transpose();
    }
    return NormalSystem::validate(std::move(coeffs), m);
}

Json arrangement_to_json(const Arrangement& arr) {
    Json out = normal_system_to_json(arr.system);
    out["b"] = vector_to_json(arr.b);
    return out;
}

Arrangement arrangement_from_json(const Json& j) {
    return arrangement_from_b(normal_system_from_json(j), vector_from_json(field(j, "b")));
}

Json discriminantal_to_json(const DiscriminantalArrangement& da) {
    Json hyperplanes = Json::array();
    for (Index h = 0; h < da.size(); ++h) {
        hyperplanes.push_back({{"subset", line_set_to_json(da.subset(h))},
                               {"normal", vector_to_json(da.normals().row(h).transpose())}});
    }
    return {{"n", da.n()}, {"m", da.m()}, {"hyperplanes", hyperplanes}};
}

Json line_set_to_json(LineSet s) { return s.elements(); }

LineSet line_set_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of line indices");
    LineSet s;
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<int>() < 1 || e.get<int>() > 32) {
            throw ParseError("line indices must be integers in 1..32");
        }
        s = s.with(e.get<int>());
    }
    return s;
}

Json collection_to_json(const SubsetCollection& d) {
    Json members = Json::array();
    for (LineSet s : d.member_sets()) members.push_back(line_set_to_json(s));
    return {{"n", d.n()}, {"m", d.m()}, {"members", members}};
}

SubsetCollection collection_from_json(const Json& j) {
    const int n = int_field(j, "n");
    const int m = int_field(j, "m");
    if (m < 1 || n <= m || n > 32) throw ShapeError("need 1 <= m < n <= 32");
    std::vector<LineSet> members;
    for (const auto& s : field(j, "members")) members.push_back(line_set_from_json(s));
    return SubsetCollection::of(n, m, members);
}

Json charpoly_to_json(const CharPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.descending()) coeffs.push_back(integer_to_json(c));
    return {{"coefficients", coeffs}, {"polynomial", p.to_string()}, {"factored", p.factored()}};
}

Json catalog_to_json(const ChamberCatalog& catalog) {
    Json chambers = Json::array();
    for (const auto& c : catalog.chambers()) {
        chambers.push_back({{"signs", c.signs}, {"witness", vector_to_json(c.witness)}, {"class", c.class_id}});
    }
    return {{"n", catalog.n()}, {"m", catalog.m()}, {"chambers", chambers}};
}

ChamberCatalog catalog_from_json(const Json& j) {
    const int n = int_field(j, "n");
    const int m = int_field(j, "m");
    std::vector<Chamber> chambers;
    for (const auto& c : field(j, "chambers")) {
        Chamber chamber;
        chamber.signs = field(c, "signs").get<std::string>();
        chamber.witness = vector_from_json(field(c, "witness"));
        chambers.push_back(std::move(chamber));
    }
    return ChamberCatalog(n, m, std::move(chambers));
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << '\n';
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace arrcensus
