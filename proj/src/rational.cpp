#include "arrcensus/rational.hpp"

#include "arrcensus/errors.hpp"

#include <cctype>

namespace arrcensus {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(s, true)) throw ParseError("not a rational: \"" + std::string(text) + "\"");
        return Rational(parse_integer(s));
    }
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
        throw ParseError("not a rational: \"" + std::string(text) + "\"");
    }
    const Integer q = parse_integer(den);
    if (q.is_zero()) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    // Division canonicalises; the two-argument constructor would not.
    return Rational(parse_integer(num)) / Rational(q);
}

std::string format_rational(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

RationalVector parse_rational_list(std::string_view comma_separated) {
    std::vector<Rational> values;
    std::size_t start = 0;
    while (start <= comma_separated.size()) {
        const auto comma = comma_separated.find(',', start);
        const auto end = comma == std::string_view::npos ? comma_separated.size() : comma;
        values.push_back(parse_rational(comma_separated.substr(start, end - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    RationalVector out(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) out(static_cast<Eigen::Index>(i)) = values[i];
    return out;
}

RationalMatrix matrix_from_rows(const std::vector<std::vector<long>>& rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = rows.empty() ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
    RationalMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<Eigen::Index>(row.size()) != c) throw ShapeError("ragged rows");
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Rational(row[static_cast<std::size_t>(j)]);
    }
    return m;
}

RationalVector vector_from(const std::vector<long>& entries) {
    RationalVector v(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = Rational(entries[i]);
    return v;
}

}  // namespace arrcensus
