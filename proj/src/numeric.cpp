#include "liechar/numeric.hpp"

#include <cctype>
#include <sstream>

namespace liechar {

std::string format_rational(const Rat& x) {
    std::ostringstream os;
    os << numerator(x);
    if (denominator(x) != 1) os << '/' << denominator(x);
    return os.str();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Int parse_signed_int(const std::string& s) {
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    if (!all_digits(body)) throw usage_error("invalid integer '" + s + "'");
    Int v(body);
    return neg ? Int(-v) : v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_signed_int(text));
    Int num = parse_signed_int(text.substr(0, slash));
    Int den = parse_signed_int(text.substr(slash + 1));
    if (den == 0) throw usage_error("zero denominator in '" + text + "'");
    return Rat(num) / Rat(den);
}

std::vector<Rat> parse_rational_csv(const std::string& text) {
    std::vector<Rat> out;
    if (text.empty()) return out;
    for (const std::string& part : split(text, ',')) out.push_back(parse_rational(part));
    return out;
}

std::vector<std::vector<long long>> parse_int_vectors(const std::string& text) {
    std::vector<std::vector<long long>> out;
    if (text.empty()) return out;
    for (const std::string& vec : split(text, ';')) {
        std::vector<long long> row;
        for (const std::string& part : split(vec, ',')) {
            Int v = parse_signed_int(part);
            if (v > 1000000 || v < -1000000) throw usage_error("coordinate out of range: " + part);
            row.push_back(v.convert_to<long long>());
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace liechar
