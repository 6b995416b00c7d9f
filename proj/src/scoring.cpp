#include "eigenrank/scoring.hpp"

#include <charconv>
#include <vector>

namespace eigenrank {

namespace {

double parse_points(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw std::invalid_argument("bad points value in scoring scheme: '" + text + "'");
    return value;
}

}  // namespace

ScoringScheme ScoringScheme::parse(const std::string& text) {
    if (text == "chess") return chess();
    if (text == "football") return football();
    std::vector<std::string> parts;
    std::string cur;
    for (const char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw std::invalid_argument("scoring scheme must be chess, football, or <win>,<draw>,<loss>");
    ScoringScheme s{parse_points(parts[0]), parse_points(parts[1]), parse_points(parts[2])};
    s.validate();
    return s;
}

}  // namespace eigenrank
