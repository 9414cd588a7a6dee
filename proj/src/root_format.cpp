#include "convord/root_format.hpp"

#include <cctype>
#include <sstream>

namespace convord {

std::string format_root(const Root& r) {
    std::ostringstream os;
    os << r.level << " d";
    for (size_t i = 0; i < r.finite.size(); ++i) {
        Int ci = r.finite[i];
        if (ci == 0) continue;
        os << (ci > 0 ? " + " : " - ");
        if (std::abs(ci) != 1) os << std::abs(ci) << " ";
        os << "a" << (i + 1);
    }
    return os.str();
}

Root parse_root(const std::string& text, int rank) {
    Root r{0, IntVec(size_t(rank), 0)};
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto bad = [&](const std::string& why) {
        throw std::invalid_argument("parse_root: " + why + " in \"" + text + "\"");
    };
    bool first = true;
    bool saw_delta = false;
    skip();
    if (pos == text.size()) bad("empty input");
    while (pos < text.size()) {
        Int sign = 1;
        skip();
        if (!first || text[pos] == '+' || text[pos] == '-') {
            if (pos == text.size() || (text[pos] != '+' && text[pos] != '-')) bad("expected sign");
            sign = text[pos] == '+' ? 1 : -1;
            ++pos;
            skip();
        }
        first = false;
        Int coef = 1;
        bool has_digits = pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
        if (has_digits) {
            coef = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                coef = coef * 10 + (text[pos++] - '0');
            skip();
        }
        if (pos >= text.size()) bad("term without a unit");
        if (text[pos] == 'd') {
            ++pos;
            if (saw_delta) bad("repeated delta term");
            saw_delta = true;
            r.level = sign * coef;
        } else if (text[pos] == 'a') {
            ++pos;
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                bad("expected simple-root index");
            int idx = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                idx = idx * 10 + (text[pos++] - '0');
            if (idx < 1 || idx > rank) bad("simple-root index out of range");
            r.finite[size_t(idx - 1)] += sign * coef;
        } else {
            bad("unknown unit");
        }
        skip();
    }
    return r;
}

}  // namespace convord
