#include "hermop/rational.hpp"

#include <cctype>

namespace hermop {

Rat rat_from_string(const std::string& text) {
    HERMOP_DOMAIN_CHECK(!text.empty(), "rational: empty string");
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = (text[i] == '-');
        ++i;
    }
    auto read_digits = [&](Int& out) {
        HERMOP_DOMAIN_CHECK(i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])),
                            "rational: expected digits in '" + text + "'");
        out = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out = out * 10 + (text[i] - '0');
            ++i;
        }
    };
    Int num;
    read_digits(num);
    Int den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        read_digits(den);
        HERMOP_DOMAIN_CHECK(den != 0, "rational: zero denominator in '" + text + "'");
    }
    HERMOP_DOMAIN_CHECK(i == text.size(), "rational: trailing characters in '" + text + "'");
    Rat r(num, den);
    return neg ? Rat(-r) : r;
}

std::string rat_to_string(const Rat& r) {
    std::string out = rat_num(r).str();
    if (rat_den(r) != 1) {
        out += "/";
        out += rat_den(r).str();
    }
    return out;
}

} // namespace hermop
