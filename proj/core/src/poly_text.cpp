#include "hermop/poly_text.hpp"

#include <cctype>
#include <utility>

namespace hermop {

namespace {

// Splits a coefficient into (sign, printable magnitude).  The magnitude
// text never starts with '-'; "1" signals a unit that callers may omit.
std::pair<bool, std::string> coeff_text(const ParamField& c) {
    bool neg = c.num().leading_term().second < 0;
    ParamField a = neg ? -c : c;
    if (a.den().is_one() && a.num().c.size() == 1) return {neg, a.num().to_string()};
    if (a.den().is_one()) return {neg, "(" + a.num().to_string() + ")"};
    return {neg, "(" + a.num().to_string() + ")/(" + a.den().to_string() + ")"};
}

std::string monomial_text(const Monomial& m) {
    std::string out;
    for (const auto& [v, e] : m) {
        if (!out.empty()) out += "*";
        out += v.to_string();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    MultiPoly run() {
        MultiPoly p = parse_poly();
        skip_ws();
        HERMOP_DOMAIN_CHECK(pos_ == text_.size(),
                            "polynomial parse: trailing input at position " +
                                std::to_string(pos_) + " in '" + text_ + "'");
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MultiPoly parse_poly() {
        MultiPoly acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * parse_factor();
            } else if (eat('/')) {
                MultiPoly d = parse_factor();
                HERMOP_DOMAIN_CHECK(d.variables().empty(),
                                    "polynomial parse: division by a matrix-variable expression");
                HERMOP_DOMAIN_CHECK(!d.is_zero(), "polynomial parse: division by zero");
                ParamField c = d.coefficient(Monomial{});
                acc = acc.scaled(ParamField(1) / c);
            } else {
                break;
            }
        }
        return acc;
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_atom();
        if (eat('^')) {
            unsigned e = parse_uint();
            base = base.pow(e);
        }
        return base;
    }

    unsigned parse_uint() {
        skip_ws();
        HERMOP_DOMAIN_CHECK(pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])),
                            "polynomial parse: expected an integer exponent at position " +
                                std::to_string(pos_));
        unsigned v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
            HERMOP_DOMAIN_CHECK(v <= 64, "polynomial parse: exponent too large");
            ++pos_;
        }
        return v;
    }

    MultiPoly parse_atom() {
        skip_ws();
        HERMOP_DOMAIN_CHECK(pos_ < text_.size(), "polynomial parse: unexpected end of input");
        char ch = text_[pos_];
        if (ch == '-') {
            ++pos_;
            return -parse_atom();
        }
        if (ch == '(') {
            ++pos_;
            MultiPoly p = parse_poly();
            HERMOP_DOMAIN_CHECK(eat(')'), "polynomial parse: missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Int v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return MultiPoly::constant(Rat(v));
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) return parse_symbol();
        throw domain_error("polynomial parse: unexpected character '" + std::string(1, ch) +
                           "' at position " + std::to_string(pos_));
    }

    MultiPoly parse_symbol() {
        std::string word;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            word += text_[pos_++];
        if (word == "k") return MultiPoly::constant(ParamField::kappa());
        if (word == "s") return MultiPoly::constant(ParamField::sigma());
        if (word == "dinv") return MultiPoly::variable(var_dinv());
        HERMOP_DOMAIN_CHECK(word.size() == 1,
                            "polynomial parse: unknown symbol '" + word + "'");
        VarTag tag;
        switch (std::toupper(static_cast<unsigned char>(word[0]))) {
            case 'T': tag = VarTag::T; break;
            case 'Z': tag = VarTag::Z; break;
            case 'W': tag = VarTag::W; break;
            case 'X': tag = VarTag::X; break;
            case 'Y': tag = VarTag::Y; break;
            case 'D': tag = VarTag::D; break;
            default:
                throw domain_error("polynomial parse: unknown variable tag '" + word + "'");
        }
        HERMOP_DOMAIN_CHECK(pos_ + 1 < text_.size() &&
                                std::isdigit(static_cast<unsigned char>(text_[pos_])) &&
                                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])),
                            "polynomial parse: variable '" + word +
                                "' needs two index digits, e.g. " + word + "12");
        int row = text_[pos_] - '0';
        int col = text_[pos_ + 1] - '0';
        pos_ += 2;
        return MultiPoly::variable(make_var(tag, row, col));
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string to_canonical_text(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        auto [neg, ctext] = coeff_text(c);
        std::string body;
        std::string mtext = monomial_text(m);
        if (mtext.empty())
            body = ctext;
        else if (ctext == "1")
            body = mtext;
        else
            body = ctext + "*" + mtext;
        if (first) {
            out += neg ? "-" + body : body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

MultiPoly parse_polynomial(const std::string& text) { return Parser(text).run(); }

MultiPoly parse_polynomial(const std::string& text, const VarUniverse& universe) {
    MultiPoly p = parse_polynomial(text);
    for (const auto& v : p.variables())
        HERMOP_DOMAIN_CHECK(universe.contains(v),
                            "polynomial parse: variable " + v.to_string() +
                                " is outside the declared universe " + universe.describe());
    return p;
}

} // namespace hermop
