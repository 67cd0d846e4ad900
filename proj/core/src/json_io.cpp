#include "hermop/json_io.hpp"

#include <json.hpp>

#include <utility>

#include "hermop/errors.hpp"
#include "hermop/poly_text.hpp"

namespace hermop {

namespace {

using Json = nlohmann::ordered_json;

Json poly2_to_json(const Poly2& p) {
    Json out = Json::array();
    for (const auto& [deg, coeff] : p.c)
        out.push_back(Json::array({deg.first, deg.second, rat_to_string(coeff)}));
    if (out.empty()) out.push_back(Json::array({0, 0, "0"}));
    return out;
}

Json param_field_to_json(const ParamField& c) {
    return Json{{"num", poly2_to_json(c.num())}, {"den", poly2_to_json(c.den())}};
}

Json monomial_to_json(const Monomial& m) {
    Json out = Json::array();
    for (const auto& [v, e] : m) out.push_back(Json::array({v.to_string(), e}));
    return out;
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(what + ": malformed JSON: " + e.what());
    }
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
    HERMOP_DOMAIN_CHECK(j.is_object(), path + ": expected an object");
    const auto it = j.find(key);
    HERMOP_DOMAIN_CHECK(it != j.end(), path + ": missing field '" + key + "'");
    return *it;
}

long int_field(const Json& j, const std::string& path) {
    HERMOP_DOMAIN_CHECK(j.is_number_integer(), path + ": expected an integer");
    return j.get<long>();
}

std::string string_field(const Json& j, const std::string& path) {
    HERMOP_DOMAIN_CHECK(j.is_string(), path + ": expected a string");
    return j.get<std::string>();
}

Poly2 poly2_from_json(const Json& j, const std::string& path) {
    HERMOP_DOMAIN_CHECK(j.is_array(), path + ": expected an array of triples");
    Poly2 out;
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string tp = path + "[" + std::to_string(t) + "]";
        const Json& triple = j[t];
        HERMOP_DOMAIN_CHECK(triple.is_array() && triple.size() == 3,
                            tp + ": expected [deg_k, deg_s, coefficient]");
        const long dk = int_field(triple[0], tp + "[0]");
        const long ds = int_field(triple[1], tp + "[1]");
        HERMOP_DOMAIN_CHECK(dk >= 0 && ds >= 0, tp + ": negative degree");
        const Rat c = rat_from_string(string_field(triple[2], tp + "[2]"));
        if (c.is_zero()) continue;
        const auto key = std::make_pair(static_cast<int>(dk), static_cast<int>(ds));
        HERMOP_DOMAIN_CHECK(out.c.find(key) == out.c.end(),
                            tp + ": duplicate degree pair");
        out.c.emplace(key, c);
    }
    return out;
}

VarId var_from_string(const std::string& name, const std::string& path) {
    if (name == "dinv") return var_dinv();
    HERMOP_DOMAIN_CHECK(name.size() == 3, path + ": bad variable name '" + name + "'");
    VarTag tag;
    switch (name[0]) {
    case 'T': tag = VarTag::T; break;
    case 'Z': tag = VarTag::Z; break;
    case 'W': tag = VarTag::W; break;
    case 'X': tag = VarTag::X; break;
    case 'Y': tag = VarTag::Y; break;
    case 'D': tag = VarTag::D; break;
    default:
        throw domain_error(path + ": bad variable name '" + name + "'");
    }
    HERMOP_DOMAIN_CHECK(name[1] >= '1' && name[1] <= '9' && name[2] >= '1' &&
                            name[2] <= '9',
                        path + ": bad variable name '" + name + "'");
    return make_var(tag, name[1] - '0', name[2] - '0');
}

Monomial monomial_from_json(const Json& j, const std::string& path) {
    HERMOP_DOMAIN_CHECK(j.is_array(), path + ": expected an array of pairs");
    Monomial m;
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string tp = path + "[" + std::to_string(t) + "]";
        const Json& pair = j[t];
        HERMOP_DOMAIN_CHECK(pair.is_array() && pair.size() == 2,
                            tp + ": expected [variable, exponent]");
        const VarId v = var_from_string(string_field(pair[0], tp + "[0]"), tp + "[0]");
        const long e = int_field(pair[1], tp + "[1]");
        HERMOP_DOMAIN_CHECK(e > 0, tp + ": exponent must be positive");
        m.emplace_back(v, static_cast<int>(e));
    }
    return normalize_monomial(std::move(m));
}

GaussRat gauss_field(const Json& j, const std::string& path) {
    return gauss_from_string(string_field(j, path));
}

Json upoly_to_json(const UPoly& p) {
    Json out = Json::array();
    if (p.is_zero()) {
        out.push_back("0");
        return out;
    }
    for (int k = 0; k <= p.degree(); ++k) out.push_back(gauss_to_string(p.coeff(k)));
    return out;
}

UPoly upoly_from_json(const Json& j, const std::string& path) {
    HERMOP_DOMAIN_CHECK(j.is_array() && !j.empty(),
                        path + ": expected a nonempty coefficient array");
    std::vector<GaussRat> c;
    for (std::size_t t = 0; t < j.size(); ++t)
        c.push_back(gauss_field(j[t], path + "[" + std::to_string(t) + "]"));
    return UPoly(std::move(c));
}

LocalPlaceSpec place_from_json_value(const Json& j, const std::string& path) {
    LocalPlaceSpec place;
    place.split_type =
        split_type_from_name(string_field(member(j, "type", path), path + ".type"));
    place.q = int_field(member(j, "q", path), path + ".q");
    place.n2 = static_cast<int>(int_field(member(j, "n2", path), path + ".n2"));
    place.chi_p = gauss_field(member(j, "chi_p", path), path + ".chi_p");
    const Json& chi = member(j, "chi_P", path);
    HERMOP_DOMAIN_CHECK(chi.is_array(), path + ".chi_P: expected an array");
    place.chi_P.clear();
    for (std::size_t t = 0; t < chi.size(); ++t)
        place.chi_P.push_back(
            gauss_field(chi[t], path + ".chi_P[" + std::to_string(t) + "]"));
    const Json& eig = member(j, "eigenvalues", path);
    HERMOP_DOMAIN_CHECK(eig.is_array(), path + ".eigenvalues: expected an array");
    for (std::size_t t = 0; t < eig.size(); ++t)
        place.eigenvalues.push_back(rat_from_string(string_field(
            eig[t], path + ".eigenvalues[" + std::to_string(t) + "]")));
    try {
        validate_local_place(place);
    } catch (const domain_error& e) {
        throw domain_error(path + ": " + e.what());
    }
    return place;
}

Json place_to_json_value(const LocalPlaceSpec& place) {
    Json chi = Json::array();
    for (const GaussRat& c : place.chi_P) chi.push_back(gauss_to_string(c));
    Json eig = Json::array();
    for (const Rat& l : place.eigenvalues) eig.push_back(rat_to_string(l));
    return Json{{"type", split_type_name(place.split_type)},
                {"q", place.q},
                {"n2", place.n2},
                {"chi_p", gauss_to_string(place.chi_p)},
                {"chi_P", std::move(chi)},
                {"eigenvalues", std::move(eig)}};
}

} // namespace

std::string multipoly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(Json{{"monomial", monomial_to_json(m)},
                             {"coefficient", param_field_to_json(c)}});
    const Json doc{{"text", to_canonical_text(p)}, {"terms", std::move(terms)}};
    return doc.dump(2);
}

MultiPoly multipoly_from_json(const std::string& text) {
    const Json doc = parse_json(text, "polynomial");
    const Json& terms = member(doc, "terms", "polynomial");
    HERMOP_DOMAIN_CHECK(terms.is_array(), "polynomial.terms: expected an array");
    MultiPoly out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string path = "polynomial.terms[" + std::to_string(t) + "]";
        const Json& term = terms[t];
        const Monomial m = monomial_from_json(member(term, "monomial", path),
                                              path + ".monomial");
        const Json& coeff = member(term, "coefficient", path);
        const Poly2 num =
            poly2_from_json(member(coeff, "num", path), path + ".coefficient.num");
        const Poly2 den =
            poly2_from_json(member(coeff, "den", path), path + ".coefficient.den");
        HERMOP_DOMAIN_CHECK(!den.is_zero(),
                            path + ".coefficient: zero denominator");
        out += MultiPoly::term(m, ParamField(num, den));
    }
    return out;
}

std::string euler_factor_to_json(const EulerFactor& f) {
    const Json doc{{"numerator", upoly_to_json(f.numerator)},
                   {"denominator", upoly_to_json(f.denominator)}};
    return doc.dump(2);
}

EulerFactor euler_factor_from_json(const std::string& text) {
    const Json doc = parse_json(text, "euler factor");
    return make_euler_factor(
        upoly_from_json(member(doc, "numerator", "euler factor"),
                        "euler factor.numerator"),
        upoly_from_json(member(doc, "denominator", "euler factor"),
                        "euler factor.denominator"));
}

std::string local_place_to_json(const LocalPlaceSpec& place) {
    return place_to_json_value(place).dump(2);
}

LocalPlaceSpec local_place_from_json(const std::string& text) {
    return place_from_json_value(parse_json(text, "place"), "place");
}

std::vector<LocalPlaceSpec> places_from_json(const std::string& text) {
    const Json doc = parse_json(text, "places");
    HERMOP_DOMAIN_CHECK(doc.is_array(), "places: expected a JSON array");
    std::vector<LocalPlaceSpec> out;
    for (std::size_t t = 0; t < doc.size(); ++t)
        out.push_back(
            place_from_json_value(doc[t], "places[" + std::to_string(t) + "]"));
    return out;
}

} // namespace hermop
