// hermop: exact computations around invariant differential operators on
// hermitian half-spaces, with local L-factor and archimedean checks.
//
// Exit codes: 0 success, 1 usage error, 2 domain error (the emitted
// document is then a structured error record).  Output format is chosen
// by --format text|json|csv; the HERMOP_FORMAT environment variable
// changes only the default.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hermop/condition_a.hpp"
#include "hermop/diff_ops.hpp"
#include "hermop/errors.hpp"
#include "hermop/howe.hpp"
#include "hermop/json_io.hpp"
#include "hermop/local_factors.hpp"
#include "hermop/numeric_arch.hpp"
#include "hermop/poly_text.hpp"
#include "hermop/rat_matrix.hpp"
#include "hermop/weil.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace hermop;

enum class Format { text, json, csv };

Format format_from_name(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw domain_error("unknown output format '" + name + "'");
}

std::string num_text(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string monomial_text(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : m) {
        if (!out.empty()) out += "*";
        out += v.to_string();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string param_field_text(const ParamField& c) {
    if (c.den().is_one()) return c.num().to_string();
    return "(" + c.num().to_string() + ")/(" + c.den().to_string() + ")";
}

Json param_field_json(const ParamField& c) {
    auto poly2 = [](const Poly2& p) {
        Json out = Json::array();
        for (const auto& [deg, coeff] : p.c)
            out.push_back(Json::array({deg.first, deg.second, rat_to_string(coeff)}));
        if (out.empty()) out.push_back(Json::array({0, 0, "0"}));
        return out;
    };
    return Json{{"num", poly2(c.num())},
                {"den", poly2(c.den())},
                {"text", param_field_text(c)}};
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        std::string t;
        for (char c : cur)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) continue;
        try {
            std::size_t used = 0;
            const int v = std::stoi(t, &used);
            HERMOP_DOMAIN_CHECK(used == t.size(), what + ": bad integer '" + t + "'");
            out.push_back(v);
        } catch (const std::exception&) {
            throw domain_error(what + ": bad integer '" + t + "'");
        }
    }
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& text, const std::string& what) {
    std::vector<Rat> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        try {
            out.push_back(rat_from_string(cur));
        } catch (const domain_error& e) {
            throw domain_error(what + ": " + e.what());
        }
    }
    return out;
}

std::vector<GaussRat> parse_gauss_list(const std::string& text,
                                       const std::string& what) {
    std::vector<GaussRat> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        try {
            out.push_back(gauss_from_string(cur));
        } catch (const domain_error& e) {
            throw domain_error(what + ": " + e.what());
        }
    }
    return out;
}

// Weight pairs "(k1,k2;l1,l2),(...)": one parenthesized (k; l) group per
// block, partitions as comma-separated entries, either side may be empty.
std::vector<WeightPair> parse_weight_pairs(const std::string& text) {
    std::vector<std::string> groups;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '(') ++depth;
        if (c == ')') --depth;
        HERMOP_DOMAIN_CHECK(depth >= 0, "weights: unbalanced parentheses");
        if (c == ',' && depth == 0) {
            groups.push_back(cur);
            cur.clear();
            continue;
        }
        cur += c;
    }
    HERMOP_DOMAIN_CHECK(depth == 0, "weights: unbalanced parentheses");
    if (!cur.empty()) groups.push_back(cur);
    std::vector<WeightPair> out;
    for (const std::string& g : groups) {
        HERMOP_DOMAIN_CHECK(g.size() >= 2 && g.front() == '(' && g.back() == ')',
                            "weights: expected a parenthesized (k;l) group, got '" +
                                g + "'");
        const std::string body = g.substr(1, g.size() - 2);
        const std::size_t semi = body.find(';');
        HERMOP_DOMAIN_CHECK(semi != std::string::npos,
                            "weights: missing ';' in group '" + g + "'");
        WeightPair w;
        w.k = parse_int_list(body.substr(0, semi), "weights");
        w.l = parse_int_list(body.substr(semi + 1), "weights");
        out.push_back(std::move(w));
    }
    HERMOP_DOMAIN_CHECK(!out.empty(), "weights: empty weight list");
    return out;
}

// Matrix rows separated by ';', entries by ','.
RatMatrix parse_rat_matrix(const std::string& text) {
    RatMatrix out;
    std::string row;
    std::istringstream in(text);
    while (std::getline(in, row, ';'))
        out.push_back(parse_rat_list(row, "matrix"));
    HERMOP_DOMAIN_CHECK(!out.empty(), "matrix: empty input");
    return out;
}

std::string int_list_text(const std::vector<int>& v, char sep) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    HERMOP_DOMAIN_CHECK(in.good(), "cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct PolyTable {
    std::string label;
    const MultiPoly& poly;
};

std::string poly_csv(const std::vector<PolyTable>& parts) {
    std::string out = "part,monomial,coefficient\n";
    for (const PolyTable& part : parts)
        for (const auto& [m, c] : part.poly.terms())
            out += part.label + "," + monomial_text(m) + "," + param_field_text(c) +
                   "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Subcommand handlers.  Each returns the finished document.

std::string run_operator_image(const std::string& poly, int n, bool with_s,
                               Format format) {
    const MultiPoly p = parse_polynomial(poly);
    const MultiPoly image = with_s ? psi_kappa_s(p, n) : phi_kappa(p, n);
    switch (format) {
    case Format::text: return to_canonical_text(image) + "\n";
    case Format::json: return multipoly_to_json(image) + "\n";
    case Format::csv: return poly_csv({{"image", image}});
    }
    return {};
}

std::string run_rewrite_q(const std::string& poly, const std::string& exponent,
                          Format format) {
    RewriteMode mode;
    if (exponent == "kappa")
        mode = RewriteMode::plain_kappa;
    else if (exponent == "kappa-half-plus-s")
        mode = RewriteMode::kappa_half_plus_s;
    else
        throw domain_error("unknown exponent mode '" + exponent + "'");
    const DeltaWord word = rewrite_word(parse_polynomial(poly), mode);
    switch (format) {
    case Format::text:
        return "q: " + to_canonical_text(word.q) + "\n" +
               "delta exponent: " + param_field_text(word.exponent()) + "\n";
    case Format::json: {
        Json doc{{"q", Json::parse(multipoly_to_json(word.q))},
                 {"exponent", param_field_json(word.exponent())}};
        return doc.dump(2) + "\n";
    }
    case Format::csv: {
        std::string out = poly_csv({{"q", word.q}});
        out += "exponent,," + param_field_text(word.exponent()) + "\n";
        return out;
    }
    }
    return {};
}

std::string run_e_coeffs(int n, int max_degree, Format format) {
    const ECoefficientMap coeffs = E_coefficients(n, max_degree);
    switch (format) {
    case Format::text: {
        std::string out;
        for (const auto& [m, c] : coeffs)
            out += monomial_text(m) + ": " + param_field_text(c) + "\n";
        return out;
    }
    case Format::json: {
        Json arr = Json::array();
        for (const auto& [m, c] : coeffs) {
            Json mono = Json::array();
            for (const auto& [v, e] : m)
                mono.push_back(Json::array({v.to_string(), e}));
            arr.push_back(Json{{"monomial", std::move(mono)},
                               {"monomial_text", monomial_text(m)},
                               {"coefficient", param_field_json(c)}});
        }
        return arr.dump(2) + "\n";
    }
    case Format::csv: {
        std::string out = "monomial,coefficient\n";
        for (const auto& [m, c] : coeffs)
            out += monomial_text(m) + "," + param_field_text(c) + "\n";
        return out;
    }
    }
    return {};
}

std::string run_check_pluriharmonic(const std::string& poly, int rows, int kcols,
                                    const std::string& blocks_text, Format format) {
    WeilSpaceSpec spec;
    spec.n = rows;
    spec.kcols = kcols;
    const WeilPoly wp = make_weil_poly(spec, parse_polynomial(poly));
    std::string mode = "all-pairs";
    std::vector<int> blocks;
    bool ok;
    if (blocks_text.empty()) {
        ok = is_pluriharmonic(wp);
    } else {
        blocks = parse_int_list(blocks_text, "blocks");
        ok = is_pluriharmonic_within_blocks(wp, blocks);
        mode = "within-blocks";
    }
    switch (format) {
    case Format::text: {
        std::string out = std::string("pluriharmonic: ") + (ok ? "yes" : "no") +
                          " (mode: " + mode;
        if (!blocks.empty()) out += " " + int_list_text(blocks, ',');
        return out + ")\n";
    }
    case Format::json: {
        Json doc{{"pluriharmonic", ok}, {"mode", mode}};
        if (!blocks.empty()) doc["blocks"] = blocks;
        return doc.dump(2) + "\n";
    }
    case Format::csv:
        return "pluriharmonic,mode\n" + std::string(ok ? "true" : "false") + "," +
               mode + "\n";
    }
    return {};
}

std::string run_solve_condition_a(const std::string& sizes_text, int kcols,
                                  bool symbolic, const std::string& weights_text,
                                  Format format) {
    const std::vector<int> sizes = parse_int_list(sizes_text, "sizes");
    const std::vector<WeightPair> weights = parse_weight_pairs(weights_text);
    std::vector<VectorPoly> basis;
    if (symbolic) {
        basis = solve_condition_A_symbolic(sizes, weights);
    } else {
        BlockSpec spec;
        spec.sizes = sizes;
        spec.kcols = kcols;
        basis = solve_condition_A(spec, weights);
    }
    switch (format) {
    case Format::text: {
        std::string out = "solutions: " + std::to_string(basis.size()) + "\n";
        for (std::size_t i = 0; i < basis.size(); ++i) {
            out += "[" + std::to_string(i) + "] hwv: " +
                   to_canonical_text(basis[i].hwv) + "\n";
            for (const auto& [label, comp] : basis[i].generated_components)
                out += "    " + label + ": " + to_canonical_text(comp) + "\n";
        }
        return out;
    }
    case Format::json: {
        Json arr = Json::array();
        for (const VectorPoly& v : basis) {
            Json comps = Json::object();
            for (const auto& [label, comp] : v.generated_components)
                comps[label] = Json::parse(multipoly_to_json(comp));
            arr.push_back(Json{{"hwv", Json::parse(multipoly_to_json(v.hwv))},
                               {"components", std::move(comps)}});
        }
        const Json doc{{"dimension", basis.size()}, {"basis", std::move(arr)}};
        return doc.dump(2) + "\n";
    }
    case Format::csv: {
        std::string out = "solution,part,polynomial\n";
        for (std::size_t i = 0; i < basis.size(); ++i) {
            out += std::to_string(i) + ",hwv," + to_canonical_text(basis[i].hwv) +
                   "\n";
            for (const auto& [label, comp] : basis[i].generated_components)
                out += std::to_string(i) + "," + label + "," +
                       to_canonical_text(comp) + "\n";
        }
        return out;
    }
    }
    return {};
}

std::string run_enumerate_deltas(int n, int kappa, int max_boxes, Format format) {
    const std::vector<YoungPair> family = enumerate_delta(n, kappa, max_boxes);
    switch (format) {
    case Format::text: {
        std::string out = "d1          d2          sigma_left      sigma_right     "
                          "lambda          dim\n";
        for (const YoungPair& d : family) {
            const auto [left, right] = sigma_map(d);
            const GLWeight lam = lambda_map(d);
            auto pad = [](std::string s, std::size_t w) {
                if (s.size() < w) s += std::string(w - s.size(), ' ');
                return s;
            };
            out += pad(int_list_text(d.d1, ','), 12) +
                   pad(int_list_text(d.d2, ','), 12) +
                   pad(int_list_text(left, ','), 16) +
                   pad(int_list_text(right, ','), 16) +
                   pad(int_list_text(lam, ','), 16) + gl_dimension(lam).str() +
                   "\n";
        }
        return out;
    }
    case Format::json: {
        Json arr = Json::array();
        for (const YoungPair& d : family) {
            const auto [left, right] = sigma_map(d);
            const GLWeight lam = lambda_map(d);
            arr.push_back(Json{{"d1", d.d1},
                               {"d2", d.d2},
                               {"sigma", Json{{"left", left}, {"right", right}}},
                               {"lambda", lam},
                               {"dim", gl_dimension(lam).str()}});
        }
        return arr.dump(2) + "\n";
    }
    case Format::csv: {
        std::string out = "d1,d2,sigma_left,sigma_right,lambda,dim\n";
        for (const YoungPair& d : family) {
            const auto [left, right] = sigma_map(d);
            const GLWeight lam = lambda_map(d);
            out += int_list_text(d.d1, ' ') + "," + int_list_text(d.d2, ' ') + "," +
                   int_list_text(left, ' ') + "," + int_list_text(right, ' ') + "," +
                   int_list_text(lam, ' ') + "," + gl_dimension(lam).str() + "\n";
        }
        return out;
    }
    }
    return {};
}

LocalPlaceSpec build_place(const std::string& type, long q, int n2,
                           const std::string& chi, const std::string& chi_p,
                           const std::string& eigen) {
    LocalPlaceSpec place;
    place.split_type = split_type_from_name(type);
    place.q = q;
    place.n2 = n2;
    place.chi_P = parse_gauss_list(chi, "chi");
    place.eigenvalues = parse_rat_list(eigen, "eigen");
    if (!chi_p.empty()) {
        place.chi_p = gauss_from_string(chi_p);
    } else {
        // Default: the value at the base prime ideal p O_K, i.e. chi at P,
        // P^2, or P1 P2 according to the splitting.
        HERMOP_DOMAIN_CHECK(!place.chi_P.empty(), "chi: empty character list");
        switch (place.split_type) {
        case SplitType::inert: place.chi_p = place.chi_P[0]; break;
        case SplitType::ramified:
            place.chi_p = place.chi_P[0] * place.chi_P[0];
            break;
        case SplitType::split:
            HERMOP_DOMAIN_CHECK(place.chi_P.size() == 2,
                                "chi: split places take two character values");
            place.chi_p = place.chi_P[0] * place.chi_P[1];
            break;
        }
    }
    validate_local_place(place);
    return place;
}

Json factor_json_value(const EulerFactor& f) {
    return Json::parse(euler_factor_to_json(f));
}

std::string run_local_factor(const LocalPlaceSpec& place, bool reduce_factor,
                             Format format) {
    EulerFactor f = satake_local_factor(place);
    if (reduce_factor) f = reduce(f);
    switch (format) {
    case Format::text:
        return "numerator: " + upoly_to_string(f.numerator) + "\n" +
               "denominator: " + upoly_to_string(f.denominator) + "\n";
    case Format::json: return euler_factor_to_json(f) + "\n";
    case Format::csv: {
        std::string out = "part,degree,coefficient\n";
        for (int k = 0; k <= f.numerator.degree(); ++k)
            out += "numerator," + std::to_string(k) + "," +
                   gauss_to_string(f.numerator.coeff(k)) + "\n";
        for (int k = 0; k <= f.denominator.degree(); ++k)
            out += "denominator," + std::to_string(k) + "," +
                   gauss_to_string(f.denominator.coeff(k)) + "\n";
        return out;
    }
    }
    return {};
}

std::string run_euler_product(const std::string& path, std::optional<long> s,
                              Format format) {
    const std::vector<LocalPlaceSpec> places = places_from_json(read_file(path));
    if (places.empty()) {
        switch (format) {
        case Format::text: return "places: 0\n";
        case Format::json: return "[]\n";
        case Format::csv: return "index,q,type,numerator,denominator\n";
        }
    }
    const PartialEulerProduct product = partial_euler_product(places);
    std::optional<GaussRat> value;
    if (s) value = evaluate_at_integer_s(product, *s);
    switch (format) {
    case Format::text: {
        std::string out = "places: " + std::to_string(places.size()) + "\n";
        for (const auto& [place, factor] : product.factors) {
            out += split_type_name(place.split_type) + " q=" +
                   std::to_string(place.q) + ": numerator = " +
                   upoly_to_string(factor.numerator) + "; denominator = " +
                   upoly_to_string(factor.denominator) + "\n";
        }
        if (value)
            out += "value at s=" + std::to_string(*s) + ": " +
                   gauss_to_string(*value) + "\n";
        return out;
    }
    case Format::json: {
        Json arr = Json::array();
        for (const auto& [place, factor] : product.factors)
            arr.push_back(Json{{"place", Json::parse(local_place_to_json(place))},
                               {"factor", factor_json_value(factor)}});
        if (!value) return arr.dump(2) + "\n";
        const Json doc{{"factors", std::move(arr)},
                       {"s", *s},
                       {"value", gauss_to_string(*value)}};
        return doc.dump(2) + "\n";
    }
    case Format::csv: {
        std::string out = "index,q,type,numerator,denominator\n";
        for (std::size_t i = 0; i < product.factors.size(); ++i) {
            const auto& [place, factor] = product.factors[i];
            out += std::to_string(i) + "," + std::to_string(place.q) + "," +
                   split_type_name(place.split_type) + "," +
                   upoly_to_string(factor.numerator) + "," +
                   upoly_to_string(factor.denominator) + "\n";
        }
        if (value)
            out += "value,,,s=" + std::to_string(*s) + "," +
                   gauss_to_string(*value) + "\n";
        return out;
    }
    }
    return {};
}

std::string run_classify_place(long long disc, long long p, Format format) {
    const SplitType t = classify_place(Int(disc), Int(p));
    switch (format) {
    case Format::text: return split_type_name(t) + "\n";
    case Format::json: {
        const Json doc{{"disc", disc}, {"p", p}, {"type", split_type_name(t)}};
        return doc.dump(2) + "\n";
    }
    case Format::csv:
        return "disc,p,type\n" + std::to_string(disc) + "," + std::to_string(p) +
               "," + split_type_name(t) + "\n";
    }
    return {};
}

std::string run_verify_xi(int n1, int n2, std::optional<int> r, Format format) {
    std::vector<std::array<int, 3>> cases;
    if (r) {
        cases.push_back({n1, n2, *r});
    } else {
        HERMOP_DOMAIN_CHECK(0 <= n2 && n2 <= n1, "verify-xi: require n2 <= n1");
        for (int rr = 0; rr <= n2; ++rr) cases.push_back({n1, n2, rr});
    }
    switch (format) {
    case Format::text: {
        std::string out;
        for (const auto& [a, b, c] : cases)
            out += "xi(n1=" + std::to_string(a) + ", n2=" + std::to_string(b) +
                   ", r=" + std::to_string(c) +
                   "): " + (verify_xi_unitary(a, b, c) ? "unitary" : "NOT unitary") +
                   "\n";
        return out;
    }
    case Format::json: {
        Json arr = Json::array();
        for (const auto& [a, b, c] : cases)
            arr.push_back(Json{{"n1", a},
                               {"n2", b},
                               {"r", c},
                               {"unitary", verify_xi_unitary(a, b, c)}});
        return arr.dump(2) + "\n";
    }
    case Format::csv: {
        std::string out = "n1,n2,r,unitary\n";
        for (const auto& [a, b, c] : cases)
            out += std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + "," +
                   (verify_xi_unitary(a, b, c) ? "true" : "false") + "\n";
        return out;
    }
    }
    return {};
}

std::string run_gaussian_check(int n, int d, const std::string& y_text,
                               const QuadratureConfig& cfg, Format format) {
    const RatMatrix y = y_text.empty() ? rat_identity(n) : parse_rat_matrix(y_text);
    const GaussianCheckResult r = gaussian_det_check(n, d, y, cfg);
    switch (format) {
    case Format::text:
        return "numeric: " + num_text(r.numeric) + "\n" +
               "reference: " + num_text(r.reference) + "\n" +
               "relative error: " + num_text(r.rel_error) + "\n" +
               "std error: " + num_text(r.std_error) + "\n";
    case Format::json: {
        const Json doc{{"numeric", r.numeric},
                       {"reference", r.reference},
                       {"rel_error", r.rel_error},
                       {"std_error", r.std_error}};
        return doc.dump(2) + "\n";
    }
    case Format::csv:
        return "numeric,reference,rel_error,std_error\n" + num_text(r.numeric) +
               "," + num_text(r.reference) + "," + num_text(r.rel_error) + "," +
               num_text(r.std_error) + "\n";
    }
    return {};
}

std::string run_arch_constant(int k, double s, const QuadratureConfig& cfg,
                              Format format) {
    const double value = arch_constant_scalar(k, s, cfg);
    const double reference = arch_constant_reference(k, s);
    const double rel = std::abs(value - reference) / std::abs(reference);
    switch (format) {
    case Format::text:
        return "value: " + num_text(value) + "\n" +
               "closed form: " + num_text(reference) + "\n" +
               "relative error: " + num_text(rel) + "\n";
    case Format::json: {
        const Json doc{
            {"value", value}, {"closed_form", reference}, {"rel_error", rel}};
        return doc.dump(2) + "\n";
    }
    case Format::csv:
        return "value,closed_form,rel_error\n" + num_text(value) + "," +
               num_text(reference) + "," + num_text(rel) + "\n";
    }
    return {};
}

void write_document(const std::string& doc, const std::string& path) {
    if (path.empty()) {
        std::cout << doc;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    HERMOP_DOMAIN_CHECK(out.good(), "cannot open output file '" + path + "'");
    out << doc;
}

} // namespace

int main(int argc, char** argv) {
    std::string format_name = "text";
    if (const char* env = std::getenv("HERMOP_FORMAT")) {
        const std::string value = env;
        if (value != "text" && value != "json" && value != "csv") {
            std::cerr << "HERMOP_FORMAT: unknown output format '" << value << "'\n";
            return 1;
        }
        format_name = value;
    }

    CLI::App app{"exact invariant-operator and local-factor computations"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output_path;
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output", output_path, "write the document to this path");

    std::function<std::string(Format)> action;

    // phi-kappa / psi
    struct ImageOpts {
        int n = 1;
        std::string poly;
    };
    auto phi_opts = std::make_shared<ImageOpts>();
    auto* phi_cmd = app.add_subcommand(
        "phi-kappa", "closed-form operator image of a polynomial in T");
    phi_cmd->add_option("--n", phi_opts->n, "matrix size")->required();
    phi_cmd->add_option("--poly", phi_opts->poly, "polynomial in T entries")
        ->required();
    phi_cmd->callback([&action, phi_opts] {
        action = [phi_opts](Format f) {
            return run_operator_image(phi_opts->poly, phi_opts->n, false, f);
        };
    });

    auto psi_opts = std::make_shared<ImageOpts>();
    auto* psi_cmd = app.add_subcommand(
        "psi", "operator image with exponent kappa/2 + s");
    psi_cmd->add_option("--n", psi_opts->n, "matrix size")->required();
    psi_cmd->add_option("--poly", psi_opts->poly, "polynomial in T entries")
        ->required();
    psi_cmd->callback([&action, psi_opts] {
        action = [psi_opts](Format f) {
            return run_operator_image(psi_opts->poly, psi_opts->n, true, f);
        };
    });

    // rewrite-q
    struct RewriteOpts {
        std::string poly;
        std::string exponent = "kappa";
    };
    auto rw_opts = std::make_shared<RewriteOpts>();
    auto* rw_cmd = app.add_subcommand(
        "rewrite-q", "rewrite-rule route: Q with the derivative matrix renamed D");
    rw_cmd->add_option("--poly", rw_opts->poly, "polynomial in T entries")
        ->required();
    rw_cmd->add_option("--exponent", rw_opts->exponent,
                       "delta exponent: kappa or kappa-half-plus-s")
        ->check(CLI::IsMember({"kappa", "kappa-half-plus-s"}));
    rw_cmd->callback([&action, rw_opts] {
        action = [rw_opts](Format f) {
            return run_rewrite_q(rw_opts->poly, rw_opts->exponent, f);
        };
    });

    // e-coeffs
    struct ECoeffOpts {
        int n = 1;
        int max_degree = 3;
    };
    auto ec_opts = std::make_shared<ECoeffOpts>();
    auto* ec_cmd = app.add_subcommand(
        "e-coeffs", "coefficients of the determinant generating series");
    ec_cmd->add_option("--n", ec_opts->n, "matrix size")->required();
    ec_cmd->add_option("--max-degree", ec_opts->max_degree, "truncation degree")
        ->required();
    ec_cmd->callback([&action, ec_opts] {
        action = [ec_opts](Format f) {
            return run_e_coeffs(ec_opts->n, ec_opts->max_degree, f);
        };
    });

    // check-pluriharmonic
    struct PluriOpts {
        std::string poly;
        int rows = 1;
        int kcols = 1;
        std::string blocks;
    };
    auto ph_opts = std::make_shared<PluriOpts>();
    auto* ph_cmd = app.add_subcommand(
        "check-pluriharmonic",
        "test a polynomial in X, Y for pluriharmonicity");
    ph_cmd->add_option("--poly", ph_opts->poly, "polynomial in X, Y entries")
        ->required();
    ph_cmd->add_option("--rows", ph_opts->rows, "number of rows")->required();
    ph_cmd->add_option("--kcols", ph_opts->kcols, "number of columns")->required();
    ph_cmd->add_option("--blocks", ph_opts->blocks,
                       "row block sizes; restricts the test to within-block pairs");
    ph_cmd->callback([&action, ph_opts] {
        action = [ph_opts](Format f) {
            return run_check_pluriharmonic(ph_opts->poly, ph_opts->rows,
                                           ph_opts->kcols, ph_opts->blocks, f);
        };
    });

    // solve-condition-a
    struct SolveOpts {
        std::string sizes;
        int kcols = 0;
        bool symbolic = false;
        std::string weights;
    };
    auto sv_opts = std::make_shared<SolveOpts>();
    auto* sv_cmd = app.add_subcommand(
        "solve-condition-a",
        "highest-weight solutions of the block restriction condition");
    sv_cmd->add_option("--sizes", sv_opts->sizes, "block sizes, e.g. 1,1")
        ->required();
    auto* kcols_opt =
        sv_cmd->add_option("--kcols", sv_opts->kcols, "concrete column count");
    auto* sym_opt = sv_cmd->add_flag("--symbolic", sv_opts->symbolic,
                                     "solve with the column count symbolic");
    kcols_opt->excludes(sym_opt);
    sv_cmd->add_option("--weights", sv_opts->weights,
                       "one (k;l) group per block, e.g. \"(1;1),(1;1)\"")
        ->required();
    sv_cmd->callback([&action, sv_opts] {
        if (!sv_opts->symbolic && sv_opts->kcols <= 0)
            throw CLI::ValidationError(
                "solve-condition-a", "--kcols is required unless --symbolic is set");
        action = [sv_opts](Format f) {
            return run_solve_condition_a(sv_opts->sizes, sv_opts->kcols,
                                         sv_opts->symbolic, sv_opts->weights, f);
        };
    });

    // enumerate-deltas
    struct DeltaOpts {
        int n = 1;
        int kappa = 1;
        int max_boxes = 0;
    };
    auto dl_opts = std::make_shared<DeltaOpts>();
    auto* dl_cmd = app.add_subcommand(
        "enumerate-deltas", "Young-diagram pairs with weights and dimensions");
    dl_cmd->add_option("--n", dl_opts->n, "diagram length bound")->required();
    dl_cmd->add_option("--kappa", dl_opts->kappa, "total length bound")->required();
    dl_cmd->add_option("--max-boxes", dl_opts->max_boxes, "total box bound")
        ->required();
    dl_cmd->callback([&action, dl_opts] {
        action = [dl_opts](Format f) {
            return run_enumerate_deltas(dl_opts->n, dl_opts->kappa,
                                        dl_opts->max_boxes, f);
        };
    });

    // local-factor
    struct FactorOpts {
        std::string type;
        long q = 2;
        int n2 = 1;
        std::string chi = "1";
        std::string chi_p;
        std::string eigen;
        bool reduce = false;
    };
    auto lf_opts = std::make_shared<FactorOpts>();
    auto* lf_cmd =
        app.add_subcommand("local-factor", "Satake local factor in u = q^(-s)");
    lf_cmd->add_option("--type", lf_opts->type, "inert, ramified, or split")
        ->required();
    lf_cmd->add_option("--q", lf_opts->q, "residue norm")->required();
    lf_cmd->add_option("--n2", lf_opts->n2, "degree")->required();
    lf_cmd->add_option("--chi", lf_opts->chi,
                       "character value(s) at the prime(s) above p, e.g. 1,1");
    lf_cmd->add_option("--chi-p", lf_opts->chi_p,
                       "character value at the base prime; defaults to the "
                       "product over the primes above");
    lf_cmd->add_option("--eigen", lf_opts->eigen, "eigenvalue list")->required();
    lf_cmd->add_flag("--reduce", lf_opts->reduce,
                     "cancel common numerator/denominator factors");
    lf_cmd->callback([&action, lf_opts] {
        action = [lf_opts](Format f) {
            const LocalPlaceSpec place =
                build_place(lf_opts->type, lf_opts->q, lf_opts->n2, lf_opts->chi,
                            lf_opts->chi_p, lf_opts->eigen);
            return run_local_factor(place, lf_opts->reduce, f);
        };
    });

    // euler-product
    struct ProductOpts {
        std::string places;
        long s = 0;
        bool has_s = false;
    };
    auto ep_opts = std::make_shared<ProductOpts>();
    auto* ep_cmd = app.add_subcommand(
        "euler-product", "formal product of local factors from a place file");
    ep_cmd->add_option("--places", ep_opts->places, "JSON file with a place array")
        ->required();
    auto* s_opt = ep_cmd->add_option("--s", ep_opts->s,
                                     "also evaluate the product at this integer s");
    ep_cmd->callback([&action, ep_opts, s_opt] {
        ep_opts->has_s = s_opt->count() > 0;
        action = [ep_opts](Format f) {
            return run_euler_product(
                ep_opts->places,
                ep_opts->has_s ? std::optional<long>(ep_opts->s) : std::nullopt, f);
        };
    });

    // classify-place
    struct ClassifyOpts {
        long long disc = -4;
        long long p = 2;
    };
    auto cp_opts = std::make_shared<ClassifyOpts>();
    auto* cp_cmd = app.add_subcommand(
        "classify-place", "splitting type of a prime in an imaginary quadratic field");
    cp_cmd->add_option("--disc", cp_opts->disc, "fundamental discriminant")
        ->required();
    cp_cmd->add_option("--p", cp_opts->p, "rational prime")->required();
    cp_cmd->callback([&action, cp_opts] {
        action = [cp_opts](Format f) {
            return run_classify_place(cp_opts->disc, cp_opts->p, f);
        };
    });

    // verify-xi
    struct XiOpts {
        int n1 = 1;
        int n2 = 1;
        int r = 0;
        bool has_r = false;
    };
    auto xi_opts = std::make_shared<XiOpts>();
    auto* xi_cmd = app.add_subcommand(
        "verify-xi", "unitarity of the block coset representatives");
    xi_cmd->add_option("--n1", xi_opts->n1, "first block size")->required();
    xi_cmd->add_option("--n2", xi_opts->n2, "second block size")->required();
    auto* r_opt =
        xi_cmd->add_option("--r", xi_opts->r, "corner rank; omit to sweep 0..n2");
    xi_cmd->callback([&action, xi_opts, r_opt] {
        xi_opts->has_r = r_opt->count() > 0;
        action = [xi_opts](Format f) {
            return run_verify_xi(
                xi_opts->n1, xi_opts->n2,
                xi_opts->has_r ? std::optional<int>(xi_opts->r) : std::nullopt, f);
        };
    });

    // gaussian-check
    struct GaussOpts {
        int n = 1;
        int d = 1;
        std::string y;
        QuadratureConfig cfg;
    };
    auto gc_opts = std::make_shared<GaussOpts>();
    auto* gc_cmd = app.add_subcommand(
        "gaussian-check", "matrix Gaussian integral against det(Y)^(-d)");
    gc_cmd->add_option("--n", gc_opts->n, "matrix size (1 or 2)")->required();
    gc_cmd->add_option("--d", gc_opts->d, "exponent, at least n")->required();
    gc_cmd->add_option("--y", gc_opts->y,
                       "positive definite matrix, rows ';'-separated "
                       "(default: identity)");
    gc_cmd->add_option("--samples", gc_opts->cfg.mc_samples,
                       "Monte Carlo sample count");
    gc_cmd->add_option("--seed", gc_opts->cfg.seed, "Monte Carlo seed");
    gc_cmd->callback([&action, gc_opts] {
        action = [gc_opts](Format f) {
            return run_gaussian_check(gc_opts->n, gc_opts->d, gc_opts->y,
                                      gc_opts->cfg, f);
        };
    });

    // arch-constant
    struct ArchOpts {
        int k = 8;
        double s = 0;
        QuadratureConfig cfg;
    };
    auto ar_opts = std::make_shared<ArchOpts>();
    auto* ar_cmd = app.add_subcommand(
        "arch-constant", "archimedean constant for degree one, scalar weight");
    ar_cmd->add_option("--k", ar_opts->k, "scalar weight")->required();
    ar_cmd->add_option("--s", ar_opts->s, "spectral parameter")->required();
    ar_cmd->add_option("--tol", ar_opts->cfg.rel_tol, "quadrature tolerance");
    ar_cmd->callback([&action, ar_opts] {
        action = [ar_opts](Format f) {
            return run_arch_constant(ar_opts->k, ar_opts->s, ar_opts->cfg, f);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        const std::string doc = action(format_from_name(format_name));
        write_document(doc, output_path);
        return 0;
    } catch (const domain_error& e) {
        const Json record{{"error", Json{{"type", "domain"}, {"message", e.what()}}}};
        std::cout << record.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
