#include "doctest.h"

#include <functional>
#include <string>

#include "hermop/diff_ops.hpp"
#include "hermop/errors.hpp"
#include "hermop/json_io.hpp"
#include "hermop/poly_text.hpp"

using namespace hermop;

namespace {

MultiPoly pp(const std::string& text) { return parse_polynomial(text); }

std::string thrown_message(const std::function<void()>& f) {
    try {
        f();
    } catch (const domain_error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("polynomial json round trip") {
    for (const std::string& text :
         {"T11^3 - 2/3*T12*T21", "0", "5", "-k*T11",
          "T11*T33 - kcols*T13*T31"}) {
        MultiPoly p = text == "T11*T33 - kcols*T13*T31"
                          ? pp("T11*T33") - pp("T13*T31").scaled(ParamField::kappa())
                          : pp(text);
        CHECK(multipoly_from_json(multipoly_to_json(p)) == p);
    }
    const MultiPoly phi = phi_kappa(pp("T12*T21"), 2);
    CHECK(multipoly_from_json(multipoly_to_json(phi)) == phi);
    const MultiPoly with_dinv =
        MultiPoly::term({{var_dinv(), 2}, {var_D(1, 2), 1}}, ParamField::kappa());
    CHECK(multipoly_from_json(multipoly_to_json(with_dinv)) == with_dinv);
}

TEST_CASE("polynomial json carries the canonical text") {
    const std::string doc = multipoly_to_json(phi_kappa(pp("T11"), 1));
    CHECK(doc.find("\"text\": \"-k*T11\"") != std::string::npos);
    CHECK(doc.find("\"monomial\"") != std::string::npos);
}

TEST_CASE("polynomial json errors carry paths") {
    CHECK_THROWS_AS(multipoly_from_json("not json"), domain_error);
    CHECK_THROWS_AS(multipoly_from_json("{}"), domain_error);
    const std::string bad_var = R"({"terms": [{"monomial": [["Q11", 1]],
        "coefficient": {"num": [[0,0,"1"]], "den": [[0,0,"1"]]}}]})";
    CHECK(thrown_message([&] { multipoly_from_json(bad_var); }).find("Q11") !=
          std::string::npos);
    const std::string bad_exp = R"({"terms": [{"monomial": [["T11", 0]],
        "coefficient": {"num": [[0,0,"1"]], "den": [[0,0,"1"]]}}]})";
    CHECK(thrown_message([&] { multipoly_from_json(bad_exp); })
              .find("exponent") != std::string::npos);
    const std::string dup = R"({"terms": [{"monomial": [["T11", 1]],
        "coefficient": {"num": [[0,0,"1"],[0,0,"2"]], "den": [[0,0,"1"]]}}]})";
    CHECK(thrown_message([&] { multipoly_from_json(dup); })
              .find("duplicate") != std::string::npos);
}

TEST_CASE("euler factor json round trip") {
    LocalPlaceSpec p;
    p.split_type = SplitType::split;
    p.q = 2;
    p.n2 = 1;
    p.chi_p = gauss_from_string("i");
    p.chi_P = {gauss_from_string("1"), gauss_from_string("-i")};
    p.eigenvalues = {Rat(3), Rat(1, 2)};
    const EulerFactor f = satake_local_factor(p);
    const EulerFactor g = euler_factor_from_json(euler_factor_to_json(f));
    CHECK(g.numerator == f.numerator);
    CHECK(g.denominator == f.denominator);
    CHECK_THROWS_AS(
        euler_factor_from_json(R"({"numerator": ["2"], "denominator": ["1"]})"),
        domain_error);
    CHECK_THROWS_AS(euler_factor_from_json(R"({"numerator": ["1"]})"),
                    domain_error);
}

TEST_CASE("place json round trip and diagnostics") {
    LocalPlaceSpec p;
    p.split_type = SplitType::inert;
    p.q = 3;
    p.n2 = 2;
    p.chi_p = gauss_from_string("-1");
    p.chi_P = {gauss_from_string("i")};
    p.eigenvalues = {Rat(2), Rat(5, 3)};
    const LocalPlaceSpec q = local_place_from_json(local_place_to_json(p));
    CHECK(q.split_type == p.split_type);
    CHECK(q.q == p.q);
    CHECK(q.chi_P == p.chi_P);
    CHECK(q.eigenvalues == p.eigenvalues);

    CHECK(places_from_json("[]").empty());
    const std::string one = "[" + local_place_to_json(p) + "]";
    CHECK(places_from_json(one).size() == 1);

    const std::string short_eig = R"([{"type": "split", "q": 2, "n2": 1,
        "chi_p": "1", "chi_P": ["1", "1"], "eigenvalues": ["1"]}])";
    const std::string msg = thrown_message([&] { places_from_json(short_eig); });
    CHECK(msg.find("places[0]") != std::string::npos);
    CHECK(msg.find("eigenvalue") != std::string::npos);

    const std::string missing_q = R"([{"type": "inert", "n2": 1,
        "chi_p": "1", "chi_P": ["1"], "eigenvalues": ["1"]}])";
    CHECK(thrown_message([&] { places_from_json(missing_q); }).find("'q'") !=
          std::string::npos);
}

TEST_CASE("json emission is deterministic") {
    const MultiPoly p = phi_kappa(pp("T11*T22"), 2);
    CHECK(multipoly_to_json(p) == multipoly_to_json(p));
}
