#include "doctest.h"

#include <random>
#include <vector>

#include "hermop/errors.hpp"
#include "hermop/poly_text.hpp"
#include "hermop/weil.hpp"

using namespace hermop;

namespace {

WeilPoly wp(int n, int kcols, const std::string& text) {
    return make_weil_poly({n, kcols}, parse_polynomial(text));
}

} // namespace

TEST_CASE("pi_minus contracts one X column against one Y column") {
    CHECK(apply_pi_minus(wp(1, 1, "X11*Y11"), 1, 1).body == parse_polynomial("1"));
    CHECK(apply_pi_minus(wp(1, 1, "X11"), 1, 1).body.is_zero());
    CHECK(apply_pi_minus(wp(1, 2, "X11*Y12 - X12*Y11"), 1, 1).body.is_zero());
    CHECK(apply_pi_minus(wp(2, 1, "X11*Y21"), 1, 2).body == parse_polynomial("1"));
    CHECK_THROWS_AS(apply_pi_minus(wp(1, 1, "X11"), 1, 2), domain_error);
}

TEST_CASE("is_pluriharmonic examples") {
    CHECK(is_pluriharmonic(wp(1, 1, "X11")));
    CHECK_FALSE(is_pluriharmonic(wp(1, 1, "X11*Y11")));
    CHECK(is_pluriharmonic(wp(1, 2, "X11*Y12 - X12*Y11")));
    CHECK(is_pluriharmonic(wp(2, 2, "X11*Y22 - X12*Y21")));
    CHECK_FALSE(is_pluriharmonic(wp(2, 2, "X11*Y21")));
    CHECK(is_pluriharmonic(wp(2, 2, "1")));
}

TEST_CASE("block-restricted pluriharmonicity ignores cross-block pairs") {
    // z11*z22 - 2*z12*z21 in the pairing entries with kcols = 2: each factor
    // of the block product is constant in its own block, but the cross-block
    // Laplacians do not vanish.
    MultiPoly p;
    p += pairing_entry(1, 1, 2) * pairing_entry(2, 2, 2);
    p -= pairing_entry(1, 2, 2).scaled(ParamField(Rat(2))) * pairing_entry(2, 1, 2);
    const WeilPoly f = make_weil_poly({2, 2}, p);
    CHECK(is_pluriharmonic_within_blocks(f, {1, 1}));
    CHECK_FALSE(is_pluriharmonic(f));
    CHECK_FALSE(is_pluriharmonic_within_blocks(f, {2}));
    CHECK_THROWS_AS(is_pluriharmonic_within_blocks(f, {1, 2}), domain_error);
}

TEST_CASE("column derivations annihilate pairing invariants") {
    const WeilPoly inv = make_weil_poly({1, 2}, pairing_entry(1, 1, 2));
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            CHECK(apply_glk_invariance_operator(inv, a, b).body.is_zero());
    CHECK(apply_glk_invariance_operator(wp(1, 1, "X11"), 1, 1).body ==
          parse_polynomial("X11"));
    CHECK(apply_glk_invariance_operator(wp(1, 1, "5"), 1, 1).body.is_zero());
    CHECK_THROWS_AS(apply_glk_invariance_operator(wp(1, 1, "X11"), 1, 2),
                    domain_error);
}

TEST_CASE("random polynomials in the pairing entries are invariant") {
    std::mt19937_64 rng(20240820);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int n = 1; n <= 2; ++n)
        for (int kcols = 1; kcols <= 3; ++kcols) {
            std::vector<MultiPoly> zs;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) zs.push_back(pairing_entry(i, j, kcols));
            MultiPoly p = MultiPoly::constant(ParamField(Rat(coeff(rng))));
            for (const MultiPoly& z : zs) p += z.scaled(ParamField(Rat(coeff(rng))));
            for (std::size_t u = 0; u < zs.size(); ++u)
                for (std::size_t v = u; v < zs.size(); ++v)
                    p += (zs[u] * zs[v]).scaled(ParamField(Rat(coeff(rng))));
            const WeilPoly f = make_weil_poly({n, kcols}, p);
            for (int a = 1; a <= kcols; ++a)
                for (int b = 1; b <= kcols; ++b)
                    CHECK(apply_glk_invariance_operator(f, a, b).body.is_zero());
        }
}

TEST_CASE("block_embed shifts the second factor's rows") {
    CHECK(block_embed(wp(1, 1, "X11"), wp(1, 1, "X11")).body ==
          parse_polynomial("X11*X21"));
    CHECK(block_embed(wp(1, 1, "1"), wp(1, 1, "1")).body == parse_polynomial("1"));
    CHECK(block_embed(wp(1, 1, "X11*Y11"), wp(1, 1, "Y11")).body ==
          parse_polynomial("X11*Y11*Y21"));
    const WeilPoly e = block_embed(wp(2, 2, "X21*Y12"), wp(1, 2, "X12"));
    CHECK(e.spec.n == 3);
    CHECK(e.body == parse_polynomial("X21*Y12*X32"));
    CHECK_THROWS_AS(block_embed(wp(1, 1, "X11"), wp(1, 2, "X11")), domain_error);
}

TEST_CASE("pi_minus commutes with block_embed on block-diagonal pairs") {
    const WeilPoly f1 = wp(1, 2, "X11^2*Y11 + X12*Y12^2");
    const WeilPoly f2 = wp(1, 2, "X11*Y11*Y12");
    const WeilPoly joined = block_embed(f1, f2);
    CHECK(apply_pi_minus(joined, 1, 1).body ==
          block_embed(apply_pi_minus(f1, 1, 1), f2).body);
    CHECK(apply_pi_minus(joined, 2, 2).body ==
          block_embed(f1, apply_pi_minus(f2, 1, 1)).body);
}

TEST_CASE("pluriharmonicity survives left row substitution") {
    // X -> tg X for constant rational g, i.e. X_{i,a} -> sum_m g_{m,i} X_{m,a}.
    const std::vector<std::vector<std::vector<Rat>>> gs = {
        {{Rat(1), Rat(2)}, {Rat(0), Rat(1)}},
        {{Rat(2), Rat(1)}, {Rat(1), Rat(1)}},
        {{Rat(1, 2), Rat(0)}, {Rat(3), Rat(1)}},
    };
    const std::vector<WeilPoly> fs = {
        wp(2, 2, "X11*Y22 - X12*Y21"),
        wp(2, 2, "X11*X22 - X12*X21"),
        wp(2, 2, "X21^2*Y11 - 2*X21*X22*Y12 + 3*X11"),
    };
    for (const WeilPoly& f : fs) {
        REQUIRE(is_pluriharmonic(f));
        for (const auto& g : gs) {
            std::map<VarId, MultiPoly> images;
            for (int i = 1; i <= 2; ++i)
                for (int a = 1; a <= 2; ++a) {
                    MultiPoly image;
                    for (int m = 1; m <= 2; ++m)
                        image.add_term({{var_X(m, a), 1}}, ParamField(g[m - 1][i - 1]));
                    images.emplace(var_X(i, a), std::move(image));
                }
            for (int j = 1; j <= 2; ++j)
                for (int b = 1; b <= 2; ++b)
                    images.emplace(var_Y(j, b), MultiPoly::variable(var_Y(j, b)));
            const WeilPoly sub = make_weil_poly(f.spec, f.body.substitute(images));
            CHECK(is_pluriharmonic(sub));
        }
    }
}

TEST_CASE("weil polynomial validation") {
    CHECK_THROWS_AS(wp(1, 1, "X21"), domain_error);
    CHECK_THROWS_AS(wp(1, 1, "X12"), domain_error);
    CHECK_THROWS_AS(wp(1, 1, "T11"), domain_error);
    CHECK_THROWS_AS(make_weil_poly({0, 1}, MultiPoly::zero()), domain_error);
}
