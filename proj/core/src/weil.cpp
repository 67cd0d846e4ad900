#include "hermop/weil.hpp"

#include <map>
#include <numeric>

#include "hermop/errors.hpp"

namespace hermop {

namespace {

void check_spec(const WeilSpaceSpec& spec) {
    HERMOP_DOMAIN_CHECK(spec.n >= 1 && spec.n <= 9, "row count must lie in 1..9");
    HERMOP_DOMAIN_CHECK(spec.kcols >= 1 && spec.kcols <= 9,
                        "column count must lie in 1..9");
}

void check_body(const WeilSpaceSpec& spec, const MultiPoly& body) {
    for (const VarId& v : body.variables()) {
        HERMOP_DOMAIN_CHECK(v.tag == VarTag::X || v.tag == VarTag::Y,
                            "polynomial must use X and Y variables only");
        HERMOP_DOMAIN_CHECK(v.row <= spec.n && v.col <= spec.kcols,
                            "variable index outside the declared matrix shape");
    }
}

} // namespace

WeilPoly make_weil_poly(const WeilSpaceSpec& spec, MultiPoly body) {
    check_spec(spec);
    check_body(spec, body);
    return WeilPoly{spec, std::move(body)};
}

MultiPoly pairing_entry(int i, int j, int kcols) {
    HERMOP_DOMAIN_CHECK(i >= 1 && i <= 9 && j >= 1 && j <= 9,
                        "row index out of range");
    HERMOP_DOMAIN_CHECK(kcols >= 1 && kcols <= 9, "column count must lie in 1..9");
    MultiPoly z;
    for (int a = 1; a <= kcols; ++a)
        z.add_term(normalize_monomial({{var_X(i, a), 1}, {var_Y(j, a), 1}}),
                   ParamField(Rat(1)));
    return z;
}

WeilPoly apply_pi_minus(const WeilPoly& f, int i, int j) {
    check_spec(f.spec);
    HERMOP_DOMAIN_CHECK(i >= 1 && i <= f.spec.n && j >= 1 && j <= f.spec.n,
                        "Laplacian index out of range");
    MultiPoly out;
    for (int a = 1; a <= f.spec.kcols; ++a)
        out += f.body.partial_derivative(var_X(i, a))
                   .partial_derivative(var_Y(j, a));
    return WeilPoly{f.spec, std::move(out)};
}

bool is_pluriharmonic(const WeilPoly& f) {
    for (int i = 1; i <= f.spec.n; ++i)
        for (int j = 1; j <= f.spec.n; ++j)
            if (!apply_pi_minus(f, i, j).body.is_zero()) return false;
    return true;
}

bool is_pluriharmonic_within_blocks(const WeilPoly& f,
                                    const std::vector<int>& block_sizes) {
    for (int b : block_sizes)
        HERMOP_DOMAIN_CHECK(b >= 1, "block sizes must be positive");
    HERMOP_DOMAIN_CHECK(
        std::accumulate(block_sizes.begin(), block_sizes.end(), 0) == f.spec.n,
        "block sizes must sum to the row count");
    int start = 1;
    for (int b : block_sizes) {
        for (int i = start; i < start + b; ++i)
            for (int j = start; j < start + b; ++j)
                if (!apply_pi_minus(f, i, j).body.is_zero()) return false;
        start += b;
    }
    return true;
}

WeilPoly apply_glk_invariance_operator(const WeilPoly& f, int a, int b) {
    check_spec(f.spec);
    HERMOP_DOMAIN_CHECK(a >= 1 && a <= f.spec.kcols && b >= 1 && b <= f.spec.kcols,
                        "column-operator index out of range");
    MultiPoly out;
    for (int i = 1; i <= f.spec.n; ++i)
        out += MultiPoly::variable(var_X(i, a)) *
               f.body.partial_derivative(var_X(i, b));
    for (int j = 1; j <= f.spec.n; ++j)
        out -= MultiPoly::variable(var_Y(j, b)) *
               f.body.partial_derivative(var_Y(j, a));
    return WeilPoly{f.spec, std::move(out)};
}

WeilPoly block_embed(const WeilPoly& f1, const WeilPoly& f2) {
    check_spec(f1.spec);
    check_spec(f2.spec);
    HERMOP_DOMAIN_CHECK(f1.spec.kcols == f2.spec.kcols,
                        "block factors must share the column count");
    const int n1 = f1.spec.n;
    const WeilSpaceSpec joined{n1 + f2.spec.n, f1.spec.kcols};
    check_spec(joined);
    std::map<VarId, MultiPoly> shift;
    for (const VarId& v : f2.body.variables())
        shift.emplace(v, MultiPoly::variable(make_var(v.tag, v.row + n1, v.col)));
    return WeilPoly{joined, f1.body * f2.body.substitute(shift)};
}

} // namespace hermop
