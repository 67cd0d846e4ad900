// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion exercises a full route through the library at the
// stated sizes and tolerances; timed criteria also fail when over budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "hermop/condition_a.hpp"
#include "hermop/diff_ops.hpp"
#include "hermop/errors.hpp"
#include "hermop/howe.hpp"
#include "hermop/local_factors.hpp"
#include "hermop/numeric_arch.hpp"
#include "hermop/poly_text.hpp"
#include "hermop/weil.hpp"

using namespace hermop;

namespace {

int g_failures = 0;

void run_criterion(const std::string& name, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && budget_seconds > 0 && elapsed > budget_seconds) {
        ok = false;
        detail = "over time budget";
    }
    std::printf("%s  %-34s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                elapsed, detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++g_failures;
}

MultiPoly pp(const std::string& text) { return parse_polynomial(text); }

std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<VarId> vars;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) vars.push_back(var_T(i, j));
    std::vector<Monomial> out;
    Monomial current;
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
        if (left == 0) {
            out.push_back(normalize_monomial(current));
            return;
        }
        if (idx == vars.size()) return;
        for (int e = left; e >= 0; --e) {
            if (e > 0) current.emplace_back(vars[idx], e);
            rec(idx + 1, left - e);
            if (e > 0) current.pop_back();
        }
    };
    rec(0, d);
    return out;
}

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    return Rat(num(rng), den(rng));
}

Rat random_nonzero_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> sign(0, 1);
    Rat r(num(rng), den(rng));
    return sign(rng) ? r : -r;
}

ParamField rising(const ParamField& e, int j) {
    ParamField out{Rat(1)};
    for (int i = 0; i < j; ++i) out *= e + ParamField(Rat(i));
    return out;
}

UPoly up(const std::vector<std::string>& coeffs) {
    std::vector<GaussRat> c;
    c.reserve(coeffs.size());
    for (const std::string& s : coeffs) c.push_back(gauss_from_string(s));
    return UPoly(std::move(c));
}

bool criterion_rewrite_vs_jet(std::string& detail) {
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const Monomial& m : monomials_of_degree(n, d)) {
                const MultiPoly p = MultiPoly::term(m, ParamField(Rat(1)));
                const MultiPoly via_rewrite =
                    rewrite_Q(p, RewriteMode::plain_kappa)
                        .rename_tag(VarTag::D, VarTag::T);
                if (!(via_rewrite == phi_kappa(p, n))) {
                    detail = "mismatch at n=" + std::to_string(n);
                    return false;
                }
            }
    return true;
}

bool criterion_exponent_substitution(std::string& detail) {
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const Monomial& m : monomials_of_degree(n, d)) {
                const MultiPoly p = MultiPoly::term(m, ParamField(Rat(1)));
                const MultiPoly lhs = psi_kappa_s(p, n);
                const MultiPoly rhs = phi_kappa(p, n).map_coefficients(
                    [](const ParamField& c) {
                        return c.substitute_kappa_half_plus_s();
                    });
                if (!(lhs == rhs)) {
                    detail = "mismatch at n=" + std::to_string(n);
                    return false;
                }
            }
    return true;
}

bool criterion_equivariance(std::string& detail) {
    std::mt19937_64 rng(0x5eedc0de);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix a(2, std::vector<Rat>(2)), b(2, std::vector<Rat>(2));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                a[i][j] = random_rat(rng);
                b[i][j] = random_rat(rng);
            }
        MultiPoly p;
        for (int d = 1; d <= 2; ++d)
            for (const Monomial& m : monomials_of_degree(2, d))
                p.add_term(m, ParamField(random_rat(rng)));
        MultiPoly hom; // phi and psi need homogeneous input; keep degree 2
        for (const auto& [m, c] : p.terms()) {
            int deg = 0;
            for (const auto& [v, e] : m) deg += e;
            if (deg == 2) hom.add_term(m, c);
        }
        if (hom.is_zero()) continue;
        if (!(phi_kappa(transform_P(hom, a, b), 2) ==
              transform_P(phi_kappa(hom, 2), a, b)) ||
            !(psi_kappa_s(transform_P(hom, a, b), 2) ==
              transform_P(psi_kappa_s(hom, 2), a, b))) {
            detail = "mismatch at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

bool criterion_generating_function(std::string& detail) {
    const int trunc = 6;
    for (int n = 1; n <= 2; ++n) {
        const ECoefficientMap e = E_coefficients(n, trunc);
        MultiPoly lhs;
        for (const auto& [mon, c] : e) {
            bool diagonal = true;
            Rat fact(1);
            for (const auto& [v, a] : mon) {
                if (v.row != v.col) diagonal = false;
                fact *= Rat(factorial(static_cast<unsigned>(a)));
            }
            if (!diagonal) continue;
            lhs += MultiPoly::term(mon, c / ParamField(fact));
        }
        MultiPoly rhs;
        std::function<void(int, int, Monomial, ParamField)> build =
            [&](int row, int left, Monomial m, ParamField c) {
                if (row > n) {
                    rhs.add_term(normalize_monomial(m), c);
                    return;
                }
                for (int j = 0; j <= left; ++j) {
                    ParamField cc = c * rising(ParamField::kappa(), j);
                    cc *= ParamField(Rat(rat_pow(Rat(2), j)));
                    cc /= ParamField(Rat(factorial(j)));
                    Monomial mm = m;
                    if (j > 0) mm.emplace_back(var_Y(row, row), j);
                    build(row + 1, left - j, mm, cc);
                }
            };
        build(1, trunc, {}, ParamField(Rat(1)));
        if (!(lhs == rhs)) {
            detail = "diagonal series mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    const ECoefficientMap e1 = E_coefficients(1, 4);
    for (int nu = 0; nu <= 4; ++nu) {
        Monomial m;
        if (nu > 0) m.emplace_back(var_Y(1, 1), nu);
        ParamField expect = rising(ParamField::kappa(), nu);
        expect *= ParamField(Rat(rat_pow(Rat(2), nu)));
        const auto it = e1.find(normalize_monomial(m));
        if (it == e1.end() ||
            !(MultiPoly::constant(it->second) == MultiPoly::constant(expect))) {
            detail = "moment value mismatch at nu=" + std::to_string(nu);
            return false;
        }
    }
    return true;
}

bool criterion_dimension_table(std::string& detail) {
    for (int kcols : {2, 3, 4})
        for (int k1 = 0; k1 <= 4; ++k1)
            for (int l1 = 0; k1 + l1 <= 4; ++l1)
                for (int k2 = 0; k1 + l1 + k2 <= 4; ++k2)
                    for (int l2 = 0; k1 + l1 + k2 + l2 <= 4; ++l2) {
                        const BlockSpec spec{{1, 1}, kcols};
                        const std::vector<WeightPair> weights = {{{k1}, {l1}},
                                                                 {{k2}, {l2}}};
                        const std::size_t expect =
                            (k1 == l2 && l1 == k2) ? 1 : 0;
                        if (solve_condition_A(spec, weights).size() != expect) {
                            detail = "dimension mismatch at kcols=" +
                                     std::to_string(kcols) + " weights (" +
                                     std::to_string(k1) + ";" +
                                     std::to_string(l1) + "),(" +
                                     std::to_string(k2) + ";" +
                                     std::to_string(l2) + ")";
                            return false;
                        }
                    }
    return true;
}

bool criterion_solver_outputs(std::string& detail) {
    const std::vector<std::pair<BlockSpec, std::vector<WeightPair>>> cases = {
        {{{1, 1}, 2}, {{{1}, {1}}, {{1}, {1}}}},
        {{{1, 1}, 3}, {{{1}, {1}}, {{1}, {1}}}},
        {{{1, 1}, 4}, {{{1}, {1}}, {{1}, {1}}}},
        {{{1, 1}, 3}, {{{2}, {1}}, {{1}, {2}}}},
        {{{1, 1}, 3}, {{{2}, {2}}, {{2}, {2}}}},
        {{{2, 1}, 2}, {{{1}, {1}}, {{1}, {1}}}},
        {{{2, 1}, 3}, {{{1}, {1}}, {{1}, {1}}}},
    };
    for (const auto& [spec, weights] : cases) {
        const auto basis = solve_condition_A(spec, weights);
        if (basis.empty()) {
            detail = "unexpected empty basis";
            return false;
        }
        for (const VectorPoly& vp : basis) {
            if (!check_equivariance(vp, spec, weights)) {
                detail = "equivariance residual";
                return false;
            }
            const WeilPoly t = build_P_tilde(vp.hwv, spec);
            if (!is_pluriharmonic_within_blocks(t, spec.sizes)) {
                detail = "pluriharmonicity residual";
                return false;
            }
            for (int a = 1; a <= spec.kcols; ++a)
                for (int b = 1; b <= spec.kcols; ++b)
                    if (!apply_glk_invariance_operator(t, a, b).body.is_zero()) {
                        detail = "invariance operator residual";
                        return false;
                    }
        }
    }
    return true;
}

bool criterion_howe_pairing(std::string& detail) {
    for (int kappa : {2, 3, 4}) {
        const auto family = enumerate_delta(1, kappa, 4);
        for (const YoungPair& a : family)
            for (const YoungPair& b : family) {
                const bool paired =
                    is_contragredient_pair(lambda_map(a), lambda_map(b));
                const bool swapped = (a.d1 == b.d2 && a.d2 == b.d1);
                if (paired != swapped) {
                    detail = "criterion mismatch at kappa=" +
                             std::to_string(kappa);
                    return false;
                }
            }
    }
    return true;
}

bool criterion_local_factors(std::string& detail) {
    LocalPlaceSpec split_place;
    split_place.split_type = SplitType::split;
    split_place.q = 2;
    split_place.chi_P = {GaussRat{Rat(1)}, GaussRat{Rat(1)}};
    split_place.eigenvalues = {Rat(1), Rat(1)};
    split_place.n2 = 1;
    const EulerFactor split_f = satake_local_factor(split_place);
    if (!(split_f.numerator == up({"1", "0", "-3", "0", "2"})) ||
        !(split_f.denominator == up({"1", "-9", "97/4", "-18", "4"}))) {
        detail = "split hand value mismatch";
        return false;
    }

    LocalPlaceSpec inert_place;
    inert_place.split_type = SplitType::inert;
    inert_place.q = 2;
    inert_place.chi_P = {GaussRat{Rat(1)}};
    inert_place.eigenvalues = {Rat(1)};
    inert_place.n2 = 1;
    const EulerFactor inert_f = satake_local_factor(inert_place);
    if (!(inert_f.numerator == up({"1", "0", "1", "0", "-2"})) ||
        !(inert_f.denominator == up({"1", "0", "-5", "0", "4"}))) {
        detail = "inert hand value mismatch";
        return false;
    }

    std::mt19937_64 rng(0xfac70f);
    for (int n2 : {1, 2}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rat> eig;
            for (int i = 0; i < n2; ++i) eig.push_back(random_nonzero_rat(rng));
            for (SplitType t :
                 {SplitType::inert, SplitType::ramified, SplitType::split}) {
                LocalPlaceSpec place;
                place.split_type = t;
                place.q = 3;
                place.n2 = n2;
                place.eigenvalues = eig;
                place.chi_P.assign(t == SplitType::split ? 2 : 1,
                                   GaussRat{Rat(1)});
                if (t == SplitType::split)
                    for (int i = 0; i < n2; ++i)
                        place.eigenvalues.push_back(random_nonzero_rat(rng));
                const EulerFactor f = satake_local_factor(place);
                const int expect = (t == SplitType::ramified) ? 2 * n2 : 4 * n2;
                if (f.numerator.degree() != expect ||
                    f.denominator.degree() != expect) {
                    detail = "degree mismatch, " + split_type_name(t) +
                             " n2=" + std::to_string(n2);
                    return false;
                }
                const GaussRat one{Rat(1)};
                if (!(f.numerator.coeff(0) == one) ||
                    !(f.denominator.coeff(0) == one)) {
                    detail = "constant term not 1";
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_xi_unitarity(std::string& detail) {
    for (int n1 = 0; n1 <= 3; ++n1)
        for (int n2 = 0; n2 <= n1; ++n2)
            for (int r = 0; r <= n2; ++r)
                if (!verify_xi_unitary(n1, n2, r)) {
                    detail = "not unitary at (" + std::to_string(n1) + "," +
                             std::to_string(n2) + "," + std::to_string(r) + ")";
                    return false;
                }
    return true;
}

bool criterion_numeric(std::string& detail) {
    const QuadratureConfig cfg;
    const std::vector<std::pair<RatMatrix, int>> gauss_cases = {
        {{{Rat(2)}}, 1},
        {{{Rat(1)}}, 3},
        {{{Rat(5, 2)}}, 4},
    };
    for (const auto& [y, d] : gauss_cases) {
        const GaussianCheckResult r = gaussian_det_check(1, d, y, cfg);
        if (!(r.rel_error < 1e-6)) {
            detail = "gaussian rel error " + std::to_string(r.rel_error);
            return false;
        }
    }
    const int k = 8;
    for (double s : {0.0, 0.5, 1.0, 1.5, 2.0}) {
        const double value = arch_constant_scalar(k, s, cfg);
        const double reference = arch_constant_reference(k, s);
        const double rel = std::abs(value - reference) / std::abs(reference);
        if (!(rel < 1e-6)) {
            detail = "arch rel error " + std::to_string(rel) + " at s=" +
                     std::to_string(s);
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    run_criterion("rewrite-vs-jet-equivalence", 30.0, criterion_rewrite_vs_jet);
    run_criterion("exponent-substitution", 30.0, criterion_exponent_substitution);
    run_criterion("matrix-action-equivariance", 0.0, criterion_equivariance);
    run_criterion("generating-function", 0.0, criterion_generating_function);
    run_criterion("solver-dimension-table", 60.0, criterion_dimension_table);
    run_criterion("solver-output-invariants", 0.0, criterion_solver_outputs);
    run_criterion("howe-pairing-criterion", 0.0, criterion_howe_pairing);
    run_criterion("local-factor-values", 0.0, criterion_local_factors);
    run_criterion("xi-unitarity", 0.0, criterion_xi_unitarity);
    run_criterion("numeric-checks", 60.0, criterion_numeric);
    if (g_failures != 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
