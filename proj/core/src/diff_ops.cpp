#include "hermop/diff_ops.hpp"

#include <memory>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "hermop/errors.hpp"
#include "hermop/poly_matrix.hpp"

namespace hermop {

namespace {

// Checks that p is written in a single derivative-symbol tag (T or Z) and
// returns the flattened list of (row, col) derivative indices per term.
VarTag derivative_tag_of(const MultiPoly& p) {
    VarTag tag = VarTag::T;
    bool seen = false;
    for (const VarId& v : p.variables()) {
        HERMOP_DOMAIN_CHECK(v.tag == VarTag::T || v.tag == VarTag::Z,
                            "derivative polynomial must use T or Z variables");
        if (!seen) {
            tag = v.tag;
            seen = true;
        } else {
            HERMOP_DOMAIN_CHECK(v.tag == tag,
                                "derivative polynomial mixes T and Z variables");
        }
    }
    return tag;
}

// One application of d/dZ_{ij} to delta^{-e} * E(D), returning the new E.
// Product rule:
//   d/dZ_{ij} [delta^{-e} E] = delta^{-e} [ -e * D_{i,j} * E + dE ]
// where dE differentiates each D factor by d/dZ_{ij} D_{s,t} = -D_{s,j} D_{i,t}.
MultiPoly apply_derivative(const MultiPoly& e_poly, int i, int j,
                           const ParamField& exponent) {
    MultiPoly out =
        e_poly * MultiPoly::term({{var_D(i, j), 1}}, -exponent);
    for (const auto& [mon, coeff] : e_poly.terms()) {
        for (std::size_t f = 0; f < mon.size(); ++f) {
            const auto& [v, a] = mon[f];
            Monomial reduced;
            reduced.reserve(mon.size() + 2);
            for (std::size_t g = 0; g < mon.size(); ++g) {
                if (g == f) {
                    if (a > 1) reduced.emplace_back(v, a - 1);
                } else {
                    reduced.push_back(mon[g]);
                }
            }
            reduced.emplace_back(var_D(v.row, j), 1);
            reduced.emplace_back(var_D(i, v.col), 1);
            out.add_term(normalize_monomial(std::move(reduced)),
                         coeff * ParamField(Rat(-a)));
        }
    }
    return out;
}

// Jet of det(I_n - W tT)^{-e} truncated at W-degree `degree`, cached because
// callers evaluate many monomials against the same jet.
std::shared_ptr<const MultiPoly> operator_jet(int n, int degree, RewriteMode mode) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>,
                    std::shared_ptr<const MultiPoly>>
        cache;
    const auto key = std::make_tuple(n, degree, static_cast<int>(mode));
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    PolyMatrix m = PolyMatrix::identity(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                m.at(i, j) -= MultiPoly::term(
                    {{var_W(i, k), 1}, {var_T(j, k), 1}}, ParamField(Rat(1)));
    auto jet = std::make_shared<const MultiPoly>(
        det_power_series(m, rewrite_exponent(mode), degree, {VarTag::W}));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(jet)).first->second;
}

MultiPoly operator_image(const MultiPoly& p, int n, RewriteMode mode) {
    HERMOP_DOMAIN_CHECK(n >= 1 && n <= 9, "matrix size must lie in 1..9");
    HERMOP_DOMAIN_CHECK(p.is_homogeneous(),
                        "operator image requires a homogeneous polynomial");
    if (p.is_zero()) return MultiPoly::zero();
    for (const VarId& v : p.variables())
        HERMOP_DOMAIN_CHECK(v.tag == VarTag::T && v.row <= n && v.col <= n,
                            "polynomial must use T variables of the given size");
    const int d = p.total_degree();
    const auto jet = operator_jet(n, d, mode);
    MultiPoly out;
    for (const auto& [mon, coeff] : p.terms()) {
        Monomial wanted;
        Rat fact(1);
        for (const auto& [v, a] : mon) {
            wanted.emplace_back(var_W(v.row, v.col), a);
            fact *= Rat(factorial(static_cast<unsigned>(a)));
        }
        wanted = normalize_monomial(std::move(wanted));
        const ParamField scale = coeff * ParamField(fact);
        for (const auto& [jm, jc] : jet->terms()) {
            Monomial wpart, tpart;
            for (const auto& fac : jm)
                (fac.first.tag == VarTag::W ? wpart : tpart).push_back(fac);
            if (wpart == wanted) out.add_term(tpart, jc * scale);
        }
    }
    if (d % 2 != 0) out = -out;
    return out;
}

} // namespace

ParamField rewrite_exponent(RewriteMode mode) {
    return mode == RewriteMode::plain_kappa ? ParamField::kappa()
                                            : kappa_half_plus_s();
}

DeltaWord rewrite_word(const MultiPoly& p, RewriteMode mode) {
    derivative_tag_of(p);
    const ParamField e = rewrite_exponent(mode);
    DeltaWord word;
    word.mode = mode;
    for (const auto& [mon, coeff] : p.terms()) {
        MultiPoly image = MultiPoly::constant(ParamField(Rat(1)));
        for (const auto& [v, a] : mon)
            for (int rep = 0; rep < a; ++rep)
                image = apply_derivative(image, v.row, v.col, e);
        word.q += image.scaled(coeff);
    }
    return word;
}

MultiPoly rewrite_Q(const MultiPoly& p, RewriteMode mode) {
    return rewrite_word(p, mode).q;
}

MultiPoly phi_kappa(const MultiPoly& p, int n) {
    return operator_image(p, n, RewriteMode::plain_kappa);
}

MultiPoly psi_kappa_s(const MultiPoly& p, int n) {
    return operator_image(p, n, RewriteMode::kappa_half_plus_s);
}

MultiPoly transform_P(const MultiPoly& p, const RatMatrix& a, const RatMatrix& b) {
    const int n = static_cast<int>(a.size());
    HERMOP_DOMAIN_CHECK(n >= 1 && n <= 9, "matrix size must lie in 1..9");
    HERMOP_DOMAIN_CHECK(rat_is_square(a, n) && rat_is_square(b, n),
                        "transform matrices must be square of equal size");
    for (const VarId& v : p.variables())
        HERMOP_DOMAIN_CHECK(v.tag == VarTag::T && v.row <= n && v.col <= n,
                            "polynomial must use T variables of the given size");
    // Entry (i,j) of tA T B is sum_{p,q} A_{p,i} T_{p,q} B_{q,j}.
    std::map<VarId, MultiPoly> images;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            MultiPoly image;
            for (int pr = 1; pr <= n; ++pr)
                for (int qc = 1; qc <= n; ++qc) {
                    const Rat c = a[pr - 1][i - 1] * b[qc - 1][j - 1];
                    if (c == 0) continue;
                    image.add_term({{var_T(pr, qc), 1}}, ParamField(c));
                }
            images.emplace(var_T(i, j), std::move(image));
        }
    return p.substitute(images);
}

ECoefficientMap E_coefficients(int n, int max_degree) {
    HERMOP_DOMAIN_CHECK(n >= 1 && n <= 9, "matrix size must lie in 1..9");
    HERMOP_DOMAIN_CHECK(max_degree >= 0, "max_degree must be nonnegative");
    PolyMatrix m = PolyMatrix::identity(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.at(i, j) -= MultiPoly::term({{var_Y(i, j), 1}}, ParamField(Rat(2)));
    const MultiPoly jet =
        det_power_series(m, ParamField::kappa(), max_degree, {VarTag::Y});
    ECoefficientMap out;
    for (const auto& [mon, coeff] : jet.terms()) {
        Rat fact(1);
        for (const auto& [v, a] : mon)
            fact *= Rat(factorial(static_cast<unsigned>(a)));
        out.emplace(mon, coeff * ParamField(fact));
    }
    return out;
}

} // namespace hermop
