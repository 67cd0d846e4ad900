#include "hermop/local_factors.hpp"

#include <algorithm>

#include "hermop/errors.hpp"

namespace hermop {

UPoly::UPoly(std::vector<GaussRat> c) : coeffs(std::move(c)) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

GaussRat UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs.size())) return GaussRat{0};
    return coeffs[k];
}

GaussRat UPoly::eval(const GaussRat& u) const {
    GaussRat acc{0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * u + *it;
    return acc;
}

bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs == b.coeffs; }
bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<GaussRat> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<GaussRat> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<GaussRat> c(a.coeffs.size() + b.coeffs.size() - 1, GaussRat{0});
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] = c[i + j] + a.coeffs[i] * b.coeffs[j];
    return UPoly(std::move(c));
}

UPoly upoly_one() { return UPoly({GaussRat{1}}); }

UPoly upoly_term(const GaussRat& c, int e) {
    HERMOP_DOMAIN_CHECK(e >= 0, "upoly_term: negative exponent");
    std::vector<GaussRat> v(e + 1, GaussRat{0});
    v[e] = c;
    return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
    HERMOP_DOMAIN_CHECK(!b.is_zero(), "upoly_divmod: division by zero polynomial");
    UPoly r = a;
    const int db = b.degree();
    const GaussRat lead_inv = gauss_inverse(b.coeffs.back());
    std::vector<GaussRat> q(std::max(a.degree() - db + 1, 0), GaussRat{0});
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        const GaussRat f = r.coeffs.back() * lead_inv;
        q[shift] = q[shift] + f;
        r = r - upoly_term(f, shift) * b;
    }
    return {UPoly(std::move(q)), r};
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a;
    UPoly y = b;
    while (!y.is_zero()) {
        UPoly r = upoly_divmod(x, y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    GaussRat low{0};
    for (const GaussRat& c : x.coeffs)
        if (!c.is_zero()) {
            low = c;
            break;
        }
    const GaussRat inv = gauss_inverse(low);
    std::vector<GaussRat> scaled;
    scaled.reserve(x.coeffs.size());
    for (const GaussRat& c : x.coeffs) scaled.push_back(c * inv);
    return UPoly(std::move(scaled));
}

std::string upoly_to_string(const UPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        const GaussRat c = p.coeff(k);
        if (c.is_zero()) continue;
        std::string body;
        bool neg = false;
        if (c.is_real()) {
            neg = c.re < 0;
            const Rat mag = neg ? -c.re : c.re;
            if (mag != 1 || k == 0) body = rat_to_string(mag);
        } else {
            body = "(" + gauss_to_string(c) + ")";
        }
        if (k > 0) {
            if (!body.empty()) body += "*";
            body += "u";
            if (k > 1) body += "^" + std::to_string(k);
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

EulerFactor make_euler_factor(UPoly numerator, UPoly denominator) {
    HERMOP_DOMAIN_CHECK(numerator.coeff(0) == GaussRat{1},
                        "euler factor: numerator constant term must be 1");
    HERMOP_DOMAIN_CHECK(denominator.coeff(0) == GaussRat{1},
                        "euler factor: denominator constant term must be 1");
    return {std::move(numerator), std::move(denominator)};
}

EulerFactor reduce(const EulerFactor& f) {
    const UPoly g = upoly_gcd(f.numerator, f.denominator);
    if (g.degree() < 1) return f;
    auto [qn, rn] = upoly_divmod(f.numerator, g);
    auto [qd, rd] = upoly_divmod(f.denominator, g);
    HERMOP_LOGIC_CHECK(rn.is_zero() && rd.is_zero(),
                       "euler factor reduce: gcd does not divide");
    return make_euler_factor(std::move(qn), std::move(qd));
}

GaussRat evaluate(const EulerFactor& f, const GaussRat& u) {
    const GaussRat d = f.denominator.eval(u);
    HERMOP_DOMAIN_CHECK(!d.is_zero(), "euler factor: pole at evaluation point");
    return f.numerator.eval(u) / d;
}

std::string split_type_name(SplitType t) {
    switch (t) {
    case SplitType::inert: return "inert";
    case SplitType::ramified: return "ramified";
    case SplitType::split: return "split";
    }
    throw logic_error("split_type_name: invalid enum value");
}

SplitType split_type_from_name(const std::string& name) {
    if (name == "inert") return SplitType::inert;
    if (name == "ramified") return SplitType::ramified;
    if (name == "split") return SplitType::split;
    throw domain_error("unknown place type '" + name +
                       "' (expected inert, ramified, or split)");
}

int expected_eigenvalue_count(SplitType t, int n2) {
    return t == SplitType::split ? 2 * n2 : n2;
}

void validate_local_place(const LocalPlaceSpec& place) {
    HERMOP_DOMAIN_CHECK(place.q >= 2, "local place: residue norm must be >= 2");
    HERMOP_DOMAIN_CHECK(place.n2 >= 1, "local place: degree must be >= 1");
    HERMOP_DOMAIN_CHECK(!place.chi_p.is_zero(),
                        "local place: character value at the base prime is zero");
    const std::size_t want_chi = place.split_type == SplitType::split ? 2 : 1;
    HERMOP_DOMAIN_CHECK(place.chi_P.size() == want_chi,
                        "local place: expected " + std::to_string(want_chi) +
                            " character value(s) above the prime, got " +
                            std::to_string(place.chi_P.size()));
    for (const GaussRat& c : place.chi_P)
        HERMOP_DOMAIN_CHECK(!c.is_zero(),
                            "local place: character value above the prime is zero");
    const std::size_t want_eig = static_cast<std::size_t>(
        expected_eigenvalue_count(place.split_type, place.n2));
    HERMOP_DOMAIN_CHECK(place.eigenvalues.size() == want_eig,
                        "local place: expected " + std::to_string(want_eig) +
                            " eigenvalue(s), got " +
                            std::to_string(place.eigenvalues.size()));
    for (const Rat& l : place.eigenvalues)
        HERMOP_DOMAIN_CHECK(!l.is_zero(), "local place: eigenvalue is zero");
}

namespace {

// 1 - c * u^e.
UPoly one_minus(const GaussRat& c, int e) {
    return upoly_one() - upoly_term(c, e);
}

} // namespace

EulerFactor satake_local_factor(const LocalPlaceSpec& place) {
    validate_local_place(place);
    const Rat q{place.q};
    const int n2 = place.n2;
    UPoly num = upoly_one();
    UPoly den = upoly_one();
    switch (place.split_type) {
    case SplitType::inert: {
        const GaussRat chiP = place.chi_P[0];
        for (int i = 1; i <= 2 * n2; ++i) {
            const Rat sign = (i % 2 == 1) ? Rat(1) : Rat(-1);
            num = num * one_minus(GaussRat{sign * rat_pow(q, i - 1)} * place.chi_p, 2);
        }
        for (int i = 1; i <= n2; ++i) {
            const Rat& l = place.eigenvalues[i - 1];
            den = den * one_minus(GaussRat{rat_pow(q, 2 * n2 - 2) * l} * chiP, 2);
            den = den * one_minus(GaussRat{rat_pow(q, 2 * n2) / l} * chiP, 2);
        }
        break;
    }
    case SplitType::ramified: {
        const GaussRat chiP = place.chi_P[0];
        for (int i = 0; i <= n2 - 1; ++i)
            num = num * one_minus(GaussRat{rat_pow(q, 2 * i)} * place.chi_p, 2);
        for (int i = 1; i <= n2; ++i) {
            const Rat& l = place.eigenvalues[i - 1];
            den = den * one_minus(GaussRat{rat_pow(q, n2 - 1) * l} * chiP, 1);
            den = den * one_minus(GaussRat{rat_pow(q, n2) / l} * chiP, 1);
        }
        break;
    }
    case SplitType::split: {
        const GaussRat chiP1 = place.chi_P[0];
        const GaussRat chiP2 = place.chi_P[1];
        for (int i = 1; i <= 2 * n2; ++i)
            num = num * one_minus(GaussRat{rat_pow(q, i - 1)} * place.chi_p, 2);
        for (int i = 1; i <= 2 * n2; ++i) {
            const Rat& l = place.eigenvalues[i - 1];
            den = den * one_minus(GaussRat{rat_pow(q, 2 * n2) / l} * chiP1, 1);
            den = den * one_minus(GaussRat{rat_pow(q, -1) * l} * chiP2, 1);
        }
        break;
    }
    }
    return make_euler_factor(std::move(num), std::move(den));
}

PartialEulerProduct partial_euler_product(const std::vector<LocalPlaceSpec>& places) {
    HERMOP_DOMAIN_CHECK(!places.empty(), "euler product: empty place list");
    PartialEulerProduct out;
    out.factors.reserve(places.size());
    for (const LocalPlaceSpec& p : places)
        out.factors.emplace_back(p, satake_local_factor(p));
    return out;
}

GaussRat evaluate_at_integer_s(const PartialEulerProduct& product, long s) {
    GaussRat acc{1};
    for (const auto& [place, factor] : product.factors) {
        const GaussRat u{rat_pow(Rat(place.q), -s)};
        acc = acc * evaluate(factor, u);
    }
    return acc;
}

namespace {

bool is_squarefree(Int n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (Int f = 2; f * f <= n; ++f) {
        int mult = 0;
        while (n % f == 0) {
            n /= f;
            ++mult;
        }
        if (mult >= 2) return false;
    }
    return true;
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

Int mod_nonneg(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

} // namespace

bool is_fundamental_discriminant(const Int& disc) {
    if (disc >= 0) return false;
    const Int m4 = mod_nonneg(disc, 4);
    if (m4 == 1) return is_squarefree(disc);
    if (m4 != 0) return false;
    const Int m = disc / 4;
    const Int mm4 = mod_nonneg(m, 4);
    return (mm4 == 2 || mm4 == 3) && is_squarefree(m);
}

int kronecker_symbol(const Int& d, const Int& p) {
    HERMOP_DOMAIN_CHECK(is_prime(p), "kronecker_symbol: modulus is not prime");
    if (p == 2) {
        const Int m8 = mod_nonneg(d, 8);
        if (m8 % 2 == 0) return 0;
        return (m8 == 1 || m8 == 7) ? 1 : -1;
    }
    const Int r = mod_nonneg(d, p);
    if (r == 0) return 0;
    const Int e = boost::multiprecision::powm(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

SplitType classify_place(const Int& field_disc, const Int& p) {
    HERMOP_DOMAIN_CHECK(is_fundamental_discriminant(field_disc),
                        "classify_place: not a fundamental discriminant of an "
                        "imaginary quadratic field");
    HERMOP_DOMAIN_CHECK(is_prime(p), "classify_place: p is not prime");
    if (field_disc % p == 0) return SplitType::ramified;
    return kronecker_symbol(field_disc, p) == 1 ? SplitType::split
                                                : SplitType::inert;
}

GaussIntMatrix xi_matrix(int n1, int n2, int r) {
    HERMOP_DOMAIN_CHECK(0 <= r && r <= n2 && n2 <= n1,
                        "xi_matrix: require 0 <= r <= n2 <= n1");
    const int n = n1 + n2;
    GaussIntMatrix xi = gauss_identity(2 * n);
    // Itld has I_r in its lower-right corner inside an n1 x n2 block.
    for (int t = 0; t < r; ++t) {
        const int i = n1 - r + t;
        const int j = n2 - r + t;
        xi[n + i][n1 + j] = GaussInt{1};
        xi[n + n1 + j][i] = GaussInt{1};
    }
    return xi;
}

GaussIntMatrix symplectic_form(int n) {
    HERMOP_DOMAIN_CHECK(n >= 0, "symplectic_form: size must be >= 0");
    GaussIntMatrix j(2 * n, std::vector<GaussInt>(2 * n));
    for (int i = 0; i < n; ++i) {
        j[i][n + i] = GaussInt{1};
        j[n + i][i] = GaussInt{-1};
    }
    return j;
}

bool verify_xi_unitary(int n1, int n2, int r) {
    const GaussIntMatrix xi = xi_matrix(n1, n2, r);
    if (n1 + n2 == 0) return true; // size-0 matrices are vacuously unitary
    const GaussIntMatrix j = symplectic_form(n1 + n2);
    return gauss_matrix_equal(gauss_mul(gauss_adjoint(xi), gauss_mul(j, xi)), j);
}

} // namespace hermop
