#include "hermop/gauss.hpp"

#include <cctype>

#include "hermop/errors.hpp"

namespace hermop {

bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
}
bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
}
GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
}
GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }

GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    return a * gauss_inverse(b);
}

GaussRat gauss_conj(const GaussRat& a) { return {a.re, -a.im}; }

Rat gauss_norm(const GaussRat& a) { return a.re * a.re + a.im * a.im; }

GaussRat gauss_inverse(const GaussRat& a) {
    const Rat n = gauss_norm(a);
    HERMOP_DOMAIN_CHECK(!n.is_zero(), "gauss_inverse: division by zero");
    return {a.re / n, -a.im / n};
}

GaussRat gauss_pow(const GaussRat& base, int e) {
    HERMOP_DOMAIN_CHECK(e >= 0, "gauss_pow: negative exponent");
    GaussRat acc{1};
    GaussRat b = base;
    int k = e;
    while (k > 0) {
        if (k & 1) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

namespace {

// One additive term: either rational or rational-times-i ("3/4i", "i", "-i").
GaussRat term_from_string(const std::string& t) {
    HERMOP_DOMAIN_CHECK(!t.empty(), "gaussian parse: empty term");
    if (t.back() != 'i') return {rat_from_string(t), 0};
    std::string coeff = t.substr(0, t.size() - 1);
    if (coeff.empty() || coeff == "+") return {0, 1};
    if (coeff == "-") return {0, -1};
    return {0, rat_from_string(coeff)};
}

} // namespace

GaussRat gauss_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    HERMOP_DOMAIN_CHECK(!s.empty(), "gaussian parse: empty input");
    // A sign at position > 0 separates the real and imaginary terms; signs
    // inside a term can only be leading, and '/' never precedes a sign.
    std::size_t split = std::string::npos;
    for (std::size_t p = 1; p < s.size(); ++p)
        if (s[p] == '+' || s[p] == '-') {
            HERMOP_DOMAIN_CHECK(split == std::string::npos,
                                "gaussian parse: too many terms in '" + text + "'");
            split = p;
        }
    if (split == std::string::npos) return term_from_string(s);
    const GaussRat a = term_from_string(s.substr(0, split));
    const GaussRat b = term_from_string(s.substr(split));
    HERMOP_DOMAIN_CHECK(a.im.is_zero() && b.re.is_zero(),
                        "gaussian parse: expected real then imaginary term in '" +
                            text + "'");
    return a + b;
}

namespace {

std::string imag_text(const Rat& b) {
    if (b == 1) return "i";
    if (b == -1) return "-i";
    return rat_to_string(b) + "i";
}

} // namespace

std::string gauss_to_string(const GaussRat& a) {
    if (a.is_zero()) return "0";
    if (a.im.is_zero()) return rat_to_string(a.re);
    if (a.re.is_zero()) return imag_text(a.im);
    return rat_to_string(a.re) + (a.im > 0 ? "+" : "") + imag_text(a.im);
}

bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
}
bool operator!=(const GaussInt& a, const GaussInt& b) { return !(a == b); }

GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {a.re + b.re, a.im + b.im};
}
GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
}
GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussInt gauss_conj(const GaussInt& a) { return {a.re, -a.im}; }

GaussIntMatrix gauss_identity(int n) {
    HERMOP_DOMAIN_CHECK(n >= 0, "gauss_identity: negative size");
    GaussIntMatrix m(n, std::vector<GaussInt>(n));
    for (int i = 0; i < n; ++i) m[i][i] = GaussInt{1};
    return m;
}

GaussIntMatrix gauss_mul(const GaussIntMatrix& a, const GaussIntMatrix& b) {
    const std::size_t rows = a.size();
    HERMOP_DOMAIN_CHECK(!a.empty() && !b.empty(), "gauss_mul: empty matrix");
    const std::size_t inner = a[0].size();
    HERMOP_DOMAIN_CHECK(inner == b.size(), "gauss_mul: shape mismatch");
    const std::size_t cols = b[0].size();
    GaussIntMatrix out(rows, std::vector<GaussInt>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        HERMOP_DOMAIN_CHECK(a[i].size() == inner, "gauss_mul: ragged matrix");
        for (std::size_t k = 0; k < inner; ++k) {
            HERMOP_DOMAIN_CHECK(b[k].size() == cols, "gauss_mul: ragged matrix");
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] = out[i][j] + a[i][k] * b[k][j];
        }
    }
    return out;
}

GaussIntMatrix gauss_adjoint(const GaussIntMatrix& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    GaussIntMatrix out(cols, std::vector<GaussInt>(rows));
    for (std::size_t i = 0; i < rows; ++i) {
        HERMOP_DOMAIN_CHECK(a[i].size() == cols, "gauss_adjoint: ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) out[j][i] = gauss_conj(a[i][j]);
    }
    return out;
}

bool gauss_matrix_equal(const GaussIntMatrix& a, const GaussIntMatrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

} // namespace hermop
