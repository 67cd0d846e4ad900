#pragma once

// Exact arithmetic in the Gaussian rationals Q(i) and Gaussian integers
// Z[omega] with omega^2 = -1.
//
//   GaussRat  a + b*i  with a, b rational; field operations, conjugate,
//             inverse via (a - b*i) / (a^2 + b^2).
//   GaussInt  a + b*omega with a, b integers; ring operations, conjugate.
//
// GaussRat covers every unitary character value of conductor dividing 4
// (1, -1, i, -i) together with arbitrary rational scalings, which is all
// the character data the local-factor formulas consume.
//
// Text form: "a", "bi", or "a+bi" / "a-bi" with rational a, b; the unit
// imaginary coefficient is left implicit ("i", "-i", "1+i", "1/2-3/4i").

#include <string>
#include <vector>

#include "hermop/rational.hpp"

namespace hermop {

struct GaussRat {
    Rat re = 0;
    Rat im = 0;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(int r) : re(r) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
};

bool operator==(const GaussRat& a, const GaussRat& b);
bool operator!=(const GaussRat& a, const GaussRat& b);
GaussRat operator+(const GaussRat& a, const GaussRat& b);
GaussRat operator-(const GaussRat& a, const GaussRat& b);
GaussRat operator-(const GaussRat& a);
GaussRat operator*(const GaussRat& a, const GaussRat& b);
GaussRat operator/(const GaussRat& a, const GaussRat& b);

GaussRat gauss_conj(const GaussRat& a);
// |a|^2 = a * conj(a) as a rational.
Rat gauss_norm(const GaussRat& a);
GaussRat gauss_inverse(const GaussRat& a);
// Nonnegative integer powers only.
GaussRat gauss_pow(const GaussRat& base, int e);

GaussRat gauss_from_string(const std::string& text);
std::string gauss_to_string(const GaussRat& a);

struct GaussInt {
    Int re = 0;
    Int im = 0;

    GaussInt() = default;
    GaussInt(Int r) : re(std::move(r)) {}
    GaussInt(int r) : re(r) {}
    GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
};

bool operator==(const GaussInt& a, const GaussInt& b);
bool operator!=(const GaussInt& a, const GaussInt& b);
GaussInt operator+(const GaussInt& a, const GaussInt& b);
GaussInt operator-(const GaussInt& a, const GaussInt& b);
GaussInt operator*(const GaussInt& a, const GaussInt& b);
GaussInt gauss_conj(const GaussInt& a);

using GaussIntMatrix = std::vector<std::vector<GaussInt>>;

GaussIntMatrix gauss_identity(int n);
GaussIntMatrix gauss_mul(const GaussIntMatrix& a, const GaussIntMatrix& b);
// Conjugate transpose g |-> conj(g)^t.
GaussIntMatrix gauss_adjoint(const GaussIntMatrix& a);
bool gauss_matrix_equal(const GaussIntMatrix& a, const GaussIntMatrix& b);

} // namespace hermop
