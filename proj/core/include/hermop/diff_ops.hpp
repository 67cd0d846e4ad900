#pragma once

// Images of polynomial differential operators acting on a determinant power.
//
// Two independent routes compute the same object:
//
//   (i)  rewrite_Q: apply a polynomial P in the derivative symbols d/dZ_{ij}
//        to the formal prefactor delta^{-e} (delta a determinant, e = k or
//        k/2+s), using the closed rewrite rules
//            d/dZ_{ij} delta^{-e}  = -e * delta^{-e} * D_{i,j}
//            d/dZ_{ij} D_{s,t}     = -D_{s,j} * D_{i,t}
//        where D_{i,j} are the entries of the logarithmic-derivative matrix
//        of delta.  The result is delta^{-e} * Q(D), and Q is returned.
//
//   (ii) phi_kappa / psi_kappa_s: the closed form
//            phi(P)(T) = (-1)^d * (P(d/dW) det(I_n - W tT)^{-e}) |_{W=0}
//        for P homogeneous of degree d, computed from the truncated jet of
//        the determinant power.
//
// The index order in the second rewrite rule is the unique transpose
// convention under which route (i), with D renamed to T, agrees with route
// (ii) for every monomial; the equivalence is enforced by tests.

#include <map>

#include "hermop/multipoly.hpp"
#include "hermop/param_field.hpp"
#include "hermop/rat_matrix.hpp"

namespace hermop {

// Which exponent the factored-off prefactor delta^{-e} carries.
enum class RewriteMode { plain_kappa, kappa_half_plus_s };

// e = k (plain_kappa) or k/2 + s (kappa_half_plus_s).
ParamField rewrite_exponent(RewriteMode mode);

// delta^{-e} * q(D): the image of a derivative polynomial applied to the
// prefactor, with exactly one power of delta^{-e} factored off.
struct DeltaWord {
    RewriteMode mode = RewriteMode::plain_kappa;
    MultiPoly q; // polynomial in the D_{i,j} variables
    ParamField exponent() const { return rewrite_exponent(mode); }
};

// P is a polynomial in derivative symbols written with T (or Z) variables;
// the variable at slot (i,j) stands for d/dZ_{ij}.  Returns the full word.
DeltaWord rewrite_word(const MultiPoly& p, RewriteMode mode);

// The Q polynomial alone (in D variables).
MultiPoly rewrite_Q(const MultiPoly& p, RewriteMode mode);

// Closed-form image with exponent k.  P must be homogeneous in the T
// variables of an n x n slot range; throws domain_error otherwise.
MultiPoly phi_kappa(const MultiPoly& p, int n);

// Same with symbolic exponent k/2 + s.
MultiPoly psi_kappa_s(const MultiPoly& p, int n);

// P_{A,B}(T) = P(tA * T * B) for square rational matrices of size n.
MultiPoly transform_P(const MultiPoly& p, const RatMatrix& a, const RatMatrix& b);

// Moment coefficients E[nu] defined by
//     sum_nu E[nu] Y^nu / nu!  =  det(I_n - 2Y)^{-k},
// nu running over n x n exponent matrices with |nu| <= max_degree.  Keys are
// monomials in the Y variables; absent keys mean the coefficient is zero.
using ECoefficientMap = std::map<Monomial, ParamField, MonomialOrderDesc>;
ECoefficientMap E_coefficients(int n, int max_degree);

} // namespace hermop
