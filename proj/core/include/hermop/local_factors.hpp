#pragma once

// Local standard-L data at good finite places of an imaginary quadratic
// extension K / Q.
//
// Fix a rational prime p with residue norm q = N(p) and write u = q^{-s},
// so q^{a - b*s} becomes q^a * u^b.  With chi a unitary character giving
// exact values chi(p) at the base prime and chi(P) at the prime(s) above
// it, and lambda_1, ..., lambda_m the Hecke eigenvalues of the local
// spherical vector (m = n2 when p stays prime, m = 2*n2 when p splits),
// the local factor S_v is the rational function in u:
//
//   inert     prod_{i=1}^{2n2} (1 - (-1)^{i-1} q^{i-1} chi(p) u^2)
//             / prod_{i=1}^{n2} (1 - q^{2n2-2} lambda_i chi(P) u^2)
//                               (1 - q^{2n2} lambda_i^{-1} chi(P) u^2)
//
//   ramified  prod_{i=0}^{n2-1} (1 - q^{2i} chi(p) u^2)
//             / prod_{i=1}^{n2} (1 - q^{n2-1} lambda_i chi(P) u)
//                               (1 - q^{n2} lambda_i^{-1} chi(P) u)
//
//   split     prod_{i=1}^{2n2} (1 - q^{i-1} chi(p) u^2)
//             / prod_{i=1}^{2n2} (1 - q^{2n2} lambda_i^{-1} chi(P1) u)
//                                (1 - q^{-1} lambda_i chi(P2) u)
//
// Numerator and denominator are stored with constant term 1 and are never
// reduced implicitly; cancelling common factors is a separate explicit
// step.  A partial Euler product keeps one factor per place, each in its
// own u_v = q_v^{-s}, and only an evaluation at a common integer s mixes
// places.
//
// The double-coset representatives xi_r are block matrices over Z[omega]
// (omega^2 = -1), with row and column blocks of sizes (n1, n2, n1, n2):
//
//   xi_r = [ I    0    0  0 ]      Itld = [ 0 0 ]  in  M_{n1 x n2}(Z),
//          [ 0    I    0  0 ]             [ 0 I_r ]
//          [ 0    Itld I  0 ]
//          [ Itld^t  0 0  I ]
//
// and each must satisfy adj(xi_r) J_n xi_r = J_n for the hermitian form
// J_n = [[0, I_n], [-I_n, 0]], n = n1 + n2.

#include <string>
#include <utility>
#include <vector>

#include "hermop/gauss.hpp"
#include "hermop/rational.hpp"

namespace hermop {

// Dense polynomial in u over Q(i).  Coefficients ascending by degree with
// no trailing zeros; the zero polynomial is the empty list.
struct UPoly {
    std::vector<GaussRat> coeffs;

    UPoly() = default;
    explicit UPoly(std::vector<GaussRat> c);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    GaussRat coeff(int k) const;
    GaussRat eval(const GaussRat& u) const;
};

bool operator==(const UPoly& a, const UPoly& b);
bool operator!=(const UPoly& a, const UPoly& b);
UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);

UPoly upoly_one();
// c * u^e.
UPoly upoly_term(const GaussRat& c, int e);

// Quotient and remainder of the Euclidean division a = q*b + r, deg r < deg b.
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);
// Greatest common divisor, normalized so the lowest nonzero coefficient is 1.
UPoly upoly_gcd(const UPoly& a, const UPoly& b);

std::string upoly_to_string(const UPoly& p);

// One local factor numerator / denominator, both with constant term 1.
struct EulerFactor {
    UPoly numerator;
    UPoly denominator;
};

// Validates the constant-term normalization.
EulerFactor make_euler_factor(UPoly numerator, UPoly denominator);
// Cancels the (monic-at-0) gcd of numerator and denominator.  This is the
// only place a common factor is ever removed.
EulerFactor reduce(const EulerFactor& f);
GaussRat evaluate(const EulerFactor& f, const GaussRat& u);

enum class SplitType { inert, ramified, split };

std::string split_type_name(SplitType t);
SplitType split_type_from_name(const std::string& name);

struct LocalPlaceSpec {
    SplitType split_type = SplitType::inert;
    // Residue norm N(p) >= 2.
    long q = 2;
    // chi(p) at the base prime.
    GaussRat chi_p{1};
    // chi at the prime(s) above p: one value (inert, ramified) or two (split).
    std::vector<GaussRat> chi_P{GaussRat{1}};
    // n2 eigenvalues (inert, ramified) or 2*n2 (split); all nonzero.
    std::vector<Rat> eigenvalues;
    int n2 = 1;
};

void validate_local_place(const LocalPlaceSpec& place);
// Number of eigenvalues the split type requires: n2 or 2*n2.
int expected_eigenvalue_count(SplitType t, int n2);

EulerFactor satake_local_factor(const LocalPlaceSpec& place);

// Formal product of per-place factors; no cross-place arithmetic is
// performed until an evaluation point is supplied.
struct PartialEulerProduct {
    std::vector<std::pair<LocalPlaceSpec, EulerFactor>> factors;
};

PartialEulerProduct partial_euler_product(const std::vector<LocalPlaceSpec>& places);
// Evaluates every factor at u_v = q_v^{-s} for one integer s and multiplies.
GaussRat evaluate_at_integer_s(const PartialEulerProduct& product, long s);

// Fundamental discriminant of an imaginary quadratic field: negative, and
// either d = 1 mod 4 squarefree, or d = 4m with m squarefree and
// m = 2 or 3 mod 4.
bool is_fundamental_discriminant(const Int& disc);
// Kronecker symbol (d / p) for prime p.
int kronecker_symbol(const Int& d, const Int& p);
SplitType classify_place(const Int& field_disc, const Int& p);

// xi_r for block sizes (n1, n2); 2(n1+n2) square.
GaussIntMatrix xi_matrix(int n1, int n2, int r);
// J_n = [[0, I_n], [-I_n, 0]] as a 2n square matrix.
GaussIntMatrix symplectic_form(int n);
// adj(xi_r) J_n xi_r == J_n, exactly.
bool verify_xi_unitary(int n1, int n2, int r);

} // namespace hermop
