#pragma once

// Operator algebra on polynomials in two n x kcols matrices of variables
// X_{i,a}, Y_{j,b}:
//
//   pi^-_{ij} f = sum_{a=1}^{kcols} d^2 f / dX_{i,a} dY_{j,a}
//       (the pluriharmonic Laplacians; a scalar factor of sqrt(-1) in the
//        underlying action is dropped since only vanishing matters),
//
//   D_{ab} f = sum_i X_{i,a} df/dX_{i,b} - sum_j Y_{j,b} df/dY_{j,a}
//       (derivations generating the right column-group action; f is
//        invariant under that action iff every D_{ab} f = 0).
//
// Polynomials in the pairing entries z_{ij} = sum_a X_{i,a} Y_{j,a} are
// exactly the invariants, and block_embed realizes the product of spaces
// over row blocks n = n1 + n2.

#include <vector>

#include "hermop/multipoly.hpp"

namespace hermop {

struct WeilSpaceSpec {
    int n = 1;     // number of rows
    int kcols = 1; // number of columns
};

struct WeilPoly {
    WeilSpaceSpec spec;
    MultiPoly body;
};

// Validates that body only uses X/Y variables within the spec's index box.
WeilPoly make_weil_poly(const WeilSpaceSpec& spec, MultiPoly body);

// z_{ij} = sum_{a=1}^{kcols} X_{i,a} Y_{j,a}, entry (i,j) of X tY.
MultiPoly pairing_entry(int i, int j, int kcols);

WeilPoly apply_pi_minus(const WeilPoly& f, int i, int j);

// True iff pi^-_{ij} f = 0 for all 1 <= i, j <= n.
bool is_pluriharmonic(const WeilPoly& f);

// True iff pi^-_{ij} f = 0 whenever i and j fall in the same row block;
// block_sizes must sum to spec.n.  This is the factorwise condition for a
// product over blocks (cross-block pairs are not constrained).
bool is_pluriharmonic_within_blocks(const WeilPoly& f,
                                    const std::vector<int>& block_sizes);

WeilPoly apply_glk_invariance_operator(const WeilPoly& f, int a, int b);

// Product polynomial over n1 + n2 rows; f2's row indices shift up by f1.spec.n.
WeilPoly block_embed(const WeilPoly& f1, const WeilPoly& f2);

} // namespace hermop
