#pragma once

// Variable identifiers for the sparse polynomial layer.
//
// A variable is a named matrix slot: tag + (row, col), e.g. T23 is the
// (2,3) entry of the matrix T.  Tags in use:
//   T    entries of the symmetric-role matrix the operator images live in
//   Z    entries of the half-space variable (inputs of the rewrite route
//        are polynomials in the d/dZ symbols, indexed like Z)
//   W    entries of the jet variable of the det-power expansion
//   X, Y the two n x kcols blocks of the Weil-module polynomial ring
//   D    entries of the auxiliary matrix produced by the rewrite rules
//   Dinv the scalar delta^{-1} prefactor symbol (no indices, prints "dinv")
//
// Everything is indexed from 1 and kept to one decimal digit (the whole
// artifact works at n <= 9, kcols <= 9), which keeps the text form "T11"
// unambiguous.  There is a single archimedean place throughout, so no
// place index is stored.

#include <compare>
#include <cstdint>
#include <set>
#include <string>

#include "hermop/errors.hpp"

namespace hermop {

enum class VarTag : std::uint8_t { T = 0, Z, W, X, Y, D, Dinv };

std::string tag_name(VarTag tag);

struct VarId {
    VarTag tag;
    int row; // 1-based
    int col; // 1-based

    auto operator<=>(const VarId&) const = default;

    std::string to_string() const;
};

VarId make_var(VarTag tag, int row, int col);

inline VarId var_T(int i, int j) { return make_var(VarTag::T, i, j); }
inline VarId var_Z(int i, int j) { return make_var(VarTag::Z, i, j); }
inline VarId var_W(int i, int j) { return make_var(VarTag::W, i, j); }
inline VarId var_X(int i, int a) { return make_var(VarTag::X, i, a); }
inline VarId var_Y(int j, int b) { return make_var(VarTag::Y, j, b); }
inline VarId var_D(int i, int j) { return make_var(VarTag::D, i, j); }
inline VarId var_dinv() { return VarId{VarTag::Dinv, 0, 0}; }

// A declared set of matrix shapes; used to validate parsed polynomials
// and to report variable-universe mismatches.
class VarUniverse {
public:
    void declare(VarTag tag, int rows, int cols);
    bool contains(const VarId& v) const;
    std::string describe() const;

private:
    struct Shape {
        VarTag tag;
        int rows;
        int cols;
        auto operator<=>(const Shape&) const = default;
    };
    std::set<Shape> shapes_;
};

} // namespace hermop
