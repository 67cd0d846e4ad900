#pragma once

// Exact nullspace computation over a field (Rat or ParamField).
//
// Gauss-Jordan elimination with exact field arithmetic; no pivoting
// heuristics are needed since nothing here is approximate.  Basis vectors
// are normalized deterministically: the first nonzero coordinate is made
// positive (for ParamField, the leading coefficient of the first nonzero
// coordinate), denominators are cleared, and the integer content is
// divided out, so e.g. the kernel of [k  k] comes back as {(1, -1)}.

#include <vector>

#include "hermop/param_field.hpp"

namespace hermop {

template <typename F>
struct NullspaceResult {
    std::vector<std::vector<F>> basis;
    int rank = 0;
};

namespace detail {

inline bool field_is_zero(const Rat& v) { return v.is_zero(); }
inline bool field_is_zero(const ParamField& v) { return v.is_zero(); }

// Rescales a rational vector to a primitive integer vector whose first
// nonzero entry is positive.
inline void normalize_vector(std::vector<Rat>& v) {
    Int num_gcd = 0, den_lcm = 1;
    bool negate = false, seen = false;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        if (!seen) {
            negate = x < 0;
            seen = true;
        }
        num_gcd = boost::multiprecision::gcd(num_gcd, rat_num(x));
        den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(x));
    }
    if (!seen) return;
    Rat scale = Rat(den_lcm, num_gcd < 0 ? Int(-num_gcd) : num_gcd);
    if (negate) scale = -scale;
    for (auto& x : v) x *= scale;
}

// Clears all ParamField denominators by one common polynomial multiple,
// then divides out the rational content of the coefficients.
inline void normalize_vector(std::vector<ParamField>& v) {
    std::size_t first = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) {
            first = i;
            break;
        }
    if (first == v.size()) return;
    for (const auto& x : v)
        if (!x.den().is_one()) {
            ParamField d(x.den());
            for (auto& y : v) y *= d;
        }
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& x : v)
        for (const auto& [e, c] : x.num().c) {
            num_gcd = boost::multiprecision::gcd(num_gcd, rat_num(c));
            den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(c));
        }
    Rat scale = Rat(den_lcm, num_gcd < 0 ? Int(-num_gcd) : num_gcd);
    if (v[first].num().leading_term().second < 0) scale = -scale;
    for (auto& x : v) x *= ParamField(scale);
}

} // namespace detail

// Kernel of the rows-by-cols matrix M (rows may be empty; every row must
// have exactly `cols` entries).
template <typename F>
NullspaceResult<F> nullspace(std::vector<std::vector<F>> M, int cols) {
    HERMOP_DOMAIN_CHECK(cols >= 0, "nullspace: negative column count");
    for (const auto& row : M)
        HERMOP_DOMAIN_CHECK(static_cast<int>(row.size()) == cols,
                            "nullspace: ragged matrix row");

    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < M.size(); ++c) {
        std::size_t p = r;
        while (p < M.size() && detail::field_is_zero(M[p][c])) ++p;
        if (p == M.size()) continue;
        std::swap(M[r], M[p]);
        F inv = F(1) / M[r][c];
        for (int j = c; j < cols; ++j) M[r][j] = M[r][j] * inv;
        for (std::size_t i = 0; i < M.size(); ++i) {
            if (i == r || detail::field_is_zero(M[i][c])) continue;
            F f = M[i][c];
            for (int j = c; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    NullspaceResult<F> out;
    out.rank = static_cast<int>(pivot_col.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<F> x(static_cast<std::size_t>(cols), F(0));
        x[static_cast<std::size_t>(f)] = F(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            x[static_cast<std::size_t>(pivot_col[i])] = -M[i][static_cast<std::size_t>(f)];
        detail::normalize_vector(x);
        out.basis.push_back(std::move(x));
    }
    return out;
}

} // namespace hermop
