#pragma once

// Dense matrices of MultiPoly entries and the truncated determinant-power
// expansion det(M)^{-e} used by the closed-form operator images.

#include <set>
#include <vector>

#include "hermop/multipoly.hpp"

namespace hermop {

class PolyMatrix {
public:
    PolyMatrix(int rows, int cols);

    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // 1-based access, matching the mathematical index conventions.
    MultiPoly& at(int i, int j);
    const MultiPoly& at(int i, int j) const;

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;

    MultiPoly trace() const;

private:
    int rows_;
    int cols_;
    std::vector<MultiPoly> entries_;
};

// Truncated expansion of det(M)^{-exponent} where M = I - N and every term
// of N has positive degree in the truncation variables.  Computed as
// exp(exponent * sum_{j>=1} tr(N^j)/j), truncated at total degree
// `truncation_degree` counted over the variables whose tags lie in
// `truncation_tags` only (degrees in other variables are unconstrained).
// Throws domain_error when M's constant part in the truncation variables
// is not the identity.
MultiPoly det_power_series(const PolyMatrix& M, const ParamField& exponent,
                           int truncation_degree, const std::set<VarTag>& truncation_tags);

} // namespace hermop
