#include "hermop/poly_matrix.hpp"

namespace hermop {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    HERMOP_DOMAIN_CHECK(rows >= 1 && cols >= 1, "PolyMatrix: dimensions must be positive");
    entries_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = MultiPoly::constant(Rat(1));
    return m;
}

MultiPoly& PolyMatrix::at(int i, int j) {
    HERMOP_DOMAIN_CHECK(i >= 1 && i <= rows_ && j >= 1 && j <= cols_,
                        "PolyMatrix::at: index out of range");
    return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
                    static_cast<std::size_t>(j - 1)];
}

const MultiPoly& PolyMatrix::at(int i, int j) const {
    return const_cast<PolyMatrix*>(this)->at(i, j);
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    HERMOP_DOMAIN_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "PolyMatrix: shape mismatch in +");
    PolyMatrix out(rows_, cols_);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j) out.at(i, j) = at(i, j) + o.at(i, j);
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    HERMOP_DOMAIN_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "PolyMatrix: shape mismatch in -");
    PolyMatrix out(rows_, cols_);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j) out.at(i, j) = at(i, j) - o.at(i, j);
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    HERMOP_DOMAIN_CHECK(cols_ == o.rows_, "PolyMatrix: shape mismatch in *");
    PolyMatrix out(rows_, o.cols_);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= o.cols_; ++j) {
            MultiPoly acc;
            for (int t = 1; t <= cols_; ++t) acc += at(i, t) * o.at(t, j);
            out.at(i, j) = acc;
        }
    return out;
}

MultiPoly PolyMatrix::trace() const {
    HERMOP_DOMAIN_CHECK(rows_ == cols_, "PolyMatrix::trace: matrix not square");
    MultiPoly acc;
    for (int i = 1; i <= rows_; ++i) acc += at(i, i);
    return acc;
}

MultiPoly det_power_series(const PolyMatrix& M, const ParamField& exponent,
                           int truncation_degree, const std::set<VarTag>& truncation_tags) {
    HERMOP_DOMAIN_CHECK(M.rows() == M.cols(), "det_power_series: matrix not square");
    HERMOP_DOMAIN_CHECK(truncation_degree >= 0, "det_power_series: negative truncation degree");
    const int n = M.rows();

    PolyMatrix N = PolyMatrix::identity(n) - M;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (const auto& [m, c] : N.at(i, j).terms())
                HERMOP_DOMAIN_CHECK(
                    N.at(i, j).degree_in_tags(m, truncation_tags) >= 1,
                    "det_power_series: constant term of M is not the identity in the "
                    "truncation variables");

    auto truncate = [&](const MultiPoly& p) {
        return p.truncate_by_tags(truncation_degree, truncation_tags);
    };
    auto truncate_matrix = [&](PolyMatrix& A) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) A.at(i, j) = truncate(A.at(i, j));
    };
    truncate_matrix(N);

    // log det(M)^{-e} = e * sum_j tr(N^j)/j, truncated; every term of N has
    // truncation-degree >= 1 so powers beyond the cutoff vanish.
    MultiPoly logsum;
    PolyMatrix Npow = N;
    for (int j = 1; j <= truncation_degree; ++j) {
        if (j > 1) {
            Npow = Npow * N;
            truncate_matrix(Npow);
        }
        logsum += Npow.trace().scaled(ParamField(Rat(1, j)));
    }
    logsum = truncate(logsum.scaled(exponent));

    MultiPoly result = MultiPoly::constant(Rat(1));
    MultiPoly power = MultiPoly::constant(Rat(1));
    Rat fact = 1;
    for (int j = 1; j <= truncation_degree; ++j) {
        power = truncate(power * logsum);
        if (power.is_zero()) break;
        fact *= j;
        result += power.scaled(ParamField(Rat(1) / fact));
    }
    return truncate(result);
}

} // namespace hermop
