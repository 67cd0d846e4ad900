#pragma once

// Sparse multivariate polynomials over the coefficient field Q(k, s).
//
// A monomial is a sorted (by VarId) list of (variable, positive exponent)
// pairs; the term map is keyed in graded-lex *descending* order so that
// iteration starts at the leading term and serialization needs no second
// sort.  Graded-lex compares total degree first, then the exponent vectors
// lexicographically along increasing VarId (T11 before T12, row-major).

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hermop/param_field.hpp"
#include "hermop/varid.hpp"

namespace hermop {

using Monomial = std::vector<std::pair<VarId, int>>;

// Sorts by VarId and merges duplicates; drops zero exponents.
Monomial normalize_monomial(Monomial m);

int monomial_degree(const Monomial& m);

// strcmp-style three-way graded-lex comparison (+1 when a is larger).
int monomial_cmp_graded_lex(const Monomial& a, const Monomial& b);

struct MonomialOrderDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_cmp_graded_lex(a, b) > 0;
    }
};

class MultiPoly {
public:
    using TermMap = std::map<Monomial, ParamField, MonomialOrderDesc>;

    MultiPoly() = default;

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly constant(const ParamField& c);
    static MultiPoly constant(const Rat& c) { return constant(ParamField(c)); }
    static MultiPoly variable(const VarId& v);
    static MultiPoly term(const Monomial& m, const ParamField& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;

    // Total degree counted only over variables with the given tags.
    int degree_in_tags(const Monomial& m, const std::set<VarTag>& tags) const;
    MultiPoly truncate_by_tags(int max_degree, const std::set<VarTag>& tags) const;

    ParamField coefficient(const Monomial& m) const;
    std::set<VarId> variables() const;
    bool uses_only(const VarUniverse& u) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const ParamField& c) const;
    MultiPoly pow(unsigned e) const;

    // Exact equality (decided by subtraction, so it does not depend on how
    // far the coefficient fractions happened to reduce).
    bool operator==(const MultiPoly& o) const { return (*this - o).is_zero(); }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly partial_derivative(const VarId& v) const;

    // Simultaneous substitution; every variable occurring in the polynomial
    // must have an image (throws domain_error otherwise).
    MultiPoly substitute(const std::map<VarId, MultiPoly>& images) const;

    // Renames every variable with tag `from` to the same slot of tag `to`.
    MultiPoly rename_tag(VarTag from, VarTag to) const;

    // Applies f to every coefficient, dropping terms that become zero.
    MultiPoly map_coefficients(const std::function<ParamField(const ParamField&)>& f) const;

    void add_term(const Monomial& m, const ParamField& c);

private:
    TermMap terms_;
};

enum class PolyOp { add, mul };

// Checked arithmetic: both operands must live in the declared universe.
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op, const VarUniverse& u);

} // namespace hermop
