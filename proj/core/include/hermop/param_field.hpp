#pragma once

// The coefficient field Q(k, s): rational functions in the two symbolic
// parameters k (the weight exponent) and s, with exact Rat coefficients.
//
// Poly2 is a sparse bivariate polynomial; a term c * k^i * s^j is stored
// as {(i, j) -> c}.  ParamField is a reduced fraction of two Poly2 values.
// Reduction never factors: it only strips a common monomial, attempts the
// two trial exact divisions (num/den and den/num), and rescales so the
// denominator is monic under graded-lex.  Equality of fractions is decided
// by cross-multiplication and is independent of how far reduction got.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hermop/rational.hpp"

namespace hermop {

struct Poly2 {
    // (degree in k, degree in s) -> coefficient; zero coefficients absent.
    std::map<std::pair<int, int>, Rat> c;

    static Poly2 constant(const Rat& r);
    static Poly2 kappa();   // the monomial k
    static Poly2 sigma();   // the monomial s

    bool is_zero() const { return c.empty(); }
    bool is_one() const;
    bool is_constant() const;

    int total_degree() const; // -1 for the zero polynomial

    // Leading term under graded-lex with k ordered before s.
    std::pair<std::pair<int, int>, Rat> leading_term() const;

    Poly2 operator-() const;
    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    bool operator==(const Poly2& o) const { return c == o.c; }

    Poly2 scaled(const Rat& r) const;
    Poly2 pow(unsigned e) const;

    Rat eval(const Rat& kv, const Rat& sv) const;

    // Substitutes k -> k/2 + s, leaving s fixed.
    Poly2 substitute_kappa_half_plus_s() const;

    // Quotient when "this" is exactly divisible by d, std::nullopt otherwise.
    std::optional<Poly2> divide_exact(const Poly2& d) const;

    // Graded-lex descending term order, e.g. "1/2*k^2 + k*s - 3".
    std::string to_string() const;
};

class ParamField {
public:
    ParamField() : num_(), den_(Poly2::constant(1)) {}
    ParamField(int v) : ParamField(Rat(v)) {}
    explicit ParamField(const Rat& v)
        : num_(Poly2::constant(v)), den_(Poly2::constant(1)) {}
    explicit ParamField(const Poly2& p)
        : num_(p), den_(Poly2::constant(1)) {}
    ParamField(Poly2 num, Poly2 den);

    static ParamField kappa() { return ParamField(Poly2::kappa()); }
    static ParamField sigma() { return ParamField(Poly2::sigma()); }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_rational() const; // constant numerator and denominator
    Rat as_rational() const;  // throws domain_error unless is_rational()

    ParamField operator-() const;
    ParamField operator+(const ParamField& o) const;
    ParamField operator-(const ParamField& o) const;
    ParamField operator*(const ParamField& o) const;
    ParamField operator/(const ParamField& o) const; // throws on zero divisor

    ParamField& operator+=(const ParamField& o) { return *this = *this + o; }
    ParamField& operator-=(const ParamField& o) { return *this = *this - o; }
    ParamField& operator*=(const ParamField& o) { return *this = *this * o; }
    ParamField& operator/=(const ParamField& o) { return *this = *this / o; }

    // Cross-multiplication equality, exact for any representation state.
    bool operator==(const ParamField& o) const;
    bool operator!=(const ParamField& o) const { return !(*this == o); }

    Rat eval(const Rat& kv, const Rat& sv) const;

    ParamField substitute_kappa_half_plus_s() const;

    // "num" when the denominator is 1, "(num)/(den)" otherwise.
    std::string to_string() const;

private:
    void normalize();

    Poly2 num_;
    Poly2 den_;
};

// k/2 + s as a field element, the exponent of the psi-route prefactor.
ParamField kappa_half_plus_s();

} // namespace hermop
