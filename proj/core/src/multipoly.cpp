#include "hermop/multipoly.hpp"

#include <algorithm>

namespace hermop {

Monomial normalize_monomial(Monomial m) {
    std::sort(m.begin(), m.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Monomial out;
    for (const auto& [v, e] : m) {
        HERMOP_DOMAIN_CHECK(e >= 0, "monomial: negative exponent on " + v.to_string());
        if (e == 0) continue;
        if (!out.empty() && out.back().first == v)
            out.back().second += e;
        else
            out.emplace_back(v, e);
    }
    return out;
}

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

int monomial_cmp_graded_lex(const Monomial& a, const Monomial& b) {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db ? -1 : 1;
    // Walk both sorted exponent lists; the first variable (in VarId order)
    // where the exponents differ decides.  A variable present in only one
    // monomial counts as exponent 0 in the other.
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            if (a[i].second != b[j].second) return a[i].second < b[j].second ? -1 : 1;
            ++i;
            ++j;
        } else if (a[i].first < b[j].first) {
            return 1; // a has positive exponent where b has 0
        } else {
            return -1;
        }
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

MultiPoly MultiPoly::constant(const ParamField& c) {
    MultiPoly p;
    p.add_term({}, c);
    return p;
}

MultiPoly MultiPoly::variable(const VarId& v) {
    MultiPoly p;
    p.add_term({{v, 1}}, ParamField(1));
    return p;
}

MultiPoly MultiPoly::term(const Monomial& m, const ParamField& c) {
    MultiPoly p;
    p.add_term(normalize_monomial(m), c);
    return p;
}

void MultiPoly::add_term(const Monomial& m, const ParamField& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = monomial_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) != d) return false;
    return true;
}

int MultiPoly::degree_in_tags(const Monomial& m, const std::set<VarTag>& tags) const {
    int d = 0;
    for (const auto& [v, e] : m)
        if (tags.count(v.tag)) d += e;
    return d;
}

MultiPoly MultiPoly::truncate_by_tags(int max_degree, const std::set<VarTag>& tags) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_)
        if (degree_in_tags(m, tags) <= max_degree) out.terms_.emplace(m, c);
    return out;
}

ParamField MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(normalize_monomial(m));
    return it == terms_.end() ? ParamField() : it->second;
}

std::set<VarId> MultiPoly::variables() const {
    std::set<VarId> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) out.insert(v);
    return out;
}

bool MultiPoly::uses_only(const VarUniverse& u) const {
    for (const auto& v : variables())
        if (!u.contains(v)) return false;
    return true;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(normalize_monomial(std::move(m)), ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const ParamField& c) const {
    MultiPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, cc] : terms_) out.terms_.emplace(m, cc * c);
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = MultiPoly::constant(Rat(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

MultiPoly MultiPoly::partial_derivative(const VarId& v) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i].first != v) continue;
            Monomial dm = m;
            int e = dm[i].second;
            if (e == 1)
                dm.erase(dm.begin() + static_cast<std::ptrdiff_t>(i));
            else
                dm[i].second = e - 1;
            out.add_term(dm, c * ParamField(Rat(e)));
            break;
        }
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<VarId, MultiPoly>& images) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        MultiPoly term = MultiPoly::constant(c);
        for (const auto& [v, e] : m) {
            auto it = images.find(v);
            HERMOP_DOMAIN_CHECK(it != images.end(),
                                "substitute: no image for variable " + v.to_string());
            term = term * it->second.pow(static_cast<unsigned>(e));
        }
        out += term;
    }
    return out;
}

MultiPoly MultiPoly::rename_tag(VarTag from, VarTag to) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial rm = m;
        for (auto& [v, e] : rm)
            if (v.tag == from) v.tag = to;
        out.add_term(normalize_monomial(std::move(rm)), c);
    }
    return out;
}

MultiPoly MultiPoly::map_coefficients(
    const std::function<ParamField(const ParamField&)>& f) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        ParamField fc = f(c);
        if (!fc.is_zero()) out.terms_.emplace(m, fc);
    }
    return out;
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op, const VarUniverse& u) {
    HERMOP_DOMAIN_CHECK(a.uses_only(u) && b.uses_only(u),
                        "poly_arith: operand uses a variable outside the declared universe " +
                            u.describe());
    return op == PolyOp::add ? a + b : a * b;
}

} // namespace hermop
