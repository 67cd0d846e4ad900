#include "hermop/param_field.hpp"

#include <algorithm>
#include <vector>

namespace hermop {

namespace {

void set_coeff(std::map<std::pair<int, int>, Rat>& m, std::pair<int, int> e, const Rat& v) {
    if (v.is_zero())
        m.erase(e);
    else
        m[e] = v;
}

void add_coeff(std::map<std::pair<int, int>, Rat>& m, std::pair<int, int> e, const Rat& v) {
    auto it = m.find(e);
    if (it == m.end()) {
        if (!v.is_zero()) m.emplace(e, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
}

// Graded-lex with k before s: higher total degree first, then higher k-degree.
bool term_less_graded_lex(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da < db;
    return a.first < b.first;
}

std::string monomial_string(int i, int j) {
    std::string out;
    if (i > 0) {
        out += "k";
        if (i > 1) out += "^" + std::to_string(i);
    }
    if (j > 0) {
        if (!out.empty()) out += "*";
        out += "s";
        if (j > 1) out += "^" + std::to_string(j);
    }
    return out;
}

} // namespace

Poly2 Poly2::constant(const Rat& r) {
    Poly2 p;
    set_coeff(p.c, {0, 0}, r);
    return p;
}

Poly2 Poly2::kappa() {
    Poly2 p;
    p.c[{1, 0}] = 1;
    return p;
}

Poly2 Poly2::sigma() {
    Poly2 p;
    p.c[{0, 1}] = 1;
    return p;
}

bool Poly2::is_one() const {
    return c.size() == 1 && c.begin()->first == std::pair<int, int>{0, 0} &&
           c.begin()->second == 1;
}

bool Poly2::is_constant() const {
    return c.empty() || (c.size() == 1 && c.begin()->first == std::pair<int, int>{0, 0});
}

int Poly2::total_degree() const {
    int d = -1;
    for (const auto& [e, v] : c) d = std::max(d, e.first + e.second);
    return d;
}

std::pair<std::pair<int, int>, Rat> Poly2::leading_term() const {
    HERMOP_LOGIC_CHECK(!c.empty(), "Poly2::leading_term on zero polynomial");
    auto best = c.begin();
    for (auto it = std::next(c.begin()); it != c.end(); ++it)
        if (term_less_graded_lex(best->first, it->first)) best = it;
    return *best;
}

Poly2 Poly2::operator-() const {
    Poly2 out;
    for (const auto& [e, v] : c) out.c.emplace(e, -v);
    return out;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 out = *this;
    for (const auto& [e, v] : o.c) add_coeff(out.c, e, v);
    return out;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 out = *this;
    for (const auto& [e, v] : o.c) add_coeff(out.c, e, -v);
    return out;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 out;
    for (const auto& [ea, va] : c)
        for (const auto& [eb, vb] : o.c)
            add_coeff(out.c, {ea.first + eb.first, ea.second + eb.second}, va * vb);
    return out;
}

Poly2 Poly2::scaled(const Rat& r) const {
    Poly2 out;
    if (r.is_zero()) return out;
    for (const auto& [e, v] : c) out.c.emplace(e, v * r);
    return out;
}

Poly2 Poly2::pow(unsigned e) const {
    Poly2 acc = Poly2::constant(1);
    for (unsigned i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

Rat Poly2::eval(const Rat& kv, const Rat& sv) const {
    Rat out = 0;
    for (const auto& [e, v] : c)
        out += v * rat_pow(kv, e.first) * rat_pow(sv, e.second);
    return out;
}

Poly2 Poly2::substitute_kappa_half_plus_s() const {
    // Precompute (k/2 + s)^i up to the maximal k-degree.
    int maxk = 0;
    for (const auto& [e, v] : c) maxk = std::max(maxk, e.first);
    Poly2 base = Poly2::kappa().scaled(Rat(1, 2)) + Poly2::sigma();
    std::vector<Poly2> powers;
    powers.push_back(Poly2::constant(1));
    for (int i = 1; i <= maxk; ++i) powers.push_back(powers.back() * base);

    Poly2 out;
    for (const auto& [e, v] : c) {
        Poly2 smon;
        smon.c[{0, e.second}] = v;
        out = out + powers[static_cast<std::size_t>(e.first)] * smon;
    }
    return out;
}

std::optional<Poly2> Poly2::divide_exact(const Poly2& d) const {
    HERMOP_DOMAIN_CHECK(!d.is_zero(), "Poly2::divide_exact: zero divisor");
    Poly2 r = *this;
    Poly2 q;
    auto [dlt, dlc] = d.leading_term();
    while (!r.is_zero()) {
        auto [rlt, rlc] = r.leading_term();
        if (rlt.first < dlt.first || rlt.second < dlt.second) return std::nullopt;
        std::pair<int, int> e{rlt.first - dlt.first, rlt.second - dlt.second};
        Rat cq = rlc / dlc;
        Poly2 t;
        t.c[e] = cq;
        q = q + t;
        r = r - t * d;
    }
    return q;
}

std::string Poly2::to_string() const {
    if (c.empty()) return "0";
    std::vector<std::pair<std::pair<int, int>, Rat>> terms(c.begin(), c.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return term_less_graded_lex(b.first, a.first);
    });
    std::string out;
    bool first = true;
    for (const auto& [e, v] : terms) {
        Rat av = v < 0 ? Rat(-v) : v;
        std::string mon = monomial_string(e.first, e.second);
        std::string body;
        if (mon.empty())
            body = rat_to_string(av);
        else if (av == 1)
            body = mon;
        else
            body = rat_to_string(av) + "*" + mon;
        if (first) {
            out += (v < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (v < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

ParamField::ParamField(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    HERMOP_DOMAIN_CHECK(!den_.is_zero(), "ParamField: zero denominator");
    normalize();
}

void ParamField::normalize() {
    HERMOP_DOMAIN_CHECK(!den_.is_zero(), "ParamField: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly2::constant(1);
        return;
    }
    // Strip the largest monomial k^a*s^b dividing both.
    auto min_exps = [](const Poly2& p) {
        int mi = -1, mj = -1;
        for (const auto& [e, v] : p.c) {
            mi = (mi < 0) ? e.first : std::min(mi, e.first);
            mj = (mj < 0) ? e.second : std::min(mj, e.second);
        }
        return std::pair<int, int>{mi, mj};
    };
    auto [ni, nj] = min_exps(num_);
    auto [di, dj] = min_exps(den_);
    int a = std::min(ni, di), b = std::min(nj, dj);
    if (a > 0 || b > 0) {
        auto shift = [&](Poly2& p) {
            std::map<std::pair<int, int>, Rat> m;
            for (const auto& [e, v] : p.c) m.emplace(std::pair<int, int>{e.first - a, e.second - b}, v);
            p.c = std::move(m);
        };
        shift(num_);
        shift(den_);
    }
    if (!den_.is_one()) {
        if (auto q = num_.divide_exact(den_)) {
            num_ = *q;
            den_ = Poly2::constant(1);
        } else if (auto q2 = den_.divide_exact(num_)) {
            num_ = Poly2::constant(1);
            den_ = *q2;
        }
    }
    Rat lc = den_.leading_term().second;
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool ParamField::is_rational() const {
    return num_.is_constant() && den_.is_constant();
}

Rat ParamField::as_rational() const {
    HERMOP_DOMAIN_CHECK(is_rational(), "ParamField: not a rational constant: " + to_string());
    Rat n = num_.c.empty() ? Rat(0) : num_.c.begin()->second;
    Rat d = den_.c.begin()->second;
    return n / d;
}

ParamField ParamField::operator-() const {
    ParamField out = *this;
    out.num_ = -out.num_;
    return out;
}

ParamField ParamField::operator+(const ParamField& o) const {
    return ParamField(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ParamField ParamField::operator-(const ParamField& o) const {
    return ParamField(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

ParamField ParamField::operator*(const ParamField& o) const {
    return ParamField(num_ * o.num_, den_ * o.den_);
}

ParamField ParamField::operator/(const ParamField& o) const {
    HERMOP_DOMAIN_CHECK(!o.is_zero(), "ParamField: division by zero");
    return ParamField(num_ * o.den_, den_ * o.num_);
}

bool ParamField::operator==(const ParamField& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

Rat ParamField::eval(const Rat& kv, const Rat& sv) const {
    Rat d = den_.eval(kv, sv);
    HERMOP_DOMAIN_CHECK(!d.is_zero(), "ParamField::eval: denominator vanishes at the given point");
    return num_.eval(kv, sv) / d;
}

ParamField ParamField::substitute_kappa_half_plus_s() const {
    return ParamField(num_.substitute_kappa_half_plus_s(), den_.substitute_kappa_half_plus_s());
}

std::string ParamField::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

ParamField kappa_half_plus_s() {
    return ParamField(Poly2::kappa().scaled(Rat(1, 2)) + Poly2::sigma());
}

} // namespace hermop
