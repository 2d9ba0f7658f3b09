#include "cfseq/multirat.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "cfseq/error.hpp"

namespace cfseq {

namespace {

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (const auto& [var, e] : b) m[var] += e;
    return m;
}

Rational monomial_eval(const Monomial& m, const std::map<std::string, Rational>& point) {
    Rational v(1);
    for (const auto& [var, e] : m) {
        auto it = point.find(var);
        if (it == point.end()) throw InputError("unbound variable: " + var);
        for (int k = 0; k < e; ++k) v *= it->second;
    }
    return v;
}

std::string monomial_str(const Monomial& m) {
    std::string s;
    for (const auto& [var, e] : m) {
        if (!s.empty()) s += "*";
        s += var;
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace

MultiPoly::MultiPoly(const Rational& c) {
    if (!is_zero(c)) terms_[Monomial{}] = c;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p;
    p.terms_[Monomial{{name, 1}}] = 1;
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.empty();
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw InputError("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!is_zero(c)) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly c = a;
    for (const auto& [m, v] : b.terms_) c.add_term(m, v);
    return c;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly MultiPoly::operator-() const { return scaled(Rational(-1)); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly c;
    for (const auto& [ma, va] : a.terms_)
        for (const auto& [mb, vb] : b.terms_) c.add_term(monomial_mul(ma, mb), va * vb);
    return c;
}

MultiPoly MultiPoly::scaled(const Rational& s) const {
    MultiPoly c;
    if (is_zero(s)) return c;
    for (const auto& [m, v] : terms_) c.terms_.emplace(m, v * s);
    return c;
}

Rational MultiPoly::content() const {
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& [m, v] : terms_) {
        num_gcd = gcd(num_gcd, numerator(v));
        den_lcm = lcm(den_lcm, denominator(v));
    }
    if (num_gcd == 0) return Rational(1);
    return Rational(abs(num_gcd), den_lcm);
}

Monomial MultiPoly::monomial_content() const {
    if (terms_.empty()) return {};
    Monomial m = terms_.begin()->first;
    for (const auto& [t, v] : terms_) {
        for (auto it = m.begin(); it != m.end();) {
            auto jt = t.find(it->first);
            int e = jt == t.end() ? 0 : jt->second;
            if (e == 0) {
                it = m.erase(it);
            } else {
                it->second = std::min(it->second, e);
                ++it;
            }
        }
        if (m.empty()) break;
    }
    return m;
}

MultiPoly MultiPoly::divided_by_monomial(const Monomial& m) const {
    if (m.empty()) return *this;
    MultiPoly c;
    for (const auto& [t, v] : terms_) {
        Monomial q = t;
        for (const auto& [var, e] : m) {
            auto it = q.find(var);
            if (it == q.end() || it->second < e)
                throw InputError("monomial does not divide polynomial");
            it->second -= e;
            if (it->second == 0) q.erase(it);
        }
        c.terms_.emplace(std::move(q), v);
    }
    return c;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& point) const {
    Rational acc(0);
    for (const auto& [m, v] : terms_) acc += v * monomial_eval(m, point);
    return acc;
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw InputError("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, v] = *it;
        bool first = s.empty();
        if (first) {
            if (v < 0) s += "-";
        } else {
            s += v < 0 ? " - " : " + ";
        }
        Rational a = abs(v);
        if (m.empty()) {
            s += to_string(a);
        } else {
            if (a != 1) s += to_string(a) + "*";
            s += monomial_str(m);
        }
    }
    return s;
}

MultiRat::MultiRat(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero_poly()) throw InputError("zero denominator in rational function");
    normalize();
}

void MultiRat::normalize() {
    if (num_.is_zero_poly()) {
        den_ = MultiPoly(Rational(1));
        return;
    }
    Monomial gn = num_.monomial_content();
    Monomial gd = den_.monomial_content();
    Monomial g;
    for (const auto& [var, e] : gn) {
        auto it = gd.find(var);
        if (it != gd.end()) g[var] = std::min(e, it->second);
    }
    if (!g.empty()) {
        num_ = num_.divided_by_monomial(g);
        den_ = den_.divided_by_monomial(g);
    }
    Rational cn = num_.content();
    Rational cd = den_.content();
    // gcd(a/b, c/d) = gcd(a,c)/lcm(b,d)
    Rational scale(gcd(numerator(cn), numerator(cd)), lcm(denominator(cn), denominator(cd)));
    if (den_.leading_coeff() < 0) scale = -scale;
    Rational inv = 1 / scale;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
}

Rational MultiRat::constant_value() const {
    return num_.constant_value() / den_.constant_value();
}

MultiRat operator+(const MultiRat& a, const MultiRat& b) {
    return MultiRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

MultiRat operator-(const MultiRat& a, const MultiRat& b) { return a + (-b); }

MultiRat MultiRat::operator-() const {
    MultiRat r = *this;
    r.num_ = -r.num_;
    return r;
}

MultiRat operator*(const MultiRat& a, const MultiRat& b) {
    return MultiRat(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const MultiRat& a, const MultiRat& b) { return multirat_eq(a, b); }

MultiRat MultiRat::reciprocal() const {
    if (num_.is_zero_poly()) throw InputError("inverse of zero rational function");
    return MultiRat(den_, num_);
}

Rational MultiRat::evaluate(const std::map<std::string, Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (is_zero(d)) throw Refusal("denominator vanishes at evaluation point: " + den_.str());
    return num_.evaluate(point) / d;
}

std::string MultiRat::str() const {
    if (den_ == MultiPoly(Rational(1))) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    if (den_.terms().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

bool multirat_eq(const MultiRat& f, const MultiRat& g) {
    return (f.num() * g.den() - g.num() * f.den()).is_zero_poly();
}

} // namespace cfseq
