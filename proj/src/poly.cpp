#include "n2alg/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace n2alg {

Poly::Poly(const Rational& c) {
    if (c != 0) terms_[Monomial{}] = c;
}

Poly::Poly(long c) {
    if (c != 0) terms_[Monomial{}] = Rational(c);
}

Poly Poly::var(const std::string& name) {
    Poly p;
    p.terms_[Monomial{{name, 1}}] = Rational(1);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.empty();
}

Rational Poly::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            for (const auto& [v, e] : m2) m[v] += e;
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_[m] = coeff * c;
    return r;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int md = 0;
        for (const auto& [v, e] : m) md += e;
        if (md > d) d = md;
    }
    return d;
}

std::set<std::string> Poly::indeterminates() const {
    std::set<std::string> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) s.insert(v);
    return s;
}

Poly Poly::substitute(const std::map<std::string, Poly>& bindings) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly term(c);
        for (const auto& [v, e] : m) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                Poly pv = Poly::var(v);
                for (int k = 0; k < e; ++k) term *= pv;
            } else {
                for (int k = 0; k < e; ++k) term *= it->second;
            }
        }
        r += term;
    }
    return r;
}

Poly Poly::substitute(const std::map<std::string, Rational>& bindings) const {
    std::map<std::string, Poly> b;
    for (const auto& [v, c] : bindings) b.emplace(v, Poly(c));
    return substitute(b);
}

Rational Poly::evaluate(const std::map<std::string, Rational>& point) const {
    Rational r(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("evaluate: unbound indeterminate " + v);
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        r += t;
    }
    return r;
}

std::string to_string(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : m) {
        if (!first) os << "*";
        first = false;
        os << v;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (m.empty()) {
            os << to_string(ac);
        } else {
            if (ac != 1) os << to_string(ac) << "*";
            os << to_string(m);
        }
    }
    return os.str();
}

}  // namespace n2alg
