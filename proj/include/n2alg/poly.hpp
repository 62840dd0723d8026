#pragma once

#include "n2alg/rational.hpp"

#include <map>
#include <set>
#include <string>

namespace n2alg {

// Monomial: indeterminate name -> positive exponent. The empty monomial is 1.
using Monomial = std::map<std::string, int>;

// Multivariate polynomial over Q in canonical form: no zero coefficients,
// monomials kept in the map's fixed total order. Equality of the stored form
// is polynomial equality.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c);
    static Poly var(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (0 if absent).
    Rational constant_value() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return terms_ != o.terms_; }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    Poly scaled(const Rational& c) const;

    int total_degree() const;
    std::set<std::string> indeterminates() const;

    // Partial substitution; unbound indeterminates pass through.
    Poly substitute(const std::map<std::string, Poly>& bindings) const;
    Poly substitute(const std::map<std::string, Rational>& bindings) const;

    // Full evaluation; throws if an indeterminate is unbound.
    Rational evaluate(const std::map<std::string, Rational>& point) const;

    std::string str() const;

    // Adds c * m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

private:
    std::map<Monomial, Rational> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

std::string to_string(const Monomial& m);

}  // namespace n2alg
