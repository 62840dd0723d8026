#pragma once

#include "n2alg/poly.hpp"
#include "n2alg/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace n2alg {

// Linear expression in index symbols plus a half-integer constant. The
// constant is stored doubled, so one integer lattice serves both the Ramond
// (integer) and Neveu-Schwarz (half-odd-integer) index sets. Canonical form:
// symbols sorted, zero coefficients dropped; equality is syntactic.
class IndexExpr {
public:
    IndexExpr() = default;
    static IndexExpr constant(std::int64_t value) { return from_doubled(2 * value); }
    static IndexExpr from_doubled(std::int64_t doubled) {
        IndexExpr e;
        e.const2_ = doubled;
        return e;
    }
    static IndexExpr sym(const std::string& name) {
        IndexExpr e;
        e.coeffs_[name] = 1;
        return e;
    }

    IndexExpr operator+(const IndexExpr& o) const;
    IndexExpr operator-(const IndexExpr& o) const;
    IndexExpr operator-() const;
    IndexExpr scaled(std::int64_t k) const;

    bool operator==(const IndexExpr& o) const {
        return const2_ == o.const2_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const IndexExpr& o) const { return !(*this == o); }
    bool operator<(const IndexExpr& o) const {
        if (coeffs_ != o.coeffs_) return coeffs_ < o.coeffs_;
        return const2_ < o.const2_;
    }

    bool is_zero() const { return coeffs_.empty() && const2_ == 0; }
    bool is_concrete() const { return coeffs_.empty(); }
    // Doubled value of a concrete expression.
    std::int64_t doubled() const { return const2_; }
    bool is_integer_valued() const { return is_concrete() && const2_ % 2 == 0; }
    bool is_half_odd() const { return is_concrete() && (const2_ % 2 != 0); }

    const std::map<std::string, std::int64_t>& coeffs() const { return coeffs_; }

    Poly to_poly() const;
    std::string str() const;

private:
    std::map<std::string, std::int64_t> coeffs_;
    std::int64_t const2_ = 0;
};

inline IndexExpr normalize(const IndexExpr& e) { return e; }  // stored canonical

}  // namespace n2alg
