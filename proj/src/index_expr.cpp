#include "n2alg/index_expr.hpp"

#include <sstream>

namespace n2alg {

IndexExpr IndexExpr::operator+(const IndexExpr& o) const {
    IndexExpr r = *this;
    r.const2_ += o.const2_;
    for (const auto& [v, c] : o.coeffs_) {
        auto [it, inserted] = r.coeffs_.emplace(v, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) r.coeffs_.erase(it);
        }
    }
    return r;
}

IndexExpr IndexExpr::operator-() const {
    IndexExpr r;
    r.const2_ = -const2_;
    for (const auto& [v, c] : coeffs_) r.coeffs_[v] = -c;
    return r;
}

IndexExpr IndexExpr::operator-(const IndexExpr& o) const { return *this + (-o); }

IndexExpr IndexExpr::scaled(std::int64_t k) const {
    IndexExpr r;
    if (k == 0) return r;
    r.const2_ = const2_ * k;
    for (const auto& [v, c] : coeffs_) r.coeffs_[v] = c * k;
    return r;
}

Poly IndexExpr::to_poly() const {
    Poly p(Rational(const2_, 2));
    for (const auto& [v, c] : coeffs_) p += Poly(c) * Poly::var(v);
    return p;
}

std::string IndexExpr::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : coeffs_) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        first = false;
        std::int64_t ac = c < 0 ? -c : c;
        if (ac != 1) os << ac << "*";
        os << v;
    }
    if (const2_ != 0 || first) {
        std::int64_t v = const2_;
        if (!first) os << (v < 0 ? "-" : "+");
        else if (v < 0) os << "-";
        std::int64_t av = v < 0 ? -v : v;
        if (av % 2 == 0) os << (av / 2);
        else os << av << "/2";
    }
    return os.str();
}

}  // namespace n2alg
