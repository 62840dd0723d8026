#pragma once

#include "n2alg/algebra.hpp"

#include <vector>

namespace n2alg {

// Ordered product of generators; the leftmost factor acts last.
struct Word {
    std::vector<Generator> factors;
    Sector sector = Sector::N2Ramond;
};

// The annihilator layer of §-style reductions: L_m u_j = (a + b m + j) u_{m+j},
// H_m u_j = c u_{m+j}, G^-_m u_j = 0, C u_j = 0. Parameters may be symbolic
// polynomials.
struct BaseLayer {
    Poly a;
    Poly b;
    Poly c;
    Sector sector = Sector::N2Ramond;
};

inline BaseLayer symbolic_layer() {
    return BaseLayer{Poly::var("a"), Poly::var("b"), Poly::var("c")};
}

// Canonical reduced form: sum of ordered G^+ words applied to base labels.
// Words are sorted strictly by the syntactic index order with odd-swap signs;
// a repeated index kills the term.
struct NormalForm {
    struct Term {
        std::vector<IndexExpr> plus_word;  // strictly increasing, canonical
        IndexExpr label;
        Poly coeff;
    };
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(std::vector<IndexExpr> word, const IndexExpr& label, Poly coeff);
    void add_scaled(const NormalForm& o, const Poly& scale);
    bool operator==(const NormalForm& o) const;
    std::string str() const;
};

enum class Strategy { RightInnermost, LeftInnermost };

NormalForm reduce_on_base(const Word& w, const BaseLayer& layer, const IndexExpr& j,
                          Strategy strategy = Strategy::RightInnermost);

// K_{r,s} = [G^+_r, G^-_s] acting on u_i: coefficient and shifted label.
struct KAction {
    Poly coeff;
    IndexExpr label;
};
KAction k_action(const IndexExpr& r, const IndexExpr& s, const BaseLayer& layer,
                 const IndexExpr& i);

// Reduction of K_{r,s} applied to an already-reduced normal form via its
// expansion -2 L_{r+s} + (r-s) H_{r+s}.
NormalForm apply_k(const IndexExpr& r, const IndexExpr& s, const NormalForm& nf,
                   const BaseLayer& layer, Strategy strategy = Strategy::RightInnermost);
NormalForm apply_generator(const Generator& g, const NormalForm& nf,
                           const BaseLayer& layer,
                           Strategy strategy = Strategy::RightInnermost);

}  // namespace n2alg
