#pragma once

#include "n2alg/index_expr.hpp"
#include "n2alg/poly.hpp"

#include <string>
#include <vector>

namespace n2alg {

enum class Sector { N2Ramond, N2NeveuSchwarz, N1Ramond, N1NeveuSchwarz };

inline bool is_n2(Sector s) { return s == Sector::N2Ramond || s == Sector::N2NeveuSchwarz; }
inline bool is_ns(Sector s) {
    return s == Sector::N2NeveuSchwarz || s == Sector::N1NeveuSchwarz;
}

std::string to_string(Sector s);

enum class GenKind { L, H, Gplus, Gminus, G, C };

// 0 = even, 1 = odd.
inline int parity(GenKind k) {
    return (k == GenKind::Gplus || k == GenKind::Gminus || k == GenKind::G) ? 1 : 0;
}

inline bool is_odd_kind(GenKind k) { return parity(k) == 1; }

std::string to_string(GenKind k);

struct Generator {
    GenKind kind;
    IndexExpr index;
    Sector sector;

    auto key() const { return std::tuple(sector, kind, index); }
    bool operator==(const Generator& o) const { return key() == o.key(); }
    bool operator<(const Generator& o) const { return key() < o.key(); }
    std::string str() const;
};

// Throws if the kind does not exist in the sector or a concrete index is off
// the sector lattice (odd generators: integers in Ramond, half-odd in NS).
void validate(const Generator& g);

Generator gen(GenKind kind, std::int64_t index, Sector sector);
// Index given doubled (for Neveu-Schwarz half-odd indices).
Generator gen2(GenKind kind, std::int64_t doubled_index, Sector sector);
Generator gen_sym(GenKind kind, const std::string& index_symbol, Sector sector);
Generator gen_expr(GenKind kind, const IndexExpr& index, Sector sector);

// A central term survives only when its guard equals zero; concrete guards are
// resolved eagerly.
struct GuardedTerm {
    Poly coeff;
    IndexExpr guard;
};

class AlgebraElement {
public:
    AlgebraElement() = default;

    void add(const Generator& g, const Poly& coeff);
    void add_central(const Poly& coeff, const IndexExpr& guard);
    void add_scaled(const AlgebraElement& o, const Poly& scale);

    bool is_zero() const { return body_.empty() && central_.empty(); }
    const std::vector<std::pair<Generator, Poly>>& body() const { return body_; }
    const std::vector<GuardedTerm>& central() const { return central_; }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const Poly& c) const;

    std::string str() const;

private:
    // body_ kept sorted by generator, no zero coefficients; central_ merged
    // by guard.
    std::vector<std::pair<Generator, Poly>> body_;
    std::vector<GuardedTerm> central_;
};

// Super-bracket per the defining relations, convention [x,y] = -(-1)^{|x||y|}[y,x].
AlgebraElement bracket(const Generator& x, const Generator& y);

// Bilinear extensions; central parts of the element commute with everything.
AlgebraElement bracket(const Generator& x, const AlgebraElement& e);
AlgebraElement bracket(const AlgebraElement& e, const Generator& y);

// [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]]; the zero element iff the
// super Jacobi identity holds on the triple.
AlgebraElement super_jacobi_residual(const Generator& x, const Generator& y,
                                     const Generator& z);

enum class Subalgebra { Vir, T, Qplus, Qminus, S };

Subalgebra subalgebra_from_name(const std::string& name);
bool subalgebra_contains(Subalgebra which, const Generator& g);

// Residual of [G^+ + G^-, G^+ + G^-] at (p,q) against the doubled N=1
// relation; indices given doubled. Zero element iff the embedding closes.
AlgebraElement n1_embedding_check(std::int64_t p_doubled, std::int64_t q_doubled,
                                  Sector sector = Sector::N2Ramond);

}  // namespace n2alg
