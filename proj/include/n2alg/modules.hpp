#pragma once

#include "n2alg/algebra.hpp"

#include <optional>
#include <vector>

namespace n2alg {

// A(a,b): Virasoro intermediate series. At(a,b,c): the twisted
// Heisenberg-Virasoro version. Rab(a,b): length-1 cuspidal family of the full
// algebra. Rabc(a,b,c): the length-2 family.
enum class Family { A, At, Rab, Rabc };

enum class Slot { V, Vplus, Vminus, Vpm };

std::string to_string(Family f);
std::string to_string(Slot s);
std::optional<Family> family_from_name(const std::string& name);

// Test fixtures for negative controls: deliberately broken action tables.
enum class Corruption { None, RabDropGminusVminusRule };

struct ModuleSpec {
    Family family;
    Poly a, b, c;
    bool parity_flipped = false;
    bool simple_subquotient = false;
    Corruption corruption = Corruption::None;

    static ModuleSpec symbolic(Family f);
    static ModuleSpec concrete(Family f, const Rational& a, const Rational& b,
                               const Rational& c);
};

std::vector<Slot> slots_for(Family f);
bool family_has_slot(Family f, Slot s);
// 0 even, 1 odd in the family's standard grading, honoring parity_flipped.
int slot_parity(const ModuleSpec& spec, Slot s);

ModuleSpec parity_flip(ModuleSpec spec);

struct ModuleVector {
    struct Term {
        Slot slot;
        IndexExpr label;
        Poly coeff;
    };
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    void add(Slot slot, const IndexExpr& label, const Poly& coeff);
    void add_scaled(const ModuleVector& o, const Poly& scale);
    bool operator==(const ModuleVector& o) const;
    std::string str() const;
};

// The family's action table; C always acts as zero. Throws on a slot the
// family does not have or a generator kind outside the family's algebra.
ModuleVector act(const ModuleSpec& spec, const Generator& g, Slot slot,
                 const IndexExpr& label);
ModuleVector act(const ModuleSpec& spec, const Generator& g, const ModuleVector& v);
ModuleVector act(const ModuleSpec& spec, const AlgebraElement& e, const ModuleVector& v);

// Which generator kinds act on the family (besides C).
std::vector<GenKind> acting_kinds(Family f);

struct AxiomReport {
    struct Entry {
        GenKind x, y;
        Slot slot;
        ModuleVector residual;
    };
    std::vector<Entry> entries;
    bool pass = true;
    std::vector<Entry> failures() const;
};

// x(y v) - (-1)^{|x||y|} y(x v) - [x,y] v for every ordered pair of acting
// kinds with symbolic indices m, n and every slot with symbolic label i.
AxiomReport verify_axioms_symbolic(const ModuleSpec& spec);

}  // namespace n2alg
