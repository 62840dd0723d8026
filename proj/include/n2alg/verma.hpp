#pragma once

#include "n2alg/algebra.hpp"

#include <map>
#include <vector>

namespace n2alg {

// Normal-ordered PBW monomial: factors sorted by index ascending, then
// kind L < H < G^+ < G^-, odd factors squarefree. The empty monomial is the
// highest-weight vector itself.
using PbwMonomial = std::vector<Generator>;

// Highest-weight data: L_0, H_0, C eigenvalues (h, hp, cc); positive modes
// and G_0^+ annihilate.
struct VermaState {
    Poly h;
    Poly hp;
    Poly cc;
    Sector sector = Sector::N2Ramond;
};

inline VermaState symbolic_verma(Sector sector = Sector::N2Ramond) {
    return VermaState{Poly::var("h"), Poly::var("hp"), Poly::var("cc"), sector};
}

// Depth is measured in lattice steps: whole integers for Ramond sectors,
// half-integers for Neveu-Schwarz (level k sits at weight depth k/2).
std::vector<PbwMonomial> pbw_basis(Sector sector, int level);

std::vector<size_t> verma_weight_dims(Sector sector, int max_level);

// Independent series oracle: coefficients of the PBW generating product
// (2 prod (1+q^n)^2/(1-q^n)^2 for N2-Ramond, and the sector analogues),
// expanded by power-series arithmetic rather than enumeration.
std::vector<Integer> character_series(Sector sector, int max_level);

using PbwCombination = std::map<PbwMonomial, Poly>;

PbwCombination verma_act(const Generator& g, const PbwMonomial& mono,
                         const VermaState& state);
PbwCombination verma_act(const Generator& g, const PbwCombination& comb,
                         const VermaState& state);

std::string pbw_str(const PbwMonomial& m);

}  // namespace n2alg
