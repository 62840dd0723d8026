#pragma once

#include "n2alg/modules.hpp"
#include "n2alg/rewrite.hpp"
#include "n2alg/window.hpp"

#include <optional>
#include <string>
#include <vector>

namespace n2alg {

// Symbolic identity checks on the rewrite engine. Each residual must reduce
// to the empty normal form; a polynomial identity in the index symbols is an
// identity for all integer indices.

// G^-_{r1} G^-_{r2} G^+_{s1} G^+_{s2} u_i minus the closed form
// (2b+c)(2+c-2b)(s2-s1)(r1-r2) u_{i+r1+r2+s1+s2}.
NormalForm quad_word_residual();

// Full reduction of G^- G^- G^- G^+ G^+ G^+ u_i with six symbolic indices;
// the word annihilates the base layer identically.
NormalForm sextuple_word_reduction();

// k_action closed form versus step-by-step reduction of G^+_s then the
// bracket assembly, symbolic in r, s, i.
NormalForm k_closed_form_residual();

// (K_{r,s} G^+_t - G^+_t K_{r,s}) u_j minus 2(r-t) G^+_{r+s+t} u_j.
NormalForm k_gplus_commutator_residual();

// The odd connecting map between the even base layer (a, b, c) and the odd
// one (a, b_minus, c_minus): a constant map must satisfy the two recurrences
// coming from commuting it past L_m and H_m. Both residuals vanish exactly
// when b_minus = b - 1/2 and c_minus = c - 1.
struct ConnectingMapReport {
    Poly l_residual;
    Poly h_residual;
    bool pass() const { return l_residual.is_zero() && h_residual.is_zero(); }
};
ConnectingMapReport connecting_map_residuals(const Poly& b_minus, const Poly& c_minus);
ConnectingMapReport connecting_map_residuals();

// The quadruple word evaluated on the odd slot v- of the length-2 family by
// direct action composition, minus the same word reduced on a base layer
// with parameters (a, b - 1/2, c - 1). Zero iff the two paths agree.
ModuleVector quad_word_module_crosscheck();

// --- windowed structure analysis ---

// Graded subspace of the interior of a window: RREF rows per label, in the
// label-block coordinates of the GradedModule view.
struct Subspace {
    std::map<int, std::vector<Vec>> rows;

    size_t rank() const;
    bool is_zero() const { return rank() == 0; }
    bool contains(const Subspace& o) const;
    bool operator==(const Subspace& o) const;
};

// All maximal proper graded subspaces of the window interior invariant under
// every generator matrix, found by exact closure from coordinate and random
// seeds. An empty list is absence of a window witness, not a simplicity proof.
std::vector<Subspace> find_invariant_subspaces(const WindowedModule& w,
                                               unsigned seed = 12345);

// Re-verifies that s is closed under every interior-to-interior block of g.
bool verify_invariant(const GradedModule& g, const Subspace& s);

// The subspace as a graded module in its own right; throws if s is not
// invariant or a row is not parity-homogeneous.
GradedModule restrict_to(const GradedModule& g, const Subspace& s);

// Human-readable per-label summary against the window's slot names.
std::string describe_subspace(const WindowedModule& w, const Subspace& s);

// --- intertwiners ---

struct IntertwinerSolution {
    int shift = 0;                             // label shift from m1 to m2
    std::vector<int> core_labels;              // m1 labels carrying unknowns
    std::vector<std::map<int, Matrix>> basis;  // solution basis, blocks per label
    bool bijective = false;                    // some solution invertible on the core
};

// Solves phi g = g phi per weight block over the shared interior; nullopt if
// the weight lattices are not aligned (offset difference not an integer).
std::optional<IntertwinerSolution> find_intertwiners(const GradedModule& m1,
                                                     const GradedModule& m2,
                                                     bool parity_reversing);

// --- simplicity classifier ---

struct SimplicityVerdict {
    enum class Kind { Simple, NotSimple, Trivial };
    Kind kind;
    std::string criterion;                     // the rule that fired
    std::vector<std::string> witness_summary;  // one line per witness
    std::vector<Subspace> witnesses;
};

std::string to_string(SimplicityVerdict::Kind k);

// Verdict per the closed-form criteria; not-simple verdicts carry window
// witnesses from find_invariant_subspaces when attach_witness is set.
SimplicityVerdict classify_simplicity(const ModuleSpec& spec, int lo = -8, int hi = 8,
                                      int maxidx = 3, bool attach_witness = true,
                                      unsigned seed = 12345);

}  // namespace n2alg
