#pragma once

#include "n2alg/linalg.hpp"
#include "n2alg/modules.hpp"

#include <map>
#include <string>
#include <vector>

namespace n2alg {

// Exact matrix realization of a module family on a finite label window.
// Labels outside [lo, hi] are dropped; sources whose true image can leave the
// window (the boundary band of width maxidx) are flagged and excluded from
// closure computations downstream.
struct WindowedModule {
    ModuleSpec spec;
    Rational pa, pb, pc;  // concrete parameters
    int lo = 0, hi = 0, maxidx = 1;

    std::vector<std::pair<Slot, int>> basis;  // (slot, label), column order
    std::map<std::pair<Slot, int>, size_t> index_of;
    std::vector<int> parity;      // per basis vector
    std::vector<bool> boundary;   // per basis vector
    std::vector<int> support;     // labels with a nonzero weight space

    // (kind, index) -> sparse matrix entries (row, col) -> value
    std::map<std::pair<GenKind, int>, std::map<std::pair<size_t, size_t>, Rational>>
        matrices;

    int interior_lo() const { return lo + maxidx; }
    int interior_hi() const { return hi - maxidx; }
    bool label_in_window(int i) const { return i >= lo && i <= hi; }
    bool label_interior(int i) const {
        return i >= interior_lo() && i <= interior_hi();
    }
    // Per-label dimension inside the window.
    size_t label_dim(int i) const;
};

WindowedModule instantiate_window(const ModuleSpec& spec, int lo, int hi, int maxidx);

std::string module_to_json(const WindowedModule& w);

// Weight-graded view of a windowed module (interior part) used by the
// submodule search and the intertwiner solver. The weight of label i is
// a + i; blocks act from label i to label i + m.
struct GradedOp {
    GenKind kind;
    int m;
    std::map<int, Matrix> blocks;  // from-label -> dim(i+m) x dim(i)
};

struct GradedModule {
    Rational a_offset;
    int lo = 0, hi = 0;                    // label range
    int interior_lo = 0, interior_hi = 0;  // labels unaffected by truncation
    std::map<int, size_t> dims;
    std::map<int, std::vector<int>> parities;  // per label, per coordinate
    std::vector<GradedOp> ops;
};

GradedModule as_graded(const WindowedModule& w);

}  // namespace n2alg
