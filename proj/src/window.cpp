#include "n2alg/window.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>

namespace n2alg {

namespace {

// If a concrete integer shift puts the module parameter a at zero on some
// label, that label carries the distinguished vector whose span (or whose
// complement) realizes the simple piece of a degenerate A / At module.
std::optional<int> zero_weight_label(const Rational& pa) {
    Rational neg = -pa;
    if (denominator(neg) != 1) return std::nullopt;
    Integer num = numerator(neg);
    if (num > 1000000 || num < -1000000) return std::nullopt;
    return static_cast<int>(num);
}

Rational const_value(const Poly& p) {
    if (!p.is_constant()) throw std::logic_error("window: non-constant coefficient");
    return p.constant_value();
}

}  // namespace

size_t WindowedModule::label_dim(int i) const {
    size_t n = 0;
    for (Slot s : slots_for(spec.family))
        if (index_of.count({s, i})) ++n;
    return n;
}

WindowedModule instantiate_window(const ModuleSpec& spec, int lo, int hi, int maxidx) {
    if (lo > hi) throw std::invalid_argument("window: lo > hi");
    if (maxidx < 1) throw std::invalid_argument("window: maxidx must be positive");
    if (!spec.a.is_constant() || !spec.b.is_constant() || !spec.c.is_constant())
        throw std::invalid_argument("window: parameters must be concrete");

    WindowedModule w;
    w.spec = spec;
    w.pa = spec.a.constant_value();
    w.pb = spec.b.constant_value();
    w.pc = spec.c.constant_value();
    w.lo = lo;
    w.hi = hi;
    w.maxidx = maxidx;

    // The only degenerate weight space handled here is the span of the label
    // where a + i = 0 in an A / At module; dropping that one basis vector and
    // every image onto it realizes the simple sub (b = 1) or quotient (b = 0).
    std::optional<int> dropped;
    if (spec.simple_subquotient &&
        (spec.family == Family::A || spec.family == Family::At)) {
        dropped = zero_weight_label(w.pa);
        if (dropped && !(*dropped >= lo && *dropped <= hi)) dropped = std::nullopt;
    }

    for (int i = lo; i <= hi; ++i) {
        if (dropped && *dropped == i) continue;
        for (Slot s : slots_for(spec.family)) {
            w.index_of[{s, i}] = w.basis.size();
            w.basis.push_back({s, i});
            w.parity.push_back(slot_parity(spec, s));
        }
    }

    std::set<int> support;
    for (const auto& [slot_label, col] : w.index_of) support.insert(slot_label.second);
    w.support.assign(support.begin(), support.end());

    w.boundary.resize(w.basis.size());
    for (size_t col = 0; col < w.basis.size(); ++col) {
        int i = w.basis[col].second;
        w.boundary[col] = (i < lo + maxidx) || (i > hi - maxidx);
    }

    for (GenKind kind : acting_kinds(spec.family)) {
        for (int m = -maxidx; m <= maxidx; ++m) {
            auto& mat = w.matrices[{kind, m}];
            for (size_t col = 0; col < w.basis.size(); ++col) {
                auto [slot, i] = w.basis[col];
                Generator g = gen(kind, m, Sector::N2Ramond);
                ModuleVector image = act(spec, g, slot, IndexExpr::constant(i));
                for (const auto& t : image.terms) {
                    if (!t.label.is_integer_valued())
                        throw std::logic_error("window: non-integer image label");
                    int j = static_cast<int>(t.label.doubled() / 2);
                    auto row_it = w.index_of.find({t.slot, j});
                    if (row_it == w.index_of.end()) continue;  // out of window or dropped
                    Rational val = const_value(t.coeff);
                    if (val != 0) mat[{row_it->second, col}] = val;
                }
            }
        }
    }
    return w;
}

GradedModule as_graded(const WindowedModule& w) {
    GradedModule g;
    g.a_offset = w.pa;
    g.lo = w.lo;
    g.hi = w.hi;
    g.interior_lo = w.interior_lo();
    g.interior_hi = w.interior_hi();
    for (int i : w.support) {
        size_t d = w.label_dim(i);
        g.dims[i] = d;
        std::vector<int> par;
        for (Slot s : slots_for(w.spec.family)) {
            auto it = w.index_of.find({s, i});
            if (it != w.index_of.end()) par.push_back(w.parity[it->second]);
        }
        g.parities[i] = par;
    }
    // Per-label column offsets within the flat basis.
    std::map<int, size_t> base;
    for (size_t col = 0; col < w.basis.size(); ++col) {
        int i = w.basis[col].second;
        if (!base.count(i)) base[i] = col;
    }
    for (const auto& [key, mat] : w.matrices) {
        GradedOp op;
        op.kind = key.first;
        op.m = key.second;
        for (int i : w.support) {
            int j = i + op.m;
            auto dj = g.dims.find(j);
            if (dj == g.dims.end()) continue;
            Matrix block = zero_matrix(dj->second, g.dims.at(i));
            for (const auto& [rc, val] : mat) {
                auto [row, col] = rc;
                if (w.basis[col].second != i || w.basis[row].second != j) continue;
                block[row - base.at(j)][col - base.at(i)] = val;
            }
            op.blocks[i] = std::move(block);
        }
        g.ops.push_back(std::move(op));
    }
    return g;
}

std::string module_to_json(const WindowedModule& w) {
    nlohmann::ordered_json j;
    j["family"] = to_string(w.spec.family);
    j["a"] = to_string(w.pa);
    j["b"] = to_string(w.pb);
    j["c"] = to_string(w.pc);
    j["window"] = {w.lo, w.hi};
    j["max_index"] = w.maxidx;
    j["dimension"] = w.basis.size();
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (size_t col = 0; col < w.basis.size(); ++col) {
        nlohmann::ordered_json b;
        b["slot"] = to_string(w.basis[col].first);
        b["label"] = w.basis[col].second;
        b["parity"] = w.parity[col];
        b["boundary"] = static_cast<bool>(w.boundary[col]);
        basis.push_back(std::move(b));
    }
    j["basis"] = std::move(basis);
    nlohmann::ordered_json mats = nlohmann::ordered_json::array();
    for (const auto& [key, mat] : w.matrices) {
        nlohmann::ordered_json m;
        m["generator"] = to_string(key.first);
        m["index"] = key.second;
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto& [rc, val] : mat)
            entries.push_back({rc.first, rc.second, to_string(val)});
        m["entries"] = std::move(entries);
        mats.push_back(std::move(m));
    }
    j["matrices"] = std::move(mats);
    return j.dump(2);
}

}  // namespace n2alg
