#include "n2alg/modules.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace n2alg {

std::string to_string(Family f) {
    switch (f) {
        case Family::A: return "a";
        case Family::At: return "at";
        case Family::Rab: return "rab";
        case Family::Rabc: return "rabc";
    }
    return "?";
}

std::string to_string(Slot s) {
    switch (s) {
        case Slot::V: return "v";
        case Slot::Vplus: return "v+";
        case Slot::Vminus: return "v-";
        case Slot::Vpm: return "v+-";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "a") return Family::A;
    if (name == "at") return Family::At;
    if (name == "rab") return Family::Rab;
    if (name == "rabc") return Family::Rabc;
    return std::nullopt;
}

ModuleSpec ModuleSpec::symbolic(Family f) {
    return ModuleSpec{f, Poly::var("a"), Poly::var("b"), Poly::var("c")};
}

ModuleSpec ModuleSpec::concrete(Family f, const Rational& a, const Rational& b,
                                const Rational& c) {
    return ModuleSpec{f, Poly(a), Poly(b), Poly(c)};
}

std::vector<Slot> slots_for(Family f) {
    switch (f) {
        case Family::A:
        case Family::At: return {Slot::V};
        case Family::Rab: return {Slot::Vplus, Slot::Vminus};
        case Family::Rabc: return {Slot::V, Slot::Vplus, Slot::Vminus, Slot::Vpm};
    }
    return {};
}

bool family_has_slot(Family f, Slot s) {
    auto ss = slots_for(f);
    return std::find(ss.begin(), ss.end(), s) != ss.end();
}

int slot_parity(const ModuleSpec& spec, Slot s) {
    int p = 0;
    switch (spec.family) {
        case Family::A:
        case Family::At:
            p = 0;
            break;
        case Family::Rab:
            p = (s == Slot::Vminus) ? 1 : 0;
            break;
        case Family::Rabc:
            p = (s == Slot::Vplus || s == Slot::Vminus) ? 1 : 0;
            break;
    }
    return spec.parity_flipped ? 1 - p : p;
}

ModuleSpec parity_flip(ModuleSpec spec) {
    spec.parity_flipped = !spec.parity_flipped;
    return spec;
}

void ModuleVector::add(Slot slot, const IndexExpr& label, const Poly& coeff) {
    if (coeff.is_zero()) return;
    for (size_t k = 0; k < terms.size(); ++k) {
        if (terms[k].slot == slot && terms[k].label == label) {
            terms[k].coeff += coeff;
            if (terms[k].coeff.is_zero()) terms.erase(terms.begin() + k);
            return;
        }
    }
    terms.push_back({slot, label, coeff});
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        if (x.slot != y.slot) return x.slot < y.slot;
        return x.label < y.label;
    });
}

void ModuleVector::add_scaled(const ModuleVector& o, const Poly& scale) {
    for (const auto& t : o.terms) add(t.slot, t.label, t.coeff * scale);
}

bool ModuleVector::operator==(const ModuleVector& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].slot != o.terms[i].slot || terms[i].label != o.terms[i].label ||
            terms[i].coeff != o.terms[i].coeff)
            return false;
    }
    return true;
}

std::string ModuleVector::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.str() << ")*" << to_string(t.slot) << "[" << t.label.str()
           << "]";
    }
    return os.str();
}

std::vector<GenKind> acting_kinds(Family f) {
    switch (f) {
        case Family::A: return {GenKind::L};
        case Family::At: return {GenKind::L, GenKind::H};
        case Family::Rab:
        case Family::Rabc:
            return {GenKind::L, GenKind::H, GenKind::Gplus, GenKind::Gminus};
    }
    return {};
}

namespace {

Poly ip(const IndexExpr& e) { return e.to_poly(); }
Poly half() { return Poly(Rational(1, 2)); }

}  // namespace

ModuleVector act(const ModuleSpec& spec, const Generator& g, Slot slot,
                 const IndexExpr& label) {
    if (!family_has_slot(spec.family, slot))
        throw std::invalid_argument("slot " + to_string(slot) + " not in family " +
                                    to_string(spec.family));
    auto kinds = acting_kinds(spec.family);
    if (g.kind != GenKind::C &&
        std::find(kinds.begin(), kinds.end(), g.kind) == kinds.end())
        throw std::invalid_argument("generator " + to_string(g.kind) +
                                    " does not act on family " + to_string(spec.family));
    ModuleVector out;
    if (g.kind == GenKind::C) return out;  // C acts as zero throughout

    const Poly& a = spec.a;
    const Poly& b = spec.b;
    const Poly& c = spec.c;
    const Poly m = ip(g.index);
    const Poly i = ip(label);
    const IndexExpr target = label + g.index;

    switch (spec.family) {
        case Family::A:
        case Family::At:
            if (g.kind == GenKind::L) out.add(Slot::V, target, a + i + b * m);
            else out.add(Slot::V, target, c);  // H_m v_i = c v_{m+i}
            return out;

        case Family::Rab:
            switch (g.kind) {
                case GenKind::L:
                    if (slot == Slot::Vplus) out.add(slot, target, a + i + b * m);
                    else out.add(slot, target, a + i + (b - half()) * m);
                    return out;
                case GenKind::H:
                    if (slot == Slot::Vplus)
                        out.add(slot, target, Poly(2) - Poly(2) * b);
                    else out.add(slot, target, Poly(1) - Poly(2) * b);
                    return out;
                case GenKind::Gminus:
                    if (slot == Slot::Vplus) out.add(Slot::Vminus, target, Poly(1));
                    else if (spec.corruption == Corruption::RabDropGminusVminusRule)
                        out.add(Slot::Vplus, target, Poly(1));  // broken on purpose
                    return out;  // G^- v^- = 0
                case GenKind::Gplus:
                    if (slot == Slot::Vminus)
                        out.add(Slot::Vplus, target,
                                -(Poly(2) * a + (Poly(4) * b - Poly(2)) * m + Poly(2) * i));
                    return out;  // G^+ v^+ = 0
                default: return out;
            }

        case Family::Rabc: {
            switch (g.kind) {
                case GenKind::L:
                    if (slot == Slot::V) out.add(slot, target, a + i + b * m);
                    else if (slot == Slot::Vplus || slot == Slot::Vminus)
                        out.add(slot, target, a + i + (b - half()) * m);
                    else {
                        out.add(Slot::Vpm, target, a + i + (b - Poly(1)) * m);
                        out.add(Slot::V, target,
                                half() * (Poly(2) * b - c - Poly(2)) * m * m);
                    }
                    return out;
                case GenKind::H:
                    if (slot == Slot::V) out.add(slot, target, c);
                    else if (slot == Slot::Vplus) out.add(slot, target, c + Poly(1));
                    else if (slot == Slot::Vminus) out.add(slot, target, c - Poly(1));
                    else {
                        out.add(Slot::Vpm, target, c);
                        out.add(Slot::V, target, -m * (Poly(2) * b - c - Poly(2)));
                    }
                    return out;
                case GenKind::Gplus:
                    if (slot == Slot::V) out.add(Slot::Vplus, target, Poly(1));
                    else if (slot == Slot::Vminus) {
                        out.add(Slot::Vpm, target, Poly(1));
                        out.add(Slot::V, target, (c + Poly(2) - Poly(2) * b) * m);
                    } else if (slot == Slot::Vpm)
                        out.add(Slot::Vplus, target, (Poly(2) * b - c - Poly(2)) * m);
                    return out;  // G^+ v^+ = 0
                case GenKind::Gminus:
                    if (slot == Slot::V) out.add(Slot::Vminus, target, Poly(1));
                    else if (slot == Slot::Vplus) {
                        out.add(Slot::Vpm, target, Poly(-1));
                        out.add(Slot::V, target,
                                -(Poly(2) * a + Poly(2) * i + (Poly(2) * b + c) * m));
                    } else if (slot == Slot::Vpm)
                        out.add(Slot::Vminus, target,
                                -(Poly(2) * a + Poly(2) * i +
                                  (Poly(2) * b + c - Poly(2)) * m));
                    return out;  // G^- v^- = 0
                default: return out;
            }
        }
    }
    return out;
}

ModuleVector act(const ModuleSpec& spec, const Generator& g, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& t : v.terms)
        out.add_scaled(act(spec, g, t.slot, t.label), t.coeff);
    return out;
}

ModuleVector act(const ModuleSpec& spec, const AlgebraElement& e, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [g, coeff] : e.body())
        out.add_scaled(act(spec, g, v), coeff);
    // central terms drop: C acts as zero on these families
    return out;
}

AxiomReport verify_axioms_symbolic(const ModuleSpec& spec) {
    AxiomReport report;
    const Sector sec = Sector::N2Ramond;
    auto kinds = acting_kinds(spec.family);
    for (GenKind kx : kinds) {
        for (GenKind ky : kinds) {
            Generator x = gen_sym(kx, "m", sec);
            Generator y = gen_sym(ky, "n", sec);
            for (Slot slot : slots_for(spec.family)) {
                ModuleVector base;
                base.add(slot, IndexExpr::sym("i"), Poly(1));
                ModuleVector xy = act(spec, x, act(spec, y, base));
                ModuleVector yx = act(spec, y, act(spec, x, base));
                ModuleVector br = act(spec, bracket(x, y), base);
                Poly sign((parity(kx) && parity(ky)) ? 1 : -1);
                ModuleVector residual = xy;
                residual.add_scaled(yx, sign);
                residual.add_scaled(br, Poly(-1));
                if (!residual.is_zero()) report.pass = false;
                report.entries.push_back({kx, ky, slot, residual});
            }
        }
    }
    return report;
}

std::vector<AxiomReport::Entry> AxiomReport::failures() const {
    std::vector<Entry> out;
    for (const auto& e : entries)
        if (!e.residual.is_zero()) out.push_back(e);
    return out;
}

}  // namespace n2alg
