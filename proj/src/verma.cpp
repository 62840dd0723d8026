#include "n2alg/verma.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace n2alg {

namespace {

int kind_rank(GenKind k) {
    switch (k) {
        case GenKind::L: return 0;
        case GenKind::H: return 1;
        case GenKind::Gplus: return 2;
        case GenKind::G: return 2;
        case GenKind::Gminus: return 3;
        case GenKind::C: return 4;
    }
    return 5;
}

// Normal-order key; concrete indices only.
std::pair<std::int64_t, int> order_key(const Generator& g) {
    return {g.index.doubled(), kind_rank(g.kind)};
}

// Creation generators of the sector, sorted in normal order, with doubled
// index magnitude bounded by max_doubled.
std::vector<Generator> creation_set(Sector sector, std::int64_t max_doubled) {
    std::vector<Generator> out;
    std::vector<GenKind> even_kinds, odd_kinds;
    if (is_n2(sector)) {
        even_kinds = {GenKind::L, GenKind::H};
        odd_kinds = {GenKind::Gplus, GenKind::Gminus};
    } else {
        even_kinds = {GenKind::L};
        odd_kinds = {GenKind::G};
    }
    for (std::int64_t d = -max_doubled; d <= 0; ++d) {
        if (d % 2 == 0 && d < 0)
            for (GenKind k : even_kinds) out.push_back(gen2(k, d, sector));
        bool odd_lattice_ok = is_ns(sector) ? (d % 2 != 0) : (d % 2 == 0);
        if (!odd_lattice_ok) continue;
        if (d < 0) {
            for (GenKind k : odd_kinds) out.push_back(gen2(k, d, sector));
        } else if (!is_ns(sector)) {
            // Ramond degree-0 creation operator: G_0^- (N=2) or G_0 (N=1).
            out.push_back(gen2(is_n2(sector) ? GenKind::Gminus : GenKind::G, 0, sector));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Generator& a, const Generator& b) { return order_key(a) < order_key(b); });
    return out;
}

}  // namespace

std::vector<PbwMonomial> pbw_basis(Sector sector, int level) {
    if (level < 0) throw std::invalid_argument("pbw_basis: negative level");
    std::int64_t target = is_ns(sector) ? level : 2 * static_cast<std::int64_t>(level);
    auto gens = creation_set(sector, target);
    std::vector<PbwMonomial> out;
    PbwMonomial acc;
    // Walk the creation set in normal order, consuming exactly `target`
    // doubled degree; a degree-0 odd factor may close any monomial.
    struct Rec {
        const std::vector<Generator>& gens;
        std::vector<PbwMonomial>& out;
        void go(size_t pos, std::int64_t remaining, PbwMonomial& acc) {
            if (remaining == 0) {
                out.push_back(acc);
                // optionally append a degree-0 factor (it sorts last)
                for (size_t i = pos; i < gens.size(); ++i) {
                    if (gens[i].index.doubled() == 0) {
                        acc.push_back(gens[i]);
                        out.push_back(acc);
                        acc.pop_back();
                    }
                }
                return;
            }
            for (size_t i = pos; i < gens.size(); ++i) {
                std::int64_t deg = -gens[i].index.doubled();
                if (deg == 0 || deg > remaining) continue;
                acc.push_back(gens[i]);
                go(is_odd_kind(gens[i].kind) ? i + 1 : i, remaining - deg, acc);
                acc.pop_back();
            }
        }
    } rec{gens, out};
    rec.go(0, target, acc);
    std::sort(out.begin(), out.end(), [](const PbwMonomial& a, const PbwMonomial& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return out;
}

std::vector<size_t> verma_weight_dims(Sector sector, int max_level) {
    std::vector<size_t> dims;
    for (int k = 0; k <= max_level; ++k) dims.push_back(pbw_basis(sector, k).size());
    return dims;
}

std::vector<Integer> character_series(Sector sector, int max_level) {
    std::int64_t dmax = is_ns(sector) ? max_level : 2 * static_cast<std::int64_t>(max_level);
    std::vector<Integer> s(dmax + 1, Integer(0));
    s[0] = 1;
    int even_count = is_n2(sector) ? 2 : 1;
    int odd_count = is_n2(sector) ? 2 : 1;
    // 1/(1-q^n) per even flavor
    for (std::int64_t n = 2; n <= dmax; n += 2)
        for (int e = 0; e < even_count; ++e)
            for (std::int64_t d = n; d <= dmax; ++d) s[d] += s[d - n];
    // (1+q^r) per odd flavor; Ramond r in {1,2,...}, NS r in {1/2,3/2,...}
    std::int64_t start = is_ns(sector) ? 1 : 2;
    for (std::int64_t r = start; r <= dmax; r += 2)
        for (int e = 0; e < odd_count; ++e)
            for (std::int64_t d = dmax; d >= r; --d) s[d] += s[d - r];
    // degree-0 odd generator in Ramond sectors: one factor of (1+1)
    if (!is_ns(sector))
        for (auto& v : s) v *= 2;
    // Project to the sector lattice levels.
    std::vector<Integer> out;
    std::int64_t step = is_ns(sector) ? 1 : 2;
    for (std::int64_t d = 0; d <= dmax; d += step) out.push_back(s[d]);
    return out;
}

namespace {

class VermaEngine {
public:
    explicit VermaEngine(const VermaState& st) : st_(st) {}

    PbwCombination apply(const Generator& g, const PbwMonomial& mono, const Poly& scale) {
        PbwCombination out;
        if (scale.is_zero()) return out;
        if (g.kind == GenKind::C) {
            add(out, mono, scale * st_.cc);
            return out;
        }
        if (mono.empty()) {
            vacuum(g, scale, out);
            return out;
        }
        const Generator x = mono.front();
        PbwMonomial rest(mono.begin() + 1, mono.end());
        // only creation operators may be prepended; degree-0 non-creation
        // generators (L_0, H_0, G_0^+) must commute through instead
        bool creation = g.index.doubled() < 0 ||
                        (g.index.doubled() == 0 &&
                         (g.kind == GenKind::Gminus || g.kind == GenKind::G));
        if (creation && order_key(g) < order_key(x)) {
            PbwMonomial m = mono;
            m.insert(m.begin(), g);
            add(out, m, scale);
            return out;
        }
        if (creation && order_key(g) == order_key(x) && !is_odd_kind(g.kind)) {
            PbwMonomial m = mono;
            m.insert(m.begin(), g);
            add(out, m, scale);
            return out;
        }
        if (g == x && is_odd_kind(g.kind)) {
            // g^2 = (1/2)[g,g]
            AlgebraElement sq = bracket(g, g);
            merge(out, apply_elem(sq, rest, scale.scaled(Rational(1, 2))));
            return out;
        }
        // g x = (-1)^{|g||x|} x g + [g, x]
        Poly sgn((parity(g.kind) && parity(x.kind)) ? -1 : 1);
        PbwCombination inner = apply(g, rest, scale * sgn);
        for (const auto& [m, c] : inner) merge(out, apply(x, m, c));
        merge(out, apply_elem(bracket(g, x), rest, scale));
        return out;
    }

    PbwCombination apply_elem(const AlgebraElement& e, const PbwMonomial& mono,
                              const Poly& scale) {
        PbwCombination out;
        if (scale.is_zero()) return out;
        for (const auto& [g, c] : e.body()) merge(out, apply(g, mono, scale * c));
        for (const auto& t : e.central()) {
            if (t.guard.is_zero()) add(out, mono, scale * t.coeff * st_.cc);
        }
        return out;
    }

private:
    void vacuum(const Generator& g, const Poly& scale, PbwCombination& out) {
        std::int64_t d = g.index.doubled();
        if (d > 0) return;
        if (d < 0) {
            add(out, PbwMonomial{g}, scale);
            return;
        }
        switch (g.kind) {
            case GenKind::L: add(out, {}, scale * st_.h); return;
            case GenKind::H: add(out, {}, scale * st_.hp); return;
            case GenKind::Gplus: return;  // G_0^+ v = 0
            case GenKind::Gminus:
            case GenKind::G: add(out, PbwMonomial{g}, scale); return;
            default: return;
        }
    }

    static void add(PbwCombination& out, const PbwMonomial& m, const Poly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = out.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }

    static void merge(PbwCombination& out, const PbwCombination& o) {
        for (const auto& [m, c] : o) add(out, m, c);
    }

    const VermaState& st_;
};

}  // namespace

PbwCombination verma_act(const Generator& g, const PbwMonomial& mono,
                         const VermaState& state) {
    if (g.sector != state.sector)
        throw std::invalid_argument("verma_act: sector mismatch");
    if (!g.index.is_concrete())
        throw std::invalid_argument("verma_act: concrete indices required");
    VermaEngine eng(state);
    return eng.apply(g, mono, Poly(1));
}

PbwCombination verma_act(const Generator& g, const PbwCombination& comb,
                         const VermaState& state) {
    PbwCombination out;
    VermaEngine eng(state);
    for (const auto& [m, c] : comb) {
        for (const auto& [m2, c2] : eng.apply(g, m, c)) {
            auto [it, inserted] = out.emplace(m2, c2);
            if (!inserted) {
                it->second += c2;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

std::string pbw_str(const PbwMonomial& m) {
    if (m.empty()) return "v";
    std::ostringstream os;
    for (const auto& g : m) os << g.str() << " ";
    os << "v";
    return os.str();
}

}  // namespace n2alg
