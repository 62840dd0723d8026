#include "n2alg/rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace n2alg {

void NormalForm::add_term(std::vector<IndexExpr> word, const IndexExpr& label,
                          Poly coeff) {
    if (coeff.is_zero()) return;
    // Sort the odd word with a sign per transposition; equal indices square
    // to zero.
    for (size_t i = 1; i < word.size(); ++i) {
        for (size_t j = i; j > 0 && !(word[j - 1] < word[j]); --j) {
            if (word[j - 1] == word[j]) return;
            std::swap(word[j - 1], word[j]);
            coeff = -coeff;
        }
    }
    for (auto& t : terms) {
        if (t.plus_word == word && t.label == label) {
            t.coeff += coeff;
            if (t.coeff.is_zero()) {
                terms.erase(terms.begin() + (&t - terms.data()));
            }
            return;
        }
    }
    terms.push_back({std::move(word), label, std::move(coeff)});
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        if (x.plus_word != y.plus_word) return x.plus_word < y.plus_word;
        return x.label < y.label;
    });
}

void NormalForm::add_scaled(const NormalForm& o, const Poly& scale) {
    for (const auto& t : o.terms) add_term(t.plus_word, t.label, t.coeff * scale);
}

bool NormalForm::operator==(const NormalForm& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].plus_word != o.terms[i].plus_word) return false;
        if (terms[i].label != o.terms[i].label) return false;
        if (terms[i].coeff != o.terms[i].coeff) return false;
    }
    return true;
}

std::string NormalForm::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.str() << ")*";
        for (const auto& idx : t.plus_word) os << "G+[" << idx.str() << "]";
        os << "u[" << t.label.str() << "]";
    }
    return os.str();
}

namespace {

struct WorkTerm {
    std::vector<Generator> word;
    IndexExpr label;
    Poly coeff;
};

// Well-founded measure: lexicographic (length, # of non-G+ factors with a G+
// strictly to their right, counted with multiplicity).
std::pair<size_t, size_t> measure(const std::vector<Generator>& w) {
    size_t crossings = 0, plus_seen = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->kind == GenKind::Gplus) ++plus_seen;
        else crossings += plus_seen;
    }
    return {w.size(), crossings};
}

bool base_reducible(const std::vector<Generator>& w) {
    if (w.empty()) return false;
    return w.back().kind != GenKind::Gplus;
}

bool pair_reducible(const std::vector<Generator>& w, size_t i) {
    if (w[i + 1].kind != GenKind::Gplus) return false;
    return w[i].kind != GenKind::Gplus;
}

// All rewrite positions of a word: position w.size()-1 with a non-G+ last
// factor means base evaluation; position i < size-1 means the pair (i, i+1).
std::vector<size_t> positions(const std::vector<Generator>& w) {
    std::vector<size_t> out;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (pair_reducible(w, i)) out.push_back(i);
    if (base_reducible(w)) out.push_back(w.size() - 1);
    return out;
}

class Reducer {
public:
    Reducer(const BaseLayer& layer, Strategy strategy)
        : layer_(layer), strategy_(strategy) {}

    NormalForm run(std::deque<WorkTerm> pending) {
        NormalForm out;
        while (!pending.empty()) {
            WorkTerm t = std::move(pending.front());
            pending.pop_front();
            if (t.coeff.is_zero()) continue;
            auto pos = positions(t.word);
            if (pos.empty()) {
                std::vector<IndexExpr> word;
                word.reserve(t.word.size());
                for (const auto& g : t.word) word.push_back(g.index);
                out.add_term(std::move(word), t.label, std::move(t.coeff));
                continue;
            }
            size_t p = strategy_ == Strategy::LeftInnermost ? pos.front() : pos.back();
            auto before = measure(t.word);
            for (auto& nt : rewrite_at(t, p)) {
                assert(measure(nt.word) < before);
                pending.push_front(std::move(nt));
            }
        }
        return out;
    }

private:
    std::vector<WorkTerm> rewrite_at(const WorkTerm& t, size_t p) {
        const auto& w = t.word;
        if (p == w.size() - 1 && base_reducible(w)) return eval_base(t);
        return swap_pair(t, p);
    }

    std::vector<WorkTerm> eval_base(const WorkTerm& t) {
        const Generator& g = t.word.back();
        std::vector<Generator> rest(t.word.begin(), t.word.end() - 1);
        switch (g.kind) {
            case GenKind::L: {
                Poly c = layer_.a + layer_.b * g.index.to_poly() + t.label.to_poly();
                return {{std::move(rest), t.label + g.index, t.coeff * c}};
            }
            case GenKind::H:
                return {{std::move(rest), t.label + g.index, t.coeff * layer_.c}};
            case GenKind::Gminus:
            case GenKind::C:
                return {};  // annihilated / central acts as zero
            default:
                throw std::logic_error("unexpected base factor");
        }
    }

    // Pair (x, G^+_p) at positions (p, p+1) with x even or G^-.
    std::vector<WorkTerm> swap_pair(const WorkTerm& t, size_t i) {
        const Generator x = t.word[i];
        const Generator gp = t.word[i + 1];
        std::vector<WorkTerm> out;

        // Swapped term: G^+ moves left past x.
        {
            WorkTerm s = t;
            std::swap(s.word[i], s.word[i + 1]);
            if (x.kind == GenKind::Gminus) s.coeff = -s.coeff;
            out.push_back(std::move(s));
        }

        // Bracket term(s): replace the pair by [x, G^+] (even x) or by the
        // anticommutator K = [G^+_p, G^-_r] expansion (x odd); central terms
        // vanish on the base layer.
        auto splice = [&](const Generator& repl, Poly scale) {
            if (scale.is_zero()) return;
            WorkTerm s;
            s.word.assign(t.word.begin(), t.word.begin() + i);
            s.word.push_back(repl);
            s.word.insert(s.word.end(), t.word.begin() + i + 2, t.word.end());
            s.label = t.label;
            s.coeff = t.coeff * scale;
            out.push_back(std::move(s));
        };

        IndexExpr sum = x.index + gp.index;
        switch (x.kind) {
            case GenKind::L:
                // [L_m, G^+_p] = (p - m/2) G^+_{p+m}
                splice(gen_expr(GenKind::Gplus, sum, x.sector),
                       gp.index.to_poly() - x.index.to_poly().scaled(Rational(1, 2)));
                break;
            case GenKind::H:
                splice(gen_expr(GenKind::Gplus, sum, x.sector), Poly(1));
                break;
            case GenKind::C:
                break;
            case GenKind::Gminus:
                // G^-_r G^+_p = K_{p,r} - G^+_p G^-_r,
                // K_{p,r} = -2 L_{p+r} + (p - r) H_{p+r}.
                splice(gen_expr(GenKind::L, sum, x.sector), Poly(-2));
                splice(gen_expr(GenKind::H, sum, x.sector),
                       gp.index.to_poly() - x.index.to_poly());
                break;
            default:
                throw std::logic_error("unexpected pair head");
        }
        return out;
    }

    const BaseLayer& layer_;
    Strategy strategy_;
};

}  // namespace

NormalForm reduce_on_base(const Word& w, const BaseLayer& layer, const IndexExpr& j,
                          Strategy strategy) {
    for (const auto& f : w.factors) {
        if (f.sector != layer.sector)
            throw std::invalid_argument("reduce_on_base: sector mismatch");
        if (f.kind == GenKind::G)
            throw std::invalid_argument("reduce_on_base: N=1 generator on an N=2 layer");
    }
    Reducer r(layer, strategy);
    return r.run({WorkTerm{w.factors, j, Poly(1)}});
}

KAction k_action(const IndexExpr& r, const IndexExpr& s, const BaseLayer& layer,
                 const IndexExpr& i) {
    IndexExpr rs = r + s;
    Poly coeff = (layer.a + layer.b * rs.to_poly() + i.to_poly()).scaled(Rational(-2)) +
                 (r.to_poly() - s.to_poly()) * layer.c;
    return {coeff, rs + i};
}

NormalForm apply_generator(const Generator& g, const NormalForm& nf,
                           const BaseLayer& layer, Strategy strategy) {
    Reducer red(layer, strategy);
    std::deque<WorkTerm> pending;
    for (const auto& t : nf.terms) {
        WorkTerm wt;
        wt.word.push_back(g);
        for (const auto& idx : t.plus_word)
            wt.word.push_back(gen_expr(GenKind::Gplus, idx, layer.sector));
        wt.label = t.label;
        wt.coeff = t.coeff;
        pending.push_back(std::move(wt));
    }
    return red.run(std::move(pending));
}

NormalForm apply_k(const IndexExpr& r, const IndexExpr& s, const NormalForm& nf,
                   const BaseLayer& layer, Strategy strategy) {
    IndexExpr rs = r + s;
    NormalForm out;
    NormalForm viaL =
        apply_generator(gen_expr(GenKind::L, rs, layer.sector), nf, layer, strategy);
    NormalForm viaH =
        apply_generator(gen_expr(GenKind::H, rs, layer.sector), nf, layer, strategy);
    out.add_scaled(viaL, Poly(-2));
    out.add_scaled(viaH, r.to_poly() - s.to_poly());
    return out;
}

}  // namespace n2alg
