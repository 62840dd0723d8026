#include "n2alg/report.hpp"

#include <json.hpp>

#include <sstream>

namespace n2alg {

namespace {

std::vector<Generator> sector_generators(Sector sector, int maxidx) {
    std::vector<Generator> gens;
    std::vector<GenKind> even = {GenKind::L};
    std::vector<GenKind> odd;
    if (is_n2(sector)) {
        even.push_back(GenKind::H);
        odd = {GenKind::Gplus, GenKind::Gminus};
    } else {
        odd = {GenKind::G};
    }
    for (GenKind k : even)
        for (int m = -maxidx; m <= maxidx; ++m) gens.push_back(gen(k, m, sector));
    for (GenKind k : odd) {
        if (is_ns(sector)) {
            for (int d = -2 * maxidx + 1; d <= 2 * maxidx - 1; d += 2)
                gens.push_back(gen2(k, d, sector));
        } else {
            for (int m = -maxidx; m <= maxidx; ++m) gens.push_back(gen(k, m, sector));
        }
    }
    gens.push_back(gen(GenKind::C, 0, sector));
    return gens;
}

std::string rational_or_symbolic(const Poly& p) {
    return p.is_constant() ? to_string(p.constant_value()) : std::string("symbolic");
}

void add_params(CheckResult& r, const ModuleSpec& spec) {
    r.payload.push_back({"family", to_string(spec.family)});
    r.payload.push_back({"a", rational_or_symbolic(spec.a)});
    r.payload.push_back({"b", rational_or_symbolic(spec.b)});
    r.payload.push_back({"c", rational_or_symbolic(spec.c)});
}

}  // namespace

std::vector<CheckResult> suite_algebra(Sector sector, int maxidx) {
    auto gens = sector_generators(sector, maxidx);
    size_t total = 0, bad = 0;
    std::string first_bad;
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (const auto& z : gens) {
                ++total;
                if (!super_jacobi_residual(x, y, z).is_zero()) {
                    ++bad;
                    if (first_bad.empty())
                        first_bad = x.str() + "," + y.str() + "," + z.str();
                }
            }
    CheckResult r;
    r.name = "jacobi-sweep-" + to_string(sector);
    r.status = (bad == 0) ? "pass" : "fail";
    r.payload.push_back({"max_index", std::to_string(maxidx)});
    r.payload.push_back({"triples", std::to_string(total)});
    r.payload.push_back({"failures", std::to_string(bad)});
    if (!first_bad.empty()) r.payload.push_back({"first_failure", first_bad});
    return {r};
}

CheckResult check_module_axioms(const ModuleSpec& spec, const std::string& label) {
    AxiomReport rep = verify_axioms_symbolic(spec);
    CheckResult r;
    r.name = "module-axioms-" + label;
    r.status = rep.pass ? "pass" : "fail";
    add_params(r, spec);
    r.payload.push_back({"pairs_checked", std::to_string(rep.entries.size())});
    for (const auto& f : rep.failures())
        r.payload.push_back({"residual " + to_string(f.x) + "," + to_string(f.y) +
                                 " on " + to_string(f.slot),
                             f.residual.str()});
    return r;
}

std::vector<CheckResult> suite_modules() {
    std::vector<CheckResult> out;
    for (Family f : {Family::A, Family::At, Family::Rab, Family::Rabc})
        out.push_back(check_module_axioms(ModuleSpec::symbolic(f), to_string(f)));
    return out;
}

std::vector<CheckResult> suite_identities() {
    std::vector<CheckResult> out;
    auto push = [&out](const std::string& name, bool pass, const std::string& residual) {
        CheckResult r;
        r.name = name;
        r.status = pass ? "pass" : "fail";
        r.payload.push_back({"residual", residual});
        out.push_back(std::move(r));
    };
    {
        NormalForm nf = quad_word_residual();
        push("quad-word-closed-form", nf.is_zero(), nf.str());
    }
    {
        NormalForm nf = sextuple_word_reduction();
        push("sextuple-word-annihilation", nf.is_zero(), nf.str());
    }
    {
        NormalForm nf = k_closed_form_residual();
        push("k-closed-form", nf.is_zero(), nf.str());
    }
    {
        NormalForm nf = k_gplus_commutator_residual();
        push("k-gplus-commutator", nf.is_zero(), nf.str());
    }
    {
        auto rep = connecting_map_residuals();
        push("connecting-map-recurrences", rep.pass(),
             rep.l_residual.str() + " | " + rep.h_residual.str());
        auto neg = connecting_map_residuals(Poly::var("b"), Poly::var("c") - Poly(1));
        // the deliberately wrong shift must be rejected
        push("connecting-map-negative-control", !neg.pass(), neg.l_residual.str());
    }
    {
        ModuleVector mv = quad_word_module_crosscheck();
        push("quad-word-module-crosscheck", mv.is_zero(), mv.str());
    }
    return out;
}

std::vector<CheckResult> suite_embedding(Sector sector, int maxidx) {
    CheckResult r;
    r.name = "one-supercurrent-embedding-" + to_string(sector);
    size_t total = 0, bad = 0;
    int start = is_ns(sector) ? -2 * maxidx + 1 : -2 * maxidx;
    for (int p = start; p <= 2 * maxidx; p += 2)
        for (int q = start; q <= 2 * maxidx; q += 2) {
            ++total;
            if (!n1_embedding_check(p, q, sector).is_zero()) ++bad;
        }
    r.status = (bad == 0) ? "pass" : "fail";
    r.payload.push_back({"pairs", std::to_string(total)});
    r.payload.push_back({"failures", std::to_string(bad)});
    return {r};
}

CheckResult run_classify(const ModuleSpec& spec, int lo, int hi, int maxidx,
                         unsigned seed) {
    SimplicityVerdict v = classify_simplicity(spec, lo, hi, maxidx, true, seed);
    CheckResult r;
    r.name = "classify";
    r.status = (v.kind == SimplicityVerdict::Kind::Simple) ? "pass" : "witness";
    add_params(r, spec);
    r.payload.push_back({"verdict", to_string(v.kind)});
    r.payload.push_back({"criterion", v.criterion});
    r.payload.push_back({"witness_count", std::to_string(v.witnesses.size())});
    for (size_t i = 0; i < v.witness_summary.size(); ++i)
        r.payload.push_back({"witness_" + std::to_string(i), v.witness_summary[i]});
    return r;
}

CheckResult run_character(Sector sector, int depth) {
    auto dims = verma_weight_dims(sector, depth);
    auto oracle = character_series(sector, depth);
    bool ok = dims.size() == oracle.size();
    for (size_t k = 0; ok && k < dims.size(); ++k)
        ok = (Integer(static_cast<long>(dims[k])) == oracle[k]);
    CheckResult r;
    r.name = "character-" + to_string(sector);
    r.status = ok ? "pass" : "fail";
    auto render = [](const auto& xs) {
        std::ostringstream os;
        for (size_t k = 0; k < xs.size(); ++k) {
            if (k) os << " ";
            os << xs[k];
        }
        return os.str();
    };
    r.payload.push_back({"depth", std::to_string(depth)});
    r.payload.push_back({"enumerated", render(dims)});
    r.payload.push_back({"series", render(oracle)});
    return r;
}

CheckResult run_submodules(const ModuleSpec& spec, int lo, int hi, int maxidx,
                           unsigned seed) {
    WindowedModule w = instantiate_window(spec, lo, hi, maxidx);
    auto subs = find_invariant_subspaces(w, seed);
    CheckResult r;
    r.name = "submodules";
    r.status = subs.empty() ? "pass" : "witness";
    add_params(r, spec);
    r.payload.push_back({"window", std::to_string(lo) + ":" + std::to_string(hi)});
    r.payload.push_back({"max_index", std::to_string(maxidx)});
    r.payload.push_back({"witness_count", std::to_string(subs.size())});
    for (size_t i = 0; i < subs.size(); ++i)
        r.payload.push_back({"witness_" + std::to_string(i),
                             describe_subspace(w, subs[i])});
    return r;
}

std::vector<CheckResult> run_intertwine(const ModuleSpec& spec, int lo, int hi,
                                        int maxidx, unsigned seed) {
    std::vector<CheckResult> out;
    WindowedModule w = instantiate_window(spec, lo, hi, maxidx);
    GradedModule g = as_graded(w);

    {
        ModuleSpec shifted = spec;
        shifted.a = spec.a + Poly(1);
        GradedModule g2 = as_graded(instantiate_window(shifted, lo, hi, maxidx));
        auto sol = find_intertwiners(g, g2, false);
        CheckResult r;
        r.name = "shift-isomorphism";
        add_params(r, spec);
        r.status = (sol && !sol->basis.empty() && sol->bijective) ? "pass" : "fail";
        if (sol) {
            r.payload.push_back({"solution_dim", std::to_string(sol->basis.size())});
            r.payload.push_back({"bijective", sol->bijective ? "true" : "false"});
            r.payload.push_back({"label_shift", std::to_string(sol->shift)});
        }
        out.push_back(std::move(r));
    }
    {
        GradedModule g2 = as_graded(instantiate_window(parity_flip(spec), lo, hi, maxidx));
        auto sol = find_intertwiners(g, g2, true);
        CheckResult r;
        r.name = "parity-flip-isomorphism";
        add_params(r, spec);
        r.status = (sol && !sol->basis.empty() && sol->bijective) ? "pass" : "fail";
        if (sol) r.payload.push_back({"solution_dim", std::to_string(sol->basis.size())});
        out.push_back(std::move(r));
    }
    if (spec.family == Family::Rabc && spec.a.is_constant() && spec.b.is_constant() &&
        spec.c.is_constant()) {
        Rational b = spec.b.constant_value(), c = spec.c.constant_value();
        bool degenerate = (Rational(2) * b - c == 2) || (Rational(2) * b + c == 2);
        if (degenerate) {
            auto subs = find_invariant_subspaces(w, seed);
            CheckResult r;
            r.name = "degenerate-subquotient-match";
            add_params(r, spec);
            r.status = "fail";
            size_t matches = 0;
            for (size_t si = 0; si < subs.size(); ++si) {
                GradedModule sub = restrict_to(g, subs[si]);
                for (int k = -6; k <= 6; ++k) {
                    Rational bstar(k, 2);
                    ModuleSpec target = ModuleSpec::concrete(
                        Family::Rab, spec.a.constant_value(), bstar, 0);
                    GradedModule gt =
                        as_graded(instantiate_window(target, lo, hi, maxidx));
                    for (bool rev : {false, true}) {
                        auto sol = find_intertwiners(sub, gt, rev);
                        if (sol && !sol->basis.empty() && sol->bijective) {
                            ++matches;
                            r.payload.push_back(
                                {"witness_" + std::to_string(si) + "_matches",
                                 "length-1 family at b = " + to_string(bstar) +
                                     (rev ? " (parity-reversed)" : "")});
                        }
                    }
                }
            }
            if (matches > 0) r.status = "pass";
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::string to_json(const std::vector<CheckResult>& results) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["status"] = r.status;
        nlohmann::ordered_json payload = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.payload) payload[k] = v;
        j["payload"] = std::move(payload);
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::string to_text(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << r.status << "  " << r.name << "\n";
        for (const auto& [k, v] : r.payload) os << "    " << k << ": " << v << "\n";
    }
    return os.str();
}

}  // namespace n2alg
