#pragma once

#include "n2alg/analysis.hpp"
#include "n2alg/verma.hpp"

#include <string>
#include <vector>

namespace n2alg {

// One verification record. Status is "pass", "fail", or "witness"; payload
// entries are ordered key/value pairs with every number rendered exactly.
struct CheckResult {
    std::string name;
    std::string status;
    std::vector<std::pair<std::string, std::string>> payload;

    bool ok() const { return status != "fail"; }
};

// Super-Jacobi residual sweep over all ordered generator triples with
// concrete indices of magnitude <= maxidx in the given sector.
std::vector<CheckResult> suite_algebra(Sector sector, int maxidx);

// Symbolic module-axiom verification for the four families.
std::vector<CheckResult> suite_modules();
CheckResult check_module_axioms(const ModuleSpec& spec, const std::string& label);

// The named engine identities: quadruple closed form, sextuple annihilation,
// K closed form, K-G+ commutator, connecting-map recurrences (with negative
// control), and the in-module crosscheck.
std::vector<CheckResult> suite_identities();

// [G^+ + G^-, G^+ + G^-] against the doubled one-supercurrent relation,
// all index pairs with doubled magnitude <= 2 * maxidx.
std::vector<CheckResult> suite_embedding(Sector sector, int maxidx);

CheckResult run_classify(const ModuleSpec& spec, int lo, int hi, int maxidx,
                         unsigned seed);
CheckResult run_character(Sector sector, int depth);
CheckResult run_submodules(const ModuleSpec& spec, int lo, int hi, int maxidx,
                           unsigned seed);
std::vector<CheckResult> run_intertwine(const ModuleSpec& spec, int lo, int hi,
                                        int maxidx, unsigned seed);

std::string to_json(const std::vector<CheckResult>& results);
std::string to_text(const std::vector<CheckResult>& results);

}  // namespace n2alg
